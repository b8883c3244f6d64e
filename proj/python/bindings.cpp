#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "softint/enumerate.hpp"
#include "softint/error.hpp"
#include "softint/io.hpp"
#include "softint/theorems.hpp"

namespace py = pybind11;
using namespace softint;

namespace {

struct PyGroup {
  std::string spec;
  GroupPtr g;
};

GroupPtr as_group(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_group_spec(o.cast<std::string>());
  return o.cast<const PyGroup&>().g;
}

std::string spec_of(const py::object& o) {
  if (py::isinstance<py::str>(o)) return o.cast<std::string>();
  return o.cast<const PyGroup&>().spec;
}

UniversePtr universe_of(const py::object& labels) {
  if (py::isinstance<py::int_>(labels)) return Universe::of_size(labels.cast<std::size_t>());
  return Universe::make(labels.cast<std::vector<std::string>>());
}

Mask mask_of(const Universe& u, const py::handle& v) {
  if (py::isinstance<py::int_>(v)) return v.cast<Mask>();
  Mask m = 0;
  for (auto item : v) {
    const auto label = item.cast<std::string>();
    const std::size_t i = u.find(label);
    if (i >= u.size()) throw Error("unknown label '" + label + "'");
    m |= Mask{1} << i;
  }
  return m;
}

std::vector<std::string> labels_of(const SoftSet& f, Element x) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f.universe()->size(); ++i)
    if (f[x] >> i & 1) out.push_back(f.universe()->label(i));
  return out;
}

NormalityCriterion criterion_of(const std::string& name) {
  for (auto c : kAllCriteria)
    if (name == to_string(c)) return c;
  throw Error("unknown criterion '" + name + "'");
}

std::vector<std::string> names_of(const FiniteGroup& g, const ElementSet& s) {
  std::vector<std::string> out;
  for (Element x : s) out.push_back(g.name(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_softint, m) {
  m.doc() = "Soft int-groups over finite groups";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  // registered after the base so the more specific translator wins
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<PyGroup>(m, "Group")
      .def(py::init([](const std::string& spec) { return PyGroup{spec, parse_group_spec(spec)}; }),
           py::arg("spec"))
      .def_readonly("spec", &PyGroup::spec)
      .def_property_readonly("order", [](const PyGroup& p) { return p.g->order(); })
      .def_property_readonly("identity", [](const PyGroup& p) { return p.g->identity(); })
      .def_property_readonly("names", [](const PyGroup& p) { return p.g->names(); })
      .def_property_readonly("is_abelian", [](const PyGroup& p) { return p.g->is_abelian(); })
      .def("mul", [](const PyGroup& p, Element a, Element b) { return p.g->mul(a, b); })
      .def("inv", [](const PyGroup& p, Element a) { return p.g->inv(a); })
      .def("table", [](const PyGroup& p) { return p.g->table(); })
      .def("subgroups",
           [](const PyGroup& p) {
             std::vector<ElementSet> out;
             for (const auto& h : all_subgroups(p.g)) out.push_back(h.members());
             return out;
           })
      .def("__len__", [](const PyGroup& p) { return p.g->order(); })
      .def("__repr__", [](const PyGroup& p) { return "Group('" + p.spec + "')"; });

  py::class_<SoftSet>(m, "SoftSet")
      .def(py::init([](const py::object& group, const py::object& universe, const py::list& values) {
             const GroupPtr g = as_group(group);
             const UniversePtr u = universe_of(universe);
             std::vector<Mask> masks;
             for (auto v : values) masks.push_back(mask_of(*u, v));
             return SoftSet(g, u, std::move(masks));
           }),
           py::arg("group"), py::arg("universe"), py::arg("values"),
           "values: one entry per element, either a bit mask or an iterable of labels")
      .def_property_readonly("masks",
                             [](const SoftSet& f) {
                               return std::vector<Mask>(f.values().begin(), f.values().end());
                             })
      .def_property_readonly("labels",
                             [](const SoftSet& f) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < f.universe()->size(); ++i)
                                 out.push_back(f.universe()->label(i));
                               return out;
                             })
      .def_property_readonly("order", &SoftSet::order)
      .def("value", &labels_of, py::arg("x"))
      .def("__getitem__", [](const SoftSet& f, Element x) {
        if (x >= f.order()) throw py::index_error();
        return labels_of(f, x);
      })
      .def("__len__", &SoftSet::order)
      .def("__eq__", [](const SoftSet& a, const SoftSet& b) { return a == b; })
      .def("__str__", [](const SoftSet& f) { return to_string(f); })
      .def("__repr__", [](const SoftSet& f) { return "SoftSet(" + to_string(f) + ")"; });

  m.attr("CRITERIA") = [] {
    std::vector<std::string> out;
    for (auto c : kAllCriteria) out.push_back(to_string(c));
    return out;
  }();

  m.def("fixture", [](const std::string& name) {
    if (name == "F1") return fixtures::f1();
    if (name == "F2") return fixtures::f2();
    if (name == "F3") return fixtures::f3();
    if (name == "F4") return fixtures::f4();
    throw Error("unknown fixture '" + name + "'");
  });

  m.def("parse_soft_set", [](const std::string& text, const py::object& group) {
    return parse_soft_set(std::string_view(text), as_group(group));
  });
  m.def("format_soft_set", &format_soft_set, py::arg("f"), py::arg("comment") = "");

  m.def("is_int_group", &is_int_group);
  m.def(
      "is_normal",
      [](const SoftSet& f, const std::string& criterion) {
        return is_normal(SoftIntGroup::from(f), criterion_of(criterion));
      },
      py::arg("f"), py::arg("criterion") = "abelian");
  m.def("normalizer", [](const SoftSet& f) {
    return names_of(*f.group(), normalizer(SoftIntGroup::from(f)).members());
  });
  m.def("distinct_conjugates", [](const SoftSet& f) {
    std::vector<SoftSet> out;
    for (const auto& c : distinct_conjugates(SoftIntGroup::from(f))) out.push_back(c.soft());
    return out;
  });
  m.def("level_structure", [](const SoftSet& f) {
    const LevelReport r = level_structure(SoftIntGroup::from(f));
    py::dict d;
    std::vector<std::vector<std::string>> levels;
    for (const auto& h : r.level_subgroups) levels.push_back(names_of(*f.group(), h.members()));
    d["level_subgroups"] = levels;
    d["chain"] = r.chain;
    d["poset_level_normal"] = r.poset_level_normal;
    d["chain_level_normal"] = r.chain_level_normal ? py::cast(*r.chain_level_normal) : py::none();
    return d;
  });

  m.def("soft_union", &soft_union);
  m.def("soft_intersection", &soft_intersection);
  m.def("soft_product", &soft_product);
  m.def(
      "soft_image",
      [](const std::string& hom, const SoftSet& f) {
        return soft_image(parse_hom_spec(hom, f.group()), f);
      },
      py::arg("hom"), py::arg("f"));
  m.def(
      "soft_preimage",
      [](const std::string& hom, const py::object& domain, const SoftSet& g) {
        return soft_preimage(parse_hom_spec(hom, as_group(domain)), g);
      },
      py::arg("hom"), py::arg("domain"), py::arg("g"));

  m.def(
      "enumerate_int_groups",
      [](const py::object& group, std::size_t universe_size, std::uint64_t budget) {
        std::vector<SoftSet> out;
        for (const auto& f : enumerate_int_groups(as_group(group), Universe::of_size(universe_size), budget))
          out.push_back(f.soft());
        return out;
      },
      py::arg("group"), py::arg("universe_size"), py::arg("budget") = kDefaultBudget);

  m.def("theorem_ids", [] {
    std::vector<std::string> out;
    for (const auto& t : theorem_catalog()) out.push_back(t.id);
    return out;
  });

  m.def(
      "check_theorem",
      [](const std::string& id, const py::object& group, const std::vector<SoftSet>& sets,
         const std::optional<std::string>& hom) {
        Instance in;
        in.group_spec = spec_of(group);
        in.group = as_group(group);
        if (!sets.empty()) in.universe = sets.front().universe();
        if (hom) {
          in.hom_spec = *hom;
          in.hom = parse_hom_spec(*hom, in.group);
          in.carrier = theorem_info(id).carrier;
        }
        in.soft_sets = sets;
        const TheoremReport r = check_theorem(id, in);
        py::dict d;
        d["id"] = r.id;
        d["verdict"] = std::string(to_string(r.verdict));
        d["witness"] = r.witness;
        d["informational"] = r.informational;
        d["instance"] = in.serialize();
        return d;
      },
      py::arg("id"), py::arg("group"), py::arg("sets") = std::vector<SoftSet>{},
      py::arg("hom") = py::none());

  m.def(
      "run_suite",
      [](std::vector<std::string> groups, std::vector<std::size_t> universe_sizes,
         const std::string& mode, std::size_t samples, std::uint64_t seed,
         std::vector<std::string> theorems, const std::string& format) {
        SuiteConfig c;
        c.groups = std::move(groups);
        c.universe_sizes = std::move(universe_sizes);
        if (mode == "random")
          c.mode = SuiteConfig::Mode::Random;
        else if (mode != "exhaustive")
          throw Error("mode must be exhaustive or random");
        c.samples = samples;
        c.seed = seed;
        c.theorems = std::move(theorems);
        const SuiteReport r = run_suite(c);
        return py::make_tuple(r.exit_code(), format == "text" ? r.text() : r.structured());
      },
      py::arg("groups"), py::arg("universe_sizes") = std::vector<std::size_t>{1},
      py::arg("mode") = "exhaustive", py::arg("samples") = 100, py::arg("seed") = 1,
      py::arg("theorems") = std::vector<std::string>{}, py::arg("format") = "structured");

  m.def(
      "cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "softint");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}

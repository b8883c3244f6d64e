#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "softint/enumerate.hpp"
#include "softint/error.hpp"
#include "softint/int_group.hpp"
#include "softint/io.hpp"
#include "softint/theorems.hpp"

namespace softint::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string group;
  std::string soft;
  std::string soft2;
  std::string hom;
  std::string format = "text";
  std::size_t universe_size = 1;
  bool list = false;

  // theorems
  std::string preset;
  std::vector<std::string> groups;
  std::vector<std::size_t> universe_sizes;
  std::string mode = "exhaustive";
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  std::vector<std::string> theorem_ids;
  bool timings = false;
};

/// Input that cannot be used: reported on stderr, exit 2.
struct InputError {
  std::string message;
};

bool structured(const Options& o) { return o.format == "structured"; }

GroupPtr load_group(const Options& o) {
  if (o.group.empty()) throw InputError{"--group is required"};
  try {
    return parse_group_spec(o.group);
  } catch (const ParseError& e) {
    throw InputError{"--group " + o.group + ": " + e.what()};
  } catch (const Error& e) {
    throw InputError{"--group " + o.group + ": " + e.what()};
  }
}

SoftSet load_soft(const std::string& path, const GroupPtr& g, const char* flag) {
  if (path.empty()) throw InputError{std::string(flag) + " is required"};
  try {
    return read_soft_set(path, g);
  } catch (const ParseError& e) {
    if (e.line() == 0) throw InputError{e.detail()};
    throw InputError{path + ":" + e.what()};
  } catch (const Error& e) {
    throw InputError{path + ": " + e.what()};
  }
}

SoftIntGroup require_int_group(const SoftSet& f, const std::string& path) {
  if (auto v = find_int_group_violation(f))
    throw InputError{path + ": not a soft int-group: " + describe(*v, f)};
  return SoftIntGroup::from(f);
}

Homomorphism load_hom(const Options& o, const GroupPtr& g) {
  if (o.hom.empty()) throw InputError{"--hom is required"};
  try {
    return parse_hom_spec(o.hom, g);
  } catch (const Error& e) {
    throw InputError{"--hom " + o.hom + ": " + e.what()};
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string validated_comment(const SoftSet& f) {
  if (!is_int_group(f)) return {};
  return is_normal(f) ? "validated: int-group, normal" : "validated: int-group";
}

std::string emit(const SoftSet& f, const std::string& note = {}) {
  std::string comment = note;
  const std::string v = validated_comment(f);
  if (!v.empty()) comment += (comment.empty() ? "" : "\n") + v;
  return format_soft_set(f, comment);
}

std::string pair_str(const FiniteGroup& g, std::pair<Element, Element> p) {
  return "(" + g.name(p.first) + "," + g.name(p.second) + ")";
}

json values_json(const SoftSet& f) {
  json j = json::object();
  for (Element x = 0; x < f.order(); ++x) j[f.group()->name(x)] = format_mask(*f.universe(), f[x]);
  return j;
}

json sets_json(const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  json j = json::array();
  for (const auto& s : subs) j.push_back(to_string(g, s.members()));
  return j;
}

// --- verbs ---------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftSet f = load_soft(o.soft, g, "--soft");
  const auto v = find_int_group_violation(f);
  std::optional<std::pair<Element, Element>> w;
  if (!v) w = normality_witness(f, NormalityCriterion::ConjEq);
  if (structured(o)) {
    json j;
    j["int_group"] = !v;
    if (v) {
      j["violation"] = describe(*v, f);
    } else {
      j["normal"] = !w;
      if (w) j["witness"] = {g->name(w->first), g->name(w->second)};
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  if (v) {
    out << "int-group: no; witness " << describe(*v, f) << "\n";
    return 0;
  }
  out << "int-group: yes; normal: " << (w ? "no" : "yes");
  if (w) out << "; witness " << pair_str(*g, *w);
  out << "\n";
  return 0;
}

int cmd_normal(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftIntGroup f = require_int_group(load_soft(o.soft, g, "--soft"), o.soft);
  json j = json::object();
  bool first = is_normal(f, kAllCriteria[0]);
  bool agree = true;
  std::ostringstream text;
  for (auto c : kAllCriteria) {
    const auto w = normality_witness(f, c);
    agree = agree && (!w) == first;
    text << to_string(c) << ": " << yes_no(!w);
    if (w) text << " witness " << pair_str(*g, *w);
    text << "\n";
    j[to_string(c)] = w ? json{g->name(w->first), g->name(w->second)} : json(true);
  }
  text << "agree: " << yes_no(agree) << "\n";
  j["agree"] = agree;
  if (structured(o))
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return agree ? 0 : 1;
}

int cmd_levels(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftIntGroup f = require_int_group(load_soft(o.soft, g, "--soft"), o.soft);
  const LevelReport r = level_structure(f);
  std::string verdict;
  if (r.chain)
    verdict = *r.chain_level_normal ? "soft level normal" : "not soft level normal";
  else
    verdict = "images not a chain; poset-form level-normal: " + yes_no(r.poset_level_normal);

  if (structured(o)) {
    json j;
    j["image"] = json::array();
    for (const auto& v : r.image.values) j["image"].push_back(to_string(v));
    j["image_chain"] = r.image.chain;
    j["level_subgroups"] = sets_json(*g, r.level_subgroups);
    j["chain"] = r.chain;
    if (r.chain) {
      j["chain_order"] = sets_json(*g, r.chain_order);
      j["chain_level_normal"] = *r.chain_level_normal;
    }
    j["poset_level_normal"] = r.poset_level_normal;
    j["verdict"] = verdict;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "image:";
  for (const auto& v : r.image.values) out << " " << to_string(v);
  out << "\nimages chain: " << yes_no(r.image.chain) << "\n";
  out << "level subgroups:";
  for (const auto& s : r.level_subgroups) out << " " << to_string(*g, s.members());
  out << "\n";
  if (r.chain) {
    out << "chain:";
    for (std::size_t i = 0; i < r.chain_order.size(); ++i)
      out << (i ? " <= " : " ") << to_string(*g, r.chain_order[i].members());
    out << "\nchain-form level-normal: " << yes_no(*r.chain_level_normal) << "\n";
  }
  out << "poset-form level-normal: " << yes_no(r.poset_level_normal) << "\n";
  out << verdict << "\n";
  return 0;
}

int cmd_normalizer(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftIntGroup f = require_int_group(load_soft(o.soft, g, "--soft"), o.soft);
  const Subgroup n = normalizer(f);
  const std::size_t index = g->order() / n.size();
  if (structured(o)) {
    out << json{{"normalizer", to_string(*g, n.members())}, {"index", index}}.dump(2) << "\n";
    return 0;
  }
  out << "N(f): " << to_string(*g, n.members()) << "\n";
  out << "|G:N(f)|: " << index << "\n";
  return 0;
}

int cmd_product(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftSet f = load_soft(o.soft, g, "--soft");
  const SoftSet h = load_soft(o.soft2, g, "--soft2");
  SoftSet p = [&] {
    try {
      return soft_product(f, h);
    } catch (const Error& e) {
      throw InputError{e.what()};
    }
  }();
  if (structured(o)) {
    out << json{{"product", values_json(p)}, {"int_group", is_int_group(p)}}.dump(2) << "\n";
    return 0;
  }
  out << emit(p, "product f*g");
  return 0;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftIntGroup f = require_int_group(load_soft(o.soft, g, "--soft"), o.soft);
  if (!is_normal(f)) throw InputError{o.soft + ": not a normal soft int-group"};
  const SoftQuotientGroup q = quotient_group(f);
  const QuotientGroup by_eset = quotient_by(g, e_set_subgroup(f));
  const auto map = q.bijection_to(by_eset);
  const bool iso = is_isomorphism(*q.group(), *by_eset.group(), map);
  const FiniteGroup& qg = *q.group();
  const SoftIntGroup qs = quotient_soft(q);

  if (structured(o)) {
    json j;
    j["cosets"] = json::array();
    for (Element i = 0; i < qg.order(); ++i)
      j["cosets"].push_back({{"name", qg.name(i)}, {"values", values_json(q.coset(i))},
                             {"soft_value", format_mask(*f.universe(), qs[i])}});
    j["table"] = qg.table();
    j["bijection"] = json::object();
    for (Element i = 0; i < qg.order(); ++i)
      j["bijection"][qg.name(i)] = to_string(*g, by_eset.cosets()[map[i]]);
    j["isomorphism"] = iso;
    out << j.dump(2) << "\n";
    return iso ? 0 : 1;
  }
  out << "order: " << qg.order() << "\n";
  out << "cosets:\n";
  for (Element i = 0; i < qg.order(); ++i)
    out << "  " << qg.name(i) << " = " << to_string(q.coset(i)) << "; value f(x) = "
        << format_mask(*f.universe(), qs[i]) << "\n";
  out << "table:\n";
  for (Element i = 0; i < qg.order(); ++i) {
    out << " ";
    for (Element k = 0; k < qg.order(); ++k) out << " " << qg.name(qg.mul(i, k));
    out << "\n";
  }
  out << "bijection to G/e_f:\n";
  for (Element i = 0; i < qg.order(); ++i)
    out << "  " << qg.name(i) << " -> " << to_string(*g, by_eset.cosets()[map[i]]) << "\n";
  out << "isomorphism: " << yes_no(iso) << "\n";
  return iso ? 0 : 1;
}

int cmd_conjugates(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  const SoftIntGroup f = require_int_group(load_soft(o.soft, g, "--soft"), o.soft);
  if (support(f).empty()) throw InputError{o.soft + ": empty support"};
  const auto cs = distinct_conjugates(f);
  if (structured(o)) {
    json j;
    j["count"] = cs.size();
    j["conjugates"] = json::array();
    for (const auto& c : cs) j["conjugates"].push_back(values_json(c));
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "# " << cs.size() << " distinct conjugates\n";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out << "\n";
    out << emit(cs[i], "conjugate " + std::to_string(i + 1));
  }
  return 0;
}

int cmd_transport(const Options& o, std::ostream& out, bool image) {
  const GroupPtr g = load_group(o);
  const Homomorphism phi = load_hom(o, g);
  const SoftSet f = load_soft(o.soft, image ? phi.domain() : phi.codomain(), "--soft");
  const SoftSet r = image ? soft_image(phi, f) : soft_preimage(phi, f);
  if (structured(o)) {
    out << json{{image ? "image" : "preimage", values_json(r)}, {"int_group", is_int_group(r)}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << emit(r, std::string(image ? "image" : "preimage") + " along " + o.hom);
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const GroupPtr g = load_group(o);
  if (o.universe_size == 0 || o.universe_size > kMaxUniverse)
    throw InputError{"--universe-size must be between 1 and 64"};
  const UniversePtr u = Universe::of_size(o.universe_size);
  std::uint64_t all = 0, ints = 0, normals = 0;
  std::vector<SoftSet> listed;
  try {
    for_each_soft_set(
        g, u,
        [&](const SoftSet& f) {
          ++all;
          if (is_int_group(f)) {
            ++ints;
            if (is_normal(f)) ++normals;
            if (o.list) listed.push_back(f);
          }
          return true;
        },
        o.budget);
  } catch (const BudgetExceeded& e) {
    throw InputError{e.what()};
  }
  if (structured(o)) {
    json j{{"soft_sets", all}, {"int_groups", ints}, {"normal", normals}};
    if (o.list) {
      j["list"] = json::array();
      for (const auto& f : listed) j["list"].push_back(values_json(f));
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "soft sets: " << all << "; int-groups: " << ints << "; normal: " << normals << "\n";
  for (const auto& f : listed) out << "\n" << emit(f);
  return 0;
}

int cmd_theorems(const Options& o, std::ostream& out) {
  SuiteConfig cfg;
  if (o.preset == "desk") {
    cfg = SuiteConfig::desk();
  } else if (!o.preset.empty()) {
    throw InputError{"unknown preset '" + o.preset + "'"};
  }
  if (!o.groups.empty()) cfg.groups = o.groups;
  if (!o.universe_sizes.empty()) cfg.universe_sizes = o.universe_sizes;
  if (cfg.universe_sizes.empty()) cfg.universe_sizes = {1};
  if (o.mode == "random") cfg.mode = SuiteConfig::Mode::Random;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.budget = o.budget;
  cfg.theorems = o.theorem_ids;
  cfg.timings = o.timings;
  for (const auto& id : cfg.theorems) {
    try {
      theorem_info(id);
    } catch (const UnknownTheorem& e) {
      throw InputError{e.what()};
    }
  }
  for (const auto& spec : cfg.groups) {
    try {
      parse_group_spec(spec);
    } catch (const Error& e) {
      throw InputError{"--group " + spec + ": " + e.what()};
    }
  }
  SuiteReport report;
  try {
    report = run_suite(cfg);
  } catch (const BudgetExceeded& e) {
    throw InputError{std::string(e.what()) + " (use --mode random)"};
  }
  out << (structured(o) ? report.structured() : report.text());
  return report.exit_code();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft int-group calculator and theorem checker", "softint"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool soft, bool soft2 = false) {
    sub->add_option("--group", o.group, "group spec: cyclic:n, dihedral:n, klein, quaternion, "
                                        "symmetric:n, table:PATH");
    if (soft) sub->add_option("soft,--soft", o.soft, "soft-set file");
    if (soft2) sub->add_option("soft2,--soft2", o.soft2, "second soft-set file");
    sub->add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> verbs;
  auto verb = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, std::move(fn));
    return sub;
  };

  common(verb("validate", "int-group verdict, normality and first witness",
              [&] { return cmd_validate(o, out); }),
         true);
  common(verb("normal", "all six normality criteria and whether they agree",
              [&] { return cmd_normal(o, out); }),
         true);
  common(verb("levels", "image class, level subgroups, chain and level-normality",
              [&] { return cmd_levels(o, out); }),
         true);
  common(verb("normalizer", "N(f) and its index", [&] { return cmd_normalizer(o, out); }), true);
  common(verb("product", "soft product f*g", [&] { return cmd_product(o, out); }), true, true);
  common(verb("quotient", "G/f coset table and the map to G/e_f",
              [&] { return cmd_quotient(o, out); }),
         true);
  common(verb("conjugates", "distinct conjugates of f", [&] { return cmd_conjugates(o, out); }),
         true);
  for (bool image : {true, false}) {
    CLI::App* sub = verb(image ? "image" : "preimage",
                         image ? "soft image along a homomorphism"
                               : "soft preimage along a homomorphism",
                         [&, image] { return cmd_transport(o, out, image); });
    common(sub, true);
    sub->add_option("--hom", o.hom,
                    "identity, mod:n:k, sign:n, quotient:i,j,..., inclusion:i,j,...");
  }
  {
    CLI::App* sub = verb("enumerate", "count soft sets, int-groups and normal int-groups",
                         [&] { return cmd_enumerate(o, out); });
    common(sub, false);
    sub->add_option("--universe-size", o.universe_size, "|U|");
    sub->add_option("--budget", o.budget, "maximum number of soft sets");
    sub->add_flag("--list", o.list, "print every int-group");
  }
  {
    CLI::App* sub = verb("theorems", "run the theorem suite", [&] { return cmd_theorems(o, out); });
    sub->add_option("--preset", o.preset, "desk")->check(CLI::IsMember({"desk"}));
    sub->add_option("--group", o.groups, "group spec (repeatable)");
    sub->add_option("--universe-size", o.universe_sizes, "|U| (repeatable)");
    sub->add_option("--mode", o.mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    sub->add_option("--samples", o.samples, "random mode: instances per record");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--budget", o.budget, "maximum soft sets per (G, U)");
    sub->add_option("--theorem", o.theorem_ids, "restrict to these ids (repeatable)");
    sub->add_flag("--timings", o.timings, "include runtimes (breaks byte-identical output)");
    sub->add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) return fn();
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace softint::cli

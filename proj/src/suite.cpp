#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"

#include "softint/error.hpp"
#include "softint/io.hpp"
#include "softint/theorems.hpp"

namespace softint {

SuiteConfig SuiteConfig::desk() {
  SuiteConfig c;
  c.groups = {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5",  "cyclic:6",
              "klein",    "dihedral:3", "dihedral:4", "quaternion"};
  c.universe_sizes = {1, 2};
  return c;
}

Verdict SuiteRecord::verdict() const {
  if (violated) return Verdict::Violated;
  if (holds) return Verdict::Holds;
  return Verdict::PreconditionUnmet;
}

int SuiteReport::exit_code() const {
  for (const auto& r : records)
    if (!r.informational && r.violated) return 1;
  return 0;
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string element_list(const ElementSet& s) {
  std::string out;
  for (Element x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

/// Soft sets over one (group, universe), split by class. Filled only in
/// exhaustive mode.
struct Pool {
  GroupPtr group;
  std::vector<SoftSet> any, ints, normals;

  const std::vector<SoftSet>& of(Input in) const {
    return in == Input::Any ? any : in == Input::IntGroup ? ints : normals;
  }
};

Pool make_pool(const GroupPtr& g, const UniversePtr& u, std::uint64_t budget) {
  Pool p{g, {}, {}, {}};
  for_each_soft_set(
      g, u,
      [&](const SoftSet& f) {
        p.any.push_back(f);
        if (is_int_group(f)) {
          p.ints.push_back(f);
          if (is_normal(f)) p.normals.push_back(f);
        }
        return true;
      },
      budget);
  return p;
}

struct Sweep {
  const SuiteConfig& cfg;
  std::string group_spec;
  GroupPtr group;
  UniversePtr universe;
  std::vector<Pool> pools;

  const Pool& pool_for(const GroupPtr& g) {
    for (const auto& p : pools)
      if (same_group(p.group, g)) return p;
    pools.push_back(make_pool(g, universe, cfg.budget));
    return pools.back();
  }

  SoftSet draw(Input in, const GroupPtr& g, std::uint64_t seed) const {
    switch (in) {
      case Input::Any:
        return seed & 1 ? generate_soft_set(g, universe, seed)
                        : generate_chain_int_group(g, universe, seed).soft();
      case Input::IntGroup: return generate_chain_int_group(g, universe, seed).soft();
      case Input::Normal: return generate_chain_int_group(g, universe, seed, true).soft();
    }
    return generate_soft_set(g, universe, seed);
  }
};

void tally(SuiteRecord& rec, const Outcome& o, const std::function<Instance()>& instance) {
  ++rec.cases;
  switch (o.verdict) {
    case Verdict::Holds: ++rec.holds; break;
    case Verdict::PreconditionUnmet: ++rec.unmet; break;
    case Verdict::Violated:
      if (!rec.violated) {
        rec.counterexample = instance();
        rec.witness = o.witness;
      }
      ++rec.violated;
      break;
  }
}

SuiteRecord run_record(Sweep& sw, const TheoremInfo& t, const std::string& hom_spec,
                       const Homomorphism* hom) {
  const auto start = std::chrono::steady_clock::now();
  SuiteRecord rec;
  rec.id = t.id;
  rec.group = sw.group_spec;
  rec.universe_size = t.needs_universe ? sw.universe->size() : 0;
  rec.hom = hom_spec;
  rec.informational = t.informational;

  const UniversePtr no_universe;
  const UniversePtr& u = t.needs_universe ? sw.universe : no_universe;
  const GroupPtr& home = t.carrier == Carrier::Domain     ? hom->domain()
                         : t.carrier == Carrier::Codomain ? hom->codomain()
                                                          : sw.group;
  auto make_instance = [&](std::vector<SoftSet> sets, std::optional<std::uint64_t> seed) {
    Instance inst;
    inst.group_spec = sw.group_spec;
    inst.group = sw.group;
    inst.universe = u;
    if (hom) {
      inst.hom_spec = hom_spec;
      inst.hom = *hom;
    }
    inst.seed = seed;
    inst.carrier = t.carrier;
    inst.soft_sets = std::move(sets);
    return inst;
  };
  // Preimage monotonicity only speaks about nested pairs; feed (a ∩ b, b).
  auto prepare = [&](std::vector<SoftSet>& sets) {
    if (t.id == "D376") sets[0] = soft_intersection(sets[0], sets[1]);
  };
  auto run_case = [&](std::vector<SoftSet> sets, std::optional<std::uint64_t> seed) {
    prepare(sets);
    const Outcome o = evaluate(t, sw.group, u, hom, sets);
    tally(rec, o, [&] { return make_instance(sets, seed); });
  };

  const std::uint64_t key_seed =
      fnv1a(t.id + "|" + sw.group_spec + "|" + std::to_string(rec.universe_size) + "|" + hom_spec) ^
      (sw.cfg.seed * 0x9e3779b97f4a7c15ull);

  if (t.inputs.empty()) {
    rec.mode = "exhaustive";
    run_case({}, std::nullopt);
  } else if (sw.cfg.mode == SuiteConfig::Mode::Random) {
    rec.mode = "random";
    std::mt19937_64 rng(key_seed);
    for (std::size_t i = 0; i < sw.cfg.samples; ++i) {
      const std::uint64_t case_seed = rng();
      std::vector<SoftSet> sets;
      for (std::size_t k = 0; k < t.inputs.size(); ++k)
        sets.push_back(sw.draw(t.inputs[k], home, case_seed + k * 0x632be59bd9b4e019ull));
      run_case(std::move(sets), case_seed);
    }
  } else {
    const Pool& pool = sw.pool_for(home);
    std::vector<const std::vector<SoftSet>*> lists;
    long double total = 1;
    for (Input in : t.inputs) {
      lists.push_back(&pool.of(in));
      total *= static_cast<long double>(lists.back()->size());
    }
    if (total == 0) {
      rec.mode = "exhaustive";
    } else if (t.inputs.size() == 1 ||
               total <= static_cast<long double>(sw.cfg.combination_budget)) {
      rec.mode = "exhaustive";
      std::vector<std::size_t> idx(lists.size(), 0);
      for (;;) {
        std::vector<SoftSet> sets;
        for (std::size_t k = 0; k < lists.size(); ++k) sets.push_back((*lists[k])[idx[k]]);
        run_case(std::move(sets), std::nullopt);
        std::size_t k = lists.size();
        while (k > 0) {
          --k;
          if (++idx[k] < lists[k]->size()) break;
          idx[k] = 0;
          if (k == 0) goto done;
        }
      }
    done:;
    } else {
      rec.mode = "sampled";
      std::mt19937_64 rng(key_seed);
      for (std::uint64_t i = 0; i < sw.cfg.combination_budget; ++i) {
        std::vector<SoftSet> sets;
        for (const auto* l : lists) sets.push_back((*l)[rng() % l->size()]);
        run_case(std::move(sets), std::nullopt);
      }
    }
  }
  rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rec;
}

bool selected(const SuiteConfig& cfg, const TheoremInfo& t) {
  return cfg.theorems.empty() ||
         std::find(cfg.theorems.begin(), cfg.theorems.end(), t.id) != cfg.theorems.end();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::vector<std::pair<std::string, Homomorphism>> catalog_homomorphisms(
    const std::string& group_spec, const GroupPtr& g) {
  std::vector<std::pair<std::string, Homomorphism>> out;
  if (g->order() > 64) return out;
  const auto subs = all_subgroups(g, std::max<std::size_t>(kDefaultSubgroupBound, g->order()));
  for (const auto& h : subs)
    out.emplace_back("inclusion:" + element_list(h.members()), Homomorphism::inclusion(h));
  for (const auto& n : subs)
    if (is_normal_subgroup(*g, n))
      out.emplace_back("quotient:" + element_list(n.members()), quotient_by(g, n).projection());
  if (group_spec == "cyclic:4" || group_spec == "Z4")
    out.emplace_back("mod:4:2", parse_hom_spec("mod:4:2", g));
  const auto colon = group_spec.find(':');
  if (group_spec.rfind("dihedral:", 0) == 0)
    out.emplace_back("sign:" + group_spec.substr(colon + 1),
                     parse_hom_spec("sign:" + group_spec.substr(colon + 1), g));
  else if (group_spec.size() > 1 && group_spec[0] == 'D')
    out.emplace_back("sign:" + group_spec.substr(1), parse_hom_spec("sign:" + group_spec.substr(1), g));
  return out;
}

std::vector<Probe> informational_probes() {
  std::vector<Probe> out;
  const SoftSet f3 = fixtures::f3();
  const FiniteGroup& d3 = *f3.group();
  const Universe& ab = *f3.universe();
  {
    const Element u = 1, v = 3;
    const Element k = commutator(d3, v, u);
    out.push_back({"C90conv", "F3",
                   {{"[v,u]", d3.name(k)},
                    {"f([v,u])", format_mask(ab, f3[k])},
                    {"f(e)", format_mask(ab, f3[d3.identity()])},
                    {"normal", yes_no(is_int_group(f3) && is_normal(f3))},
                    {"commutator test", yes_no(commutator_value_test(f3))}}});
  }
  {
    const SoftIntGroup f = SoftIntGroup::from(f3);
    const ElementSet es = e_set(f);
    const QuotientGroup q = quotient_by(f.group(), Subgroup::make(f.group(), es));
    out.push_back({"C100", "F3",
                   {{"normal", yes_no(is_normal(f))},
                    {"e_f", to_string(d3, es)},
                    {"|G/e_f|", std::to_string(q.group()->order())},
                    {"G/e_f Abelian", yes_no(q.group()->is_abelian())}}});
  }
  {
    const SoftSet f2 = fixtures::f2();
    const SoftSet h = make_a_alpha(f2.group(), e_set(f2), USet(f2.universe(), f2[0]));
    out.push_back({"C30", "F2",
                   {{"f_(e_f)(f(e))", to_string(h)},
                    {"normal", yes_no(is_int_group(h) && is_normal(h))}}});
  }
  {
    const SoftSet f4 = fixtures::f4();
    const ElementSet sup = support(f4);
    out.push_back({"C221", "F4",
                   {{"normal", yes_no(is_int_group(f4) && is_normal(f4))},
                    {"support", to_string(*f4.group(), sup)},
                    {"support is a subgroup", yes_no(is_closed_subset(*f4.group(), sup))}}});
  }
  {
    const GroupPtr d = dihedral(3);
    const Homomorphism phi = Homomorphism::inclusion(Subgroup::make(d, {0, 3}));
    const SoftSet g = make_universal(d, Universe::make({"a"}));
    const SoftSet back = soft_image(phi, soft_preimage(phi, g));
    out.push_back({"D593", "inclusion {e,v} -> D3, g universal",
                   {{"g normal", yes_no(is_normal(g))},
                    {"img(pre(g))", to_string(back)},
                    {"img(pre(g)) normal", yes_no(is_int_group(back) && is_normal(back))}}});
  }
  return out;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  SuiteReport report;
  report.timings = cfg.timings;
  const auto& catalog = theorem_catalog();
  for (const auto& id : cfg.theorems) theorem_info(id);

  for (const auto& spec : cfg.groups) {
    const GroupPtr g = parse_group_spec(spec);
    for (const auto& t : catalog)
      if (selected(cfg, t) && !t.needs_universe) {
        Sweep sw{cfg, spec, g, nullptr, {}};
        report.records.push_back(run_record(sw, t, "", nullptr));
      }
    const auto homs = catalog_homomorphisms(spec, g);
    for (std::size_t m : cfg.universe_sizes) {
      Sweep sw{cfg, spec, g, Universe::of_size(m), {}};
      for (const auto& t : catalog)
        if (selected(cfg, t) && t.needs_universe && !t.needs_hom)
          report.records.push_back(run_record(sw, t, "", nullptr));
      for (const auto& [hspec, hom] : homs)
        for (const auto& t : catalog)
          if (selected(cfg, t) && t.needs_hom) report.records.push_back(run_record(sw, t, hspec, &hom));
    }
  }

  std::vector<std::string> order;
  for (const auto& t : catalog) order.push_back(t.id);
  auto rank = [&](const std::string& id) {
    return std::find(order.begin(), order.end(), id) - order.begin();
  };
  std::stable_sort(report.records.begin(), report.records.end(),
                   [&](const SuiteRecord& a, const SuiteRecord& b) { return rank(a.id) < rank(b.id); });

  if (!cfg.groups.empty()) report.probes = informational_probes();
  return report;
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  std::size_t bad = 0, probe_bad = 0;
  for (const auto& r : records) {
    out << r.id << " " << r.group;
    if (r.universe_size) out << " |U|=" << r.universe_size;
    if (!r.hom.empty()) out << " hom=" << r.hom;
    out << " " << r.mode << " cases=" << r.cases << " holds=" << r.holds
        << " violated=" << r.violated << " unmet=" << r.unmet;
    if (timings) out << " micros=" << r.micros;
    out << " -> " << to_string(r.verdict()) << (r.informational ? " (informational)" : "") << "\n";
    if (r.violated) {
      (r.informational ? probe_bad : bad)++;
      out << "  witness: " << r.witness << "\n";
      out << "  instance " << r.counterexample->digest() << "\n";
    }
  }
  for (const auto& p : probes) {
    out << "probe " << p.id << " on " << p.fixture << ":";
    for (const auto& [k, v] : p.values) out << " " << k << " = " << v << ";";
    out << "\n";
  }
  out << "records=" << records.size() << " violated=" << bad
      << " informational-violated=" << probe_bad << " exit=" << exit_code() << "\n";
  return out.str();
}

std::string SuiteReport::structured() const {
  using nlohmann::json;
  json doc;
  doc["records"] = json::array();
  for (const auto& r : records) {
    json j;
    j["id"] = r.id;
    j["statement"] = theorem_info(r.id).statement;
    j["group"] = r.group;
    j["universe_size"] = r.universe_size;
    j["hom"] = r.hom;
    j["mode"] = r.mode;
    j["cases"] = r.cases;
    j["holds"] = r.holds;
    j["violated"] = r.violated;
    j["unmet"] = r.unmet;
    j["informational"] = r.informational;
    j["verdict"] = to_string(r.verdict());
    if (r.counterexample) {
      j["witness"] = r.witness;
      j["instance"] = r.counterexample->serialize();
      j["instance_digest"] = r.counterexample->digest();
    }
    if (timings) j["micros"] = r.micros;
    doc["records"].push_back(std::move(j));
  }
  doc["probes"] = json::array();
  for (const auto& p : probes) {
    json values = json::object();
    for (const auto& [k, v] : p.values) values[k] = v;
    doc["probes"].push_back({{"id", p.id}, {"fixture", p.fixture}, {"values", values}});
  }
  doc["exit_code"] = exit_code();
  return doc.dump(2) + "\n";
}

}  // namespace softint

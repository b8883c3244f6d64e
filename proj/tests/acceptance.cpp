// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "softint/enumerate.hpp"
#include "softint/io.hpp"
#include "softint/theorems.hpp"

using namespace softint;

namespace {

constexpr double kSweepSecondsLimit = 300.0;
constexpr std::size_t kSemigroupSamples = 1000;
constexpr std::uint64_t kSemigroupSeed = 1;

const std::vector<std::string> kDeskGroups = {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4",
                                              "cyclic:5", "cyclic:6", "klein",    "dihedral:3",
                                              "dihedral:4", "quaternion"};
const std::vector<std::size_t> kDeskUniverses = {1, 2};

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << "\n";
  if (!ok) ++failures;
}

struct Sweep {
  std::size_t soft_sets = 0;
  std::size_t route_disagreements = 0;
  std::size_t int_groups = 0;
  std::size_t criteria_disagreements = 0;
  std::size_t non_normal_on_dedekind = 0;
  std::size_t non_normal_d3 = 0;
  std::size_t non_normal_d4 = 0;
  std::size_t index_checked = 0;
  std::size_t index_failures = 0;
  std::size_t quotients_checked = 0;
  std::size_t quotient_failures = 0;
  double seconds = 0;
  std::string first_problem;
};

void note(Sweep& s, const std::string& what, const SoftSet& f) {
  if (s.first_problem.empty()) s.first_problem = what + ": " + to_string(f);
}

Sweep sweep() {
  Sweep s;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& spec : kDeskGroups) {
    const GroupPtr g = parse_group_spec(spec);
    const bool dedekind_expected = g->is_abelian() || spec == "quaternion";
    for (std::size_t m : kDeskUniverses) {
      for_each_soft_set(g, Universe::of_size(m), [&](const SoftSet& f) {
        ++s.soft_sets;
        const bool direct = is_int_group(f);
        if (direct != int_group_by_level_cuts(f) || direct != int_group_by_product(f)) {
          ++s.route_disagreements;
          note(s, "route disagreement", f);
        }
        if (!direct) return true;
        ++s.int_groups;
        const bool normal = is_normal(f, kAllCriteria[0]);
        for (auto c : kAllCriteria)
          if (is_normal(f, c) != normal) {
            ++s.criteria_disagreements;
            note(s, std::string("criteria disagree on ") + to_string(c), f);
            break;
          }
        if (!normal) {
          if (dedekind_expected) ++s.non_normal_on_dedekind;
          if (spec == "dihedral:3") ++s.non_normal_d3;
          if (spec == "dihedral:4") ++s.non_normal_d4;
        }
        const SoftIntGroup ig = SoftIntGroup::from(f);
        if (!support(f).empty()) {
          ++s.index_checked;
          if (distinct_conjugates(ig).size() * normalizer(f).size() != g->order()) {
            ++s.index_failures;
            note(s, "conjugate count times |N(f)| != |G|", f);
          }
        }
        if (normal) {
          ++s.quotients_checked;
          const auto q = quotient_group(ig);
          const auto by_eset = quotient_by(g, e_set_subgroup(ig));
          if (!is_isomorphism(*q.group(), *by_eset.group(), q.bijection_to(by_eset))) {
            ++s.quotient_failures;
            note(s, "quotient map not an isomorphism", f);
          }
        }
        return true;
      });
    }
  }
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

std::string run_cli(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "softint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int c = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = c;
  return out.str() + err.str();
}

std::string data(const char* name) { return std::string(SOFTINT_TEST_DATA) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  const Sweep s = sweep();
  std::cout << "sweep: " << s.soft_sets << " soft sets, " << s.int_groups << " int-groups, "
            << s.seconds << " s\n";
  if (!s.first_problem.empty()) std::cout << "first problem: " << s.first_problem << "\n";

  {
    std::ostringstream d;
    d << "route disagreements=" << s.route_disagreements << " over " << s.soft_sets
      << " soft sets in " << s.seconds << " s (limit " << kSweepSecondsLimit << " s)";
    report(1, s.route_disagreements == 0 && s.seconds <= kSweepSecondsLimit, d.str());
  }
  {
    std::ostringstream d;
    d << "criteria disagreements=" << s.criteria_disagreements << " over " << s.int_groups
      << " int-groups";
    report(2, s.criteria_disagreements == 0, d.str());
  }
  {
    const SoftSet f2 = fixtures::f2();
    const auto w = normality_witness(f2, NormalityCriterion::ConjEq);
    const FiniteGroup& g = *f2.group();
    bool witness_ok = false;
    std::string wtext = "none";
    if (w) {
      const Element conj = g.mul(g.mul(w->first, w->second), g.inv(w->first));
      witness_ok = g.name(w->first) == "u" && g.name(w->second) == "v" && f2[conj] == 0 &&
                   f2[w->second] == f2.universe()->full();
      wtext = "f(" + g.name(w->first) + g.name(w->second) + g.name(w->first) + "^-1) = " +
              to_string(USet(f2.universe(), f2[conj])) + " != " +
              to_string(USet(f2.universe(), f2[w->second])) + " = f(" + g.name(w->second) + ")";
    }
    std::ostringstream d;
    d << "non-normal on Abelian/Q8=" << s.non_normal_on_dedekind << " D3=" << s.non_normal_d3
      << " D4=" << s.non_normal_d4 << "; F2 witness " << wtext;
    report(3,
           s.non_normal_on_dedekind == 0 && s.non_normal_d3 > 0 && s.non_normal_d4 > 0 &&
               witness_ok,
           d.str());
  }
  {
    const SoftIntGroup f2 = SoftIntGroup::from(fixtures::f2());
    const auto n = normalizer(f2);
    const std::size_t conj = distinct_conjugates(f2).size();
    const bool f2_ok = n.members() == ElementSet{0, 3} && conj == 3;
    std::ostringstream d;
    d << "index failures=" << s.index_failures << " over " << s.index_checked
      << "; F2: N(f)=" << to_string(*f2.group(), n.members()) << " conjugates=" << conj;
    report(4, s.index_failures == 0 && f2_ok, d.str());
  }
  {
    std::ostringstream d;
    d << "failures=" << s.quotient_failures << " over " << s.quotients_checked
      << " normal int-groups";
    report(5, s.quotient_failures == 0 && s.quotients_checked > 0, d.str());
  }
  {
    std::mt19937_64 rng(kSemigroupSeed);
    std::vector<std::pair<GroupPtr, UniversePtr>> pool;
    for (const auto& spec : kDeskGroups)
      for (std::size_t m : kDeskUniverses) pool.emplace_back(parse_group_spec(spec), Universe::of_size(m));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < kSemigroupSamples; ++i) {
      const auto& [g, u] = pool[rng() % pool.size()];
      const SoftSet f = generate_chain_int_group(g, u, rng(), true);
      const SoftSet h = generate_chain_int_group(g, u, rng(), true);
      const SoftSet k = generate_chain_int_group(g, u, rng(), true);
      const bool ok = soft_product(f, h) == soft_product(h, f) &&
                      soft_product(soft_product(f, h), k) == soft_product(f, soft_product(h, k)) &&
                      soft_product(f, f) == f;
      bad += !ok;
    }
    std::ostringstream d;
    d << "law failures=" << bad << " over " << kSemigroupSamples << " seeded triples (seed "
      << kSemigroupSeed << ")";
    report(6, bad == 0, d.str());
  }
  {
    SuiteConfig c;
    c.groups = kDeskGroups;
    c.universe_sizes = kDeskUniverses;
    c.theorems = {"D376", "C420", "C430", "B163", "D593"};
    const SuiteReport r = run_suite(c);
    std::uint64_t cases = 0;
    std::size_t violated_records = 0;
    std::string first;
    for (const auto& rec : r.records) {
      cases += rec.cases;
      if (rec.violated == 0) continue;
      ++violated_records;
      if (first.empty()) first = rec.id + " " + rec.group + " |U|=" + std::to_string(rec.universe_size) +
                                 " hom=" + rec.hom + ": " + rec.witness;
    }
    std::ostringstream d;
    d << "violated records=" << violated_records << " of " << r.records.size() << " (" << cases
      << " cases)";
    if (!first.empty()) d << "; first: " << first;
    report(7, violated_records == 0, d.str());
  }
  {
    const std::string f2 = run_cli({"levels", "--group", "dihedral:3", data("f2.soft")});
    const std::string f4 = run_cli({"levels", "--group", "klein", data("f4.soft")});
    const bool ok = has(f2, "not soft level normal") &&
                    has(f4, "images not a chain; poset-form level-normal: yes");
    report(8, ok, "levels F2 / F4 golden lines");
  }
  std::string desk_text;
  {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli({"theorems", "--preset", "desk", "--format", "structured"}, &c1);
    const std::string b = run_cli({"theorems", "--preset", "desk", "--format", "structured"}, &c2);
    std::ostringstream d;
    d << a.size() << " bytes, exit codes " << c1 << "/" << c2;
    report(9, a == b && !a.empty(), d.str());
  }
  {
    int code = 0;
    desk_text = run_cli({"theorems", "--preset", "desk"}, &code);
    std::istringstream lines(desk_text);
    std::string line, conv, c100;
    while (std::getline(lines, line)) {
      if (line.rfind("probe C90conv ", 0) == 0) conv = line;
      if (line.rfind("probe C100 ", 0) == 0) c100 = line;
    }
    const bool ok = !conv.empty() && !c100.empty() && has(conv, "f([v,u]) = {a}") &&
                    has(c100, "G/e_f Abelian = no") && code == 0;
    if (!conv.empty()) std::cout << "  " << conv << "\n";
    if (!c100.empty()) std::cout << "  " << c100 << "\n";
    report(10, ok, "desk exit code " + std::to_string(code));
  }

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL")
            << "\n";
  return failures == 0 ? 0 : 1;
}

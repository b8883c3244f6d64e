#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "softint/error.hpp"
#include "softint/io.hpp"
#include "softint/theorems.hpp"

using namespace softint;

namespace {

Instance single(const std::string& spec, const SoftSet& f) {
  Instance in;
  in.group_spec = spec;
  in.group = f.group();
  in.universe = f.universe();
  in.soft_sets = {f};
  return in;
}

SuiteConfig small(std::vector<std::string> groups, std::vector<std::string> ids = {}) {
  SuiteConfig c;
  c.groups = std::move(groups);
  c.universe_sizes = {1, 2};
  c.theorems = std::move(ids);
  return c;
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("catalog covers every theorem id") {
    std::set<std::string> ids;
    for (const auto& t : theorem_catalog()) {
      CHECK(ids.insert(t.id).second);
      CHECK_FALSE(t.statement.empty());
    }
    for (const char* id : {"B20",  "B100", "B210", "B220", "B300", "B367", "B380", "B400", "B420",
                           "B430", "B480", "B490", "C15",  "C20",  "C30",  "C35",  "C90fwd",
                           "C95",  "C100", "C110", "C190", "C220", "C221", "C226", "C227",
                           "C228", "C229", "C240", "C246", "C270", "C290", "C300", "C345",
                           "C355", "C360", "C370", "C380", "C383", "C385", "D376", "C420",
                           "C430", "B163", "D593"})
      CHECK_MESSAGE(ids.count(id), id);
    CHECK(theorem_info("C90conv").informational);
    CHECK(theorem_info("C100").informational);
    CHECK_FALSE(theorem_info("C383").informational);
    CHECK_THROWS_AS(theorem_info("Z999"), UnknownTheorem);
    CHECK_THROWS_AS(check_theorem("Z999", single("D3", fixtures::f2())), UnknownTheorem);
  }

  TEST_CASE("single-instance verdicts on the fixtures") {
    const Instance f2 = single("dihedral:3", fixtures::f2());
    CHECK(check_theorem("C15", f2).verdict == Verdict::Holds);
    CHECK(check_theorem("C290", f2).verdict == Verdict::Holds);
    CHECK(check_theorem("C110", f2).verdict == Verdict::Holds);
    CHECK(check_theorem("C383", f2).verdict == Verdict::PreconditionUnmet);
    CHECK(check_theorem("C15", f2).instance_digest == f2.digest());

    const Instance f3 = single("dihedral:3", fixtures::f3());
    const auto conv = check_theorem("C90conv", f3);
    CHECK(conv.verdict == Verdict::Violated);
    CHECK(conv.informational);
    CHECK(check_theorem("C100", f3).verdict == Verdict::Violated);
    // hypothesis fails on F3, so the forward direction is not exercised
    CHECK(check_theorem("C90fwd", f3).verdict == Verdict::PreconditionUnmet);
    CHECK(check_theorem("C383", f3).verdict == Verdict::Holds);

    // non-int-group input to an int-group theorem
    SoftSet bad(cyclic(4), Universe::make({"a"}), {1, 1, 0, 0});
    CHECK(check_theorem("B20", single("cyclic:4", bad)).verdict == Verdict::PreconditionUnmet);
    CHECK(check_theorem("B367", single("cyclic:4", bad)).verdict == Verdict::Holds);
  }

  TEST_CASE("C226 holds on Q8 and fails to find a counterexample on Abelian groups") {
    for (const char* g : {"quaternion", "cyclic:6", "klein"}) {
      Instance in;
      in.group_spec = g;
      in.group = parse_group_spec(g);
      in.universe = Universe::of_size(1);
      CHECK(check_theorem("C226", in).verdict == Verdict::Holds);
    }
  }

  TEST_CASE("instances round trip byte for byte") {
    Instance in = single("dihedral:3", fixtures::f2());
    in.seed = 77;
    const std::string text = in.serialize();
    const Instance back = Instance::parse(text);
    CHECK(back.serialize() == text);
    CHECK(back.digest() == in.digest());
    CHECK(back.soft_sets.at(0) == fixtures::f2());
    CHECK(back.seed == std::optional<std::uint64_t>{77});
    CHECK(in.digest().size() == 16);

    Instance h;
    h.group_spec = "cyclic:4";
    h.group = cyclic(4);
    h.universe = fixtures::f1().universe();
    h.hom_spec = "mod:4:2";
    h.hom = parse_hom_spec("mod:4:2", h.group);
    h.carrier = Carrier::Codomain;
    const SoftSet g2(h.hom->codomain(), h.universe, {0b11, 0b01});
    h.soft_sets = {g2, g2};
    const Instance hb = Instance::parse(h.serialize());
    CHECK(hb.serialize() == h.serialize());
    CHECK(hb.carrier == Carrier::Codomain);
    CHECK(check_theorem("D376", hb).verdict == Verdict::Holds);
    h.soft_sets = {g2};
    CHECK(check_theorem("B163", Instance::parse(h.serialize())).verdict == Verdict::Holds);
    h.soft_sets = {};
    CHECK(check_theorem("B163", h).verdict == Verdict::PreconditionUnmet);

    CHECK_THROWS_AS(Instance::parse("group cyclic:4\nuniverse 1 a\nsoft group\n9 : {a}\n"),
                    ParseError);
    try {
      Instance::parse("group cyclic:4\nuniverse 1 a\nsoft group\nuniverse 1 a\n0 : {b}\n");
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
    }
  }

  TEST_CASE("empty group list gives an empty report") {
    SuiteConfig c;
    c.universe_sizes = {1, 2};
    const SuiteReport r = run_suite(c);
    CHECK(r.records.empty());
    CHECK(r.probes.empty());
    CHECK(r.exit_code() == 0);
  }

  TEST_CASE("suite on D3 holds apart from informational probes, and witnesses replay") {
    const SuiteReport r = run_suite(small({"dihedral:3"}));
    CHECK(r.exit_code() == 0);
    std::size_t informational_violations = 0;
    for (const auto& rec : r.records) {
      CAPTURE(rec.id);
      if (!rec.informational) CHECK(rec.violated == 0);
      CHECK(rec.holds + rec.violated + rec.unmet == rec.cases);
      if (rec.violated == 0) continue;
      ++informational_violations;
      REQUIRE(rec.counterexample);
      const Instance replay = Instance::parse(rec.counterexample->serialize());
      const TheoremReport tr = check_theorem(rec.id, replay);
      CHECK(tr.verdict == Verdict::Violated);
      CHECK(tr.witness == rec.witness);
    }
    CHECK(informational_violations > 0);
    const std::string text = r.text();
    CHECK(text.find("C90conv dihedral:3") != std::string::npos);
    CHECK(text.find("exit=0") != std::string::npos);
  }

  TEST_CASE("filtering by theorem and mode labels") {
    const SuiteReport r = run_suite(small({"cyclic:4", "klein"}, {"B367", "C240"}));
    std::set<std::string> ids;
    for (const auto& rec : r.records) {
      ids.insert(rec.id);
      if (rec.id == "B367") {
        CHECK(rec.mode == "exhaustive");
        CHECK(rec.cases == (rec.universe_size == 1 ? 16u : 256u));
      }
    }
    CHECK(ids == std::set<std::string>{"B367", "C240"});
    CHECK_THROWS_AS(run_suite(small({"cyclic:4"}, {"Z1"})), UnknownTheorem);
  }

  TEST_CASE("exhaustive mode propagates BudgetExceeded") {
    SuiteConfig c = small({"dihedral:4"}, {"B367"});
    c.universe_sizes = {4};
    CHECK_THROWS_AS(run_suite(c), BudgetExceeded);
  }

  TEST_CASE("random mode on S4 is deterministic") {
    SuiteConfig c;
    c.groups = {"symmetric:4"};
    c.universe_sizes = {2};
    c.mode = SuiteConfig::Mode::Random;
    c.samples = 100;
    c.seed = 1;
    c.theorems = {"B20", "B367", "C15", "C290", "C240", "C383"};
    const SuiteReport a = run_suite(c), b = run_suite(c);
    CHECK(a.structured() == b.structured());
    CHECK(a.text() == b.text());
    for (const auto& rec : a.records) {
      CHECK(rec.mode == "random");
      CHECK(rec.cases == 100);
      CHECK(rec.violated == 0);
    }
    c.seed = 2;
    CHECK(run_suite(c).structured() != a.structured());
  }

  TEST_CASE("structured report is valid and sorted") {
    const SuiteReport r = run_suite(small({"cyclic:2"}, {"B20", "B100"}));
    const std::string s = r.structured();
    CHECK(s.find("\"exit_code\": 0") != std::string::npos);
    CHECK(s.find("micros") == std::string::npos);
    CHECK(s.find("\"id\": \"B20\"") < s.find("\"id\": \"B100\""));
  }

  TEST_CASE("probes carry computed values") {
    const auto probes = informational_probes();
    std::set<std::string> ids;
    for (const auto& p : probes) ids.insert(p.id);
    CHECK(ids.count("C90conv"));
    CHECK(ids.count("C100"));
    for (const auto& p : probes)
      if (p.id == "C100") {
        bool abelian_no = false;
        for (const auto& [k, v] : p.values)
          if (v == "no" || v == "false") abelian_no = true;
        CHECK(abelian_no);
      }
  }

  TEST_CASE("catalog homomorphisms") {
    auto d = dihedral(3);
    const auto homs = catalog_homomorphisms("dihedral:3", d);
    std::set<std::string> specs;
    for (const auto& [s, h] : homs) specs.insert(s);
    CHECK(specs.count("sign:3"));
    // 6 inclusions, 3 quotients by normal subgroups
    CHECK(homs.size() == 6 + 3 + 1);
    CHECK(catalog_homomorphisms("cyclic:4", cyclic(4)).size() == 3 + 3 + 1);
  }
}

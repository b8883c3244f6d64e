#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "softint/enumerate.hpp"
#include "softint/io.hpp"

using namespace softint;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "softint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SOFTINT_TEST_DATA) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const Run f2 = run({"validate", "--group", "dihedral:3", data("f2.soft")});
    CHECK(f2.code == 0);
    CHECK(has(f2.out, "int-group: yes"));
    CHECK(has(f2.out, "normal: no"));
    CHECK(has(f2.out, "(u,v)"));

    const Run bad = run({"validate", "--group", "cyclic:4", data("f3.soft")});
    CHECK(bad.code == 2);

    const Run triv = run({"validate", "--group", "cyclic:1", data("empty.soft")});
    CHECK(triv.code == 0);
    CHECK(has(triv.out, "int-group: yes"));
    CHECK(has(triv.out, "normal: yes"));
  }

  TEST_CASE("parse errors exit 2 with line and column") {
    const Run r = run({"validate", "--group", "cyclic:4", data("missing.soft")});
    CHECK(r.code == 2);
    const Run g = run({"validate", "--group", "torus", data("f1.soft")});
    CHECK(g.code == 2);
    CHECK_FALSE(g.err.empty());
    const Run v = run({"frobnicate"});
    CHECK(v.code == 2);
  }

  TEST_CASE("levels golden outputs") {
    const Run f2 = run({"levels", "--group", "D3", data("f2.soft")});
    CHECK(f2.code == 0);
    CHECK(has(f2.out, "not soft level normal"));
    const Run f4 = run({"levels", "--group", "klein", data("f4.soft")});
    CHECK(f4.code == 0);
    CHECK(has(f4.out, "images not a chain; poset-form level-normal: yes"));
  }

  TEST_CASE("normal, normalizer, conjugates, quotient") {
    const Run n = run({"normal", "--group", "D3", data("f2.soft")});
    CHECK(n.code == 0);
    const Run n3 = run({"normal", "--group", "D3", data("f3.soft")});
    CHECK(n3.code == 0);
    const Run nz = run({"normalizer", "--group", "D3", data("f2.soft")});
    CHECK(has(nz.out, "N(f): {e,v}"));
    CHECK(has(nz.out, "|G:N(f)|: 3"));
    const Run c = run({"conjugates", "--group", "D3", data("f2.soft")});
    CHECK(c.code == 0);
    const Run q = run({"quotient", "--group", "Z4", data("f1.soft")});
    CHECK(q.code == 0);
    const Run qn = run({"quotient", "--group", "D3", data("f2.soft")});
    CHECK(qn.code == 2);
  }

  TEST_CASE("emitted soft sets parse back") {
    const Run img = run({"image", "--group", "Z4", "--hom", "mod:4:2", data("f1.soft")});
    REQUIRE(img.code == 0);
    const SoftSet g = parse_soft_set(std::string_view(img.out), cyclic(2));
    CHECK(g[0] == 0b11);
    CHECK(g[1] == 0b01);

    const Run pre = run({"preimage", "--group", "Z4", "--hom", "identity", data("f1.soft")});
    REQUIRE(pre.code == 0);
    CHECK(parse_soft_set(std::string_view(pre.out), cyclic(4)) == fixtures::f1());
    CHECK(has(pre.out, "# validated: int-group"));

    const Run p = run({"product", "--group", "Z4", data("f1.soft"), data("f1.soft")});
    REQUIRE(p.code == 0);
    CHECK(parse_soft_set(std::string_view(p.out), cyclic(4)) == fixtures::f1());
  }

  TEST_CASE("enumerate") {
    const Run e = run({"enumerate", "--group", "Z2", "--universe-size", "1"});
    CHECK(e.code == 0);
    CHECK(has(e.out, "soft sets: 4; int-groups: 3; normal: 3"));
    const Run b = run({"enumerate", "--group", "D4", "--universe-size", "4"});
    CHECK(b.code == 2);
  }

  TEST_CASE("theorems verb") {
    const Run t = run({"theorems", "--group", "Z2", "--universe-size", "1", "--theorem", "B20"});
    CHECK(t.code == 0);
    CHECK(has(t.out, "B20 Z2 |U|=1"));
    const Run s = run({"theorems", "--group", "D3", "--theorem", "C90conv", "--format", "structured"});
    CHECK(s.code == 0);
    CHECK(has(s.out, "\"exit_code\": 0"));
    CHECK(has(s.out, "\"probes\""));
    const Run u = run({"theorems", "--group", "Z2", "--theorem", "nope"});
    CHECK(u.code == 2);
  }
}

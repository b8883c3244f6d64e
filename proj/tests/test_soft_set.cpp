#include "doctest.h"
#include "oracles.hpp"
#include "softint/enumerate.hpp"
#include "softint/error.hpp"
#include "softint/soft_set.hpp"

using namespace softint;

namespace {

SoftSet random_soft(std::mt19937_64& rng, const GroupPtr& g, const UniversePtr& u) {
  return SoftSet(g, u, oracle::random_values(rng, g->order(), u->full()));
}

}  // namespace

TEST_SUITE("soft-core") {
  TEST_CASE("universes") {
    auto u = Universe::make({"a", "b", "c"});
    CHECK(u->size() == 3);
    CHECK(u->full() == 0b111);
    CHECK(u->find("b") == 1);
    CHECK(u->find("z") == 3);
    CHECK_THROWS_AS(Universe::make({"a", "a"}), Error);
    CHECK_THROWS_AS(Universe::make({}), Error);
    CHECK(Universe::of_size(64)->full() == ~Mask{0});
    CHECK_THROWS_AS(Universe::of_size(65), Error);
    CHECK(Universe::of_size(30)->label(27) == "u27");
  }

  TEST_CASE("USet algebra refuses mixed universes") {
    auto u = Universe::make({"a", "b"});
    auto w = Universe::make({"a", "c"});
    auto x = USet::of(u, {"a"});
    CHECK((x | USet::of(u, {"b"})).bits() == 0b11);
    CHECK_THROWS_AS(x | USet::of(w, {"c"}), UniverseMismatch);
    CHECK_THROWS_AS(x.is_subset_of(USet::of(w, {"a"})), UniverseMismatch);
    CHECK(to_string(USet::of(u, {"b", "a"})) == "{a,b}");
  }

  TEST_CASE("canonical constructors") {
    auto d = dihedral(3);
    auto u1 = Universe::make({"a"});
    const SoftSet f = make_characteristic(d, u1, {0, 3});
    CHECK(f.values()[0] == 1);
    CHECK(f.values()[3] == 1);
    CHECK(f.values()[1] == 0);
    CHECK(f == fixtures::f2());

    auto ab = Universe::make({"a", "b"});
    const SoftSet p = make_point(cyclic(4), 1, USet::of(ab, {"a"}));
    CHECK(p.values()[1] == 0b01);
    CHECK(p.values()[0] == 0);
    for (Mask v : oracle::vals(make_empty(d, ab))) CHECK(v == 0);
    for (Mask v : oracle::vals(make_universal(d, ab))) CHECK(v == 0b11);
    CHECK_THROWS_AS(SoftSet(d, ab, {0, 0}), Error);
    CHECK_THROWS_AS(SoftSet(cyclic(1), ab, {0b100}), Error);
  }

  TEST_CASE("union, intersection, inclusion") {
    auto z4 = cyclic(4);
    auto u = Universe::make({"a"});
    const SoftSet a = make_characteristic(z4, u, {0, 2});
    const SoftSet b = make_characteristic(z4, u, {0, 1});
    CHECK(soft_intersection(a, b) == make_characteristic(z4, u, {0}));
    CHECK(soft_union(a, b) == make_characteristic(z4, u, {0, 1, 2}));

    const SoftSet f1 = fixtures::f1();
    CHECK(soft_intersection(f1, f1) == f1);
    CHECK(soft_union(f1, make_empty(z4, f1.universe())) == f1);
    CHECK(soft_intersection(f1, make_universal(z4, f1.universe())) == f1);
    CHECK(is_soft_subset(make_point(z4, 1, USet::of(f1.universe(), {"a"})), f1));
    CHECK(is_soft_subset(f1, f1));
    CHECK_FALSE(is_proper_soft_subset(f1, f1));
    CHECK(soft_equal(f1, f1));
    CHECK_THROWS_AS(soft_union(f1, fixtures::f3()), GroupMismatch);
    CHECK_THROWS_AS(soft_union(f1, make_empty(z4, u)), UniverseMismatch);
  }

  TEST_CASE("image of a set and image class") {
    const SoftSet f1 = fixtures::f1();
    CHECK(image_of_set(f1, {}).bits() == 0);
    CHECK(to_string(image_of_set(f1, {1})) == "{a}");
    CHECK(to_string(image_of_set(f1, {0, 1, 2, 3})) == "{a,b}");

    auto z4 = cyclic(4);
    auto uni = image_class(make_universal(z4, f1.universe()));
    CHECK(uni.values.size() == 1);
    CHECK(uni.chain);

    auto ic = image_class(f1);
    REQUIRE(ic.values.size() == 2);
    CHECK(to_string(ic.values[0]) == "{a,b}");
    CHECK(to_string(ic.values[1]) == "{a}");
    CHECK(ic.chain);

    auto ic4 = image_class(fixtures::f4());
    REQUIRE(ic4.values.size() == 3);
    CHECK(to_string(ic4.values[0]) == "{a,b}");
    CHECK_FALSE(ic4.chain);
    CHECK(image_class(fixtures::f4(), true).values.size() == 4);
  }

  TEST_CASE("alpha cuts, support and e-set") {
    const SoftSet f1 = fixtures::f1();
    CHECK(alpha_cut(f1, USet::of(f1.universe(), {"a", "b"})) == ElementSet{0, 2});
    CHECK(alpha_cut(f1, Mask{0}) == ElementSet{0, 1, 2, 3});
    CHECK(alpha_cut(f1, USet::of(f1.universe(), {"a"}), true) == ElementSet{0, 2});
    CHECK(support(f1) == ElementSet{0, 1, 2, 3});
    CHECK(e_set(f1) == ElementSet{0, 2});
    CHECK(e_set(fixtures::f2()) == ElementSet{0, 3});
    CHECK(support(fixtures::f4()) == ElementSet{0, 1, 2});
    // cut at the empty set is all of G even when the support is smaller
    CHECK(alpha_cut(fixtures::f4(), Mask{0}) == ElementSet{0, 1, 2, 3});

    auto d = dihedral(3);
    auto u = Universe::make({"a", "b"});
    CHECK(alpha_cut(make_universal(d, u), Mask{0b10}).size() == 6);
    CHECK(e_set(make_universal(d, u)).size() == 6);
    CHECK_THROWS_AS(alpha_cut(f1, USet::of(Universe::make({"a"}), {"a"})), UniverseMismatch);
  }

  TEST_CASE("to_string uses element names") {
    CHECK(to_string(fixtures::f2()) == "e:{a} u:{} u^2:{} v:{a} vu:{} vu^2:{}");
  }

  TEST_CASE("property: lattice laws hold pointwise") {
    std::mt19937_64 rng(11);
    for (const auto& g : {cyclic(6), dihedral(4), quaternion()}) {
      auto u = Universe::of_size(3);
      for (int i = 0; i < 200; ++i) {
        const SoftSet a = random_soft(rng, g, u), b = random_soft(rng, g, u),
                      c = random_soft(rng, g, u);
        CHECK(soft_union(a, b) == soft_union(b, a));
        CHECK(soft_intersection(a, b) == soft_intersection(b, a));
        CHECK(soft_union(soft_union(a, b), c) == soft_union(a, soft_union(b, c)));
        CHECK(soft_intersection(soft_intersection(a, b), c) ==
              soft_intersection(a, soft_intersection(b, c)));
        CHECK(soft_union(a, soft_intersection(a, b)) == a);
        CHECK(soft_intersection(a, soft_union(a, b)) == a);
        CHECK(is_soft_subset(soft_intersection(a, b), a));
        CHECK(is_soft_subset(a, soft_union(a, b)));
      }
    }
  }

  TEST_CASE("property: alpha cuts are antitone and contain their witnesses") {
    std::mt19937_64 rng(12);
    auto g = dihedral(4);
    auto u = Universe::of_size(3);
    for (int i = 0; i < 300; ++i) {
      const SoftSet f = random_soft(rng, g, u);
      const Mask a = rng() & 7, b = a | (rng() & 7);
      const ElementSet ca = alpha_cut(f, a), cb = alpha_cut(f, b);
      CHECK(std::includes(ca.begin(), ca.end(), cb.begin(), cb.end()));
      CHECK(ca == oracle::cut(oracle::vals(f), a));
      for (Element x : support(f)) {
        const ElementSet own = alpha_cut(f, f[x]);
        CHECK(std::binary_search(own.begin(), own.end(), x));
      }
    }
  }

  TEST_CASE("property: image of a union of sets is the union of images") {
    std::mt19937_64 rng(13);
    auto g = quaternion();
    auto u = Universe::of_size(4);
    for (int i = 0; i < 200; ++i) {
      const SoftSet f = random_soft(rng, g, u);
      ElementSet k1, k2, both;
      for (Element x = 0; x < 8; ++x) {
        const bool in1 = rng() & 1, in2 = rng() & 1;
        if (in1) k1.push_back(x);
        if (in2) k2.push_back(x);
        if (in1 || in2) both.push_back(x);
      }
      CHECK(image_of_set(f, both) == (image_of_set(f, k1) | image_of_set(f, k2)));
    }
  }
}

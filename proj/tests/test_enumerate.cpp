#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "softint/enumerate.hpp"
#include "softint/error.hpp"

using namespace softint;

TEST_SUITE("enumerate") {
  TEST_CASE("counts") {
    CHECK(enumerate_soft_sets(cyclic(2), Universe::of_size(1)).size() == 4);
    CHECK(enumerate_soft_sets(cyclic(4), Universe::of_size(2)).size() == 256);
    CHECK(enumerate_soft_sets(klein(), Universe::of_size(2)).size() == 256);
    CHECK(enumerate_int_groups(cyclic(2), Universe::of_size(1)).size() == 3);
    for (std::size_t m = 1; m <= 5; ++m) {
      // over the trivial group every soft set is an int-group
      CHECK(enumerate_int_groups(cyclic(1), Universe::of_size(m)).size() == (std::size_t{1} << m));
    }
  }

  TEST_CASE("int-groups with |U| = 1 are characteristic functions of subgroups or empty") {
    for (const auto& g : {cyclic(4), klein(), dihedral(3), quaternion()}) {
      auto one = Universe::of_size(1);
      const auto ints = enumerate_int_groups(g, one);
      CHECK(ints.size() == oracle::subgroups(*g).size() + 1);
      for (const auto& h : oracle::subgroups(*g)) {
        const SoftSet c = make_characteristic(g, one, h);
        CHECK(std::find(ints.begin(), ints.end(), SoftIntGroup::from(c)) != ints.end());
      }
    }
  }

  TEST_CASE("lexicographic order with f(0) most significant") {
    const auto all = enumerate_soft_sets(cyclic(2), Universe::of_size(2));
    REQUIRE(all.size() == 16);
    CHECK(oracle::vals(all[0]) == std::vector<Mask>{0, 0});
    CHECK(oracle::vals(all[1]) == std::vector<Mask>{0, 1});
    CHECK(oracle::vals(all[4]) == std::vector<Mask>{1, 0});
    CHECK(oracle::vals(all[15]) == std::vector<Mask>{3, 3});
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(oracle::vals(all[i - 1]) < oracle::vals(all[i]));
  }

  TEST_CASE("budget") {
    CHECK(soft_set_count_log2(*dihedral(4), *Universe::of_size(3)) == 24);
    CHECK_NOTHROW(require_budget(*dihedral(4), *Universe::of_size(3), kDefaultBudget));
    CHECK_THROWS_AS(require_budget(*dihedral(4), *Universe::of_size(4), kDefaultBudget),
                    BudgetExceeded);
    CHECK_THROWS_AS(enumerate_soft_sets(cyclic(4), Universe::of_size(2), 255), BudgetExceeded);
    CHECK_THROWS_AS(require_budget(*symmetric(4), *Universe::of_size(3), ~std::uint64_t{0}),
                    BudgetExceeded);
    try {
      require_budget(*quaternion(), *Universe::of_size(4), 1000);
    } catch (const BudgetExceeded& e) {
      CHECK(e.required_log2() == 32);
    }
    std::size_t seen = 0;
    for_each_soft_set(cyclic(3), Universe::of_size(2), [&](const SoftSet&) { return ++seen < 10; });
    CHECK(seen == 10);
  }

  TEST_CASE("int-group filter agrees with the oracle") {
    for (const auto& g : {cyclic(4), klein(), cyclic(3)}) {
      auto u = Universe::of_size(2);
      std::size_t want = 0;
      for_each_soft_set(g, u, [&](const SoftSet& f) {
        want += oracle::int_group(*g, oracle::vals(f));
        return true;
      });
      CHECK(enumerate_int_groups(g, u).size() == want);
    }
  }

  TEST_CASE("property: generators are sound and deterministic") {
    auto groups = {dihedral(4), quaternion(), symmetric(4), cyclic(6)};
    auto u = Universe::of_size(3);
    for (const auto& g : groups) {
      for (std::uint64_t seed = 0; seed < 2500; ++seed) {
        const SoftIntGroup f = generate_chain_int_group(g, u, seed);
        if (!oracle::int_group(*g, oracle::vals(f))) FAIL("unsound int-group at seed ", seed);
        const SoftIntGroup n = generate_chain_int_group(g, u, seed, true);
        if (!oracle::int_group(*g, oracle::vals(n)) || !oracle::normal(*g, oracle::vals(n)))
          FAIL("unsound normal int-group at seed ", seed);
      }
      CHECK(generate_chain_int_group(g, u, 42) == generate_chain_int_group(g, u, 42));
      CHECK(generate_soft_set(g, u, 42) == generate_soft_set(g, u, 42));
    }
  }

  TEST_CASE("generators reach more than one shape") {
    auto g = dihedral(4);
    auto u = Universe::of_size(2);
    std::set<std::vector<Mask>> seen;
    for (std::uint64_t s = 0; s < 500; ++s) seen.insert(oracle::vals(generate_chain_int_group(g, u, s)));
    CHECK(seen.size() > 20);
  }
}

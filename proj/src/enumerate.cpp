#include "softint/enumerate.hpp"

#include <random>

#include "softint/error.hpp"

namespace softint {

std::size_t soft_set_count_log2(const FiniteGroup& g, const Universe& u) {
  return g.order() * u.size();
}

void require_budget(const FiniteGroup& g, const Universe& u, std::uint64_t budget) {
  const std::size_t need = soft_set_count_log2(g, u);
  if (need >= 64 || (std::uint64_t{1} << need) > budget) throw BudgetExceeded(need, budget);
}

void for_each_soft_set(const GroupPtr& g, const UniversePtr& u,
                       const std::function<bool(const SoftSet&)>& visit,
                       std::uint64_t budget) {
  require_budget(*g, *u, budget);
  const std::size_t n = g->order();
  const Mask full = u->full();
  std::vector<Mask> values(n, 0);
  for (;;) {
    if (!visit(SoftSet(g, u, values))) return;
    // odometer, last element least significant
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (values[i] < full) {
        ++values[i];
        break;
      }
      values[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<SoftSet> enumerate_soft_sets(const GroupPtr& g, const UniversePtr& u,
                                         std::uint64_t budget) {
  std::vector<SoftSet> out;
  for_each_soft_set(
      g, u,
      [&](const SoftSet& f) {
        out.push_back(f);
        return true;
      },
      budget);
  return out;
}

std::vector<SoftIntGroup> enumerate_int_groups(const GroupPtr& g, const UniversePtr& u,
                                               std::uint64_t budget) {
  std::vector<SoftIntGroup> out;
  for_each_soft_set(
      g, u,
      [&](const SoftSet& f) {
        auto r = check_int_group(f);
        if (auto* ok = std::get_if<SoftIntGroup>(&r)) out.push_back(*ok);
        return true;
      },
      budget);
  return out;
}

namespace {

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& s) {
  std::vector<Element> gens;
  for (Element x : s)
    for (Element a = 0; a < g.order(); ++a) gens.push_back(g.mul(g.mul(a, x), g.inv(a)));
  return closure(g, gens);
}

}  // namespace

SoftIntGroup generate_chain_int_group(const GroupPtr& g, const UniversePtr& u,
                                      std::uint64_t seed, bool normal_only) {
  std::mt19937_64 rng(seed);
  const std::size_t n = g->order();
  auto grow = [&](ElementSet members) {
    return normal_only ? normal_closure(*g, members) : closure(*g, members);
  };

  // Bottom-up: start at {e} or a random (normal) cyclic piece, then keep
  // adjoining a random outside element until we stop or reach G.
  ElementSet h{g->identity()};
  if (rng() % 2) h = grow({static_cast<Element>(rng() % n)});
  std::vector<Subgroup> chain{Subgroup::make(g, h)};
  while (chain.back().size() < n && rng() % 3 != 0) {
    ElementSet outside;
    for (Element x = 0; x < n; ++x)
      if (!chain.back().contains(x)) outside.push_back(x);
    ElementSet next = chain.back().members();
    next.push_back(outside[rng() % outside.size()]);
    chain.push_back(Subgroup::make(g, grow(next)));
  }
  if (chain.back().size() < n) chain.push_back(Subgroup::whole(g));

  const Mask full = u->full();
  std::vector<Mask> masks(chain.size());
  masks.back() = rng() & full;
  for (std::size_t i = masks.size() - 1; i-- > 0;) masks[i] = masks[i + 1] | (rng() & full);
  std::vector<USet> values;
  for (Mask m : masks) values.emplace_back(u, m);
  return int_group_from_chain(chain, values);
}

SoftSet generate_soft_set(const GroupPtr& g, const UniversePtr& u, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mask> values(g->order());
  for (auto& v : values) v = rng() & u->full();
  return SoftSet(g, u, std::move(values));
}

namespace fixtures {

namespace {
UniversePtr ab() { return Universe::make({"a", "b"}); }
}  // namespace

SoftSet f1() { return SoftSet(cyclic(4), ab(), {0b11, 0b01, 0b11, 0b01}); }

SoftSet f2() {
  // e = 0, v = 3
  return make_characteristic(dihedral(3), Universe::make({"a"}), {0, 3});
}

SoftSet f3() { return SoftSet(dihedral(3), ab(), {0b11, 0b01, 0b01, 0b01, 0b01, 0b01}); }

SoftSet f4() { return SoftSet(klein(), ab(), {0b11, 0b01, 0b10, 0b00}); }

}  // namespace fixtures

}  // namespace softint

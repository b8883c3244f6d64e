#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "softint/int_group.hpp"

namespace softint {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// log2 of the number of total maps G -> P(U), i.e. |G| * |U|.
std::size_t soft_set_count_log2(const FiniteGroup& g, const Universe& u);

/// Throws BudgetExceeded when (2^|U|)^|G| > budget.
void require_budget(const FiniteGroup& g, const Universe& u, std::uint64_t budget);

/// Visits every total map G -> P(U) in lexicographic order of the value
/// vector (f(0) most significant, each value compared as a mask). Return
/// false from `visit` to stop early. Throws BudgetExceeded before visiting.
void for_each_soft_set(const GroupPtr& g, const UniversePtr& u,
                       const std::function<bool(const SoftSet&)>& visit,
                       std::uint64_t budget = kDefaultBudget);

std::vector<SoftSet> enumerate_soft_sets(const GroupPtr& g, const UniversePtr& u,
                                         std::uint64_t budget = kDefaultBudget);
std::vector<SoftIntGroup> enumerate_int_groups(const GroupPtr& g, const UniversePtr& u,
                                               std::uint64_t budget = kDefaultBudget);

/// Random subgroup chain H_0 ⊂ ... ⊂ H_k = G with values alpha_0 ⊇ ... ⊇
/// alpha_k, unfolded into x -> alpha_{min i : x in H_i}. With `normal_only`
/// every H_i is normal in G, so the result is a normal int-group.
/// Deterministic per seed.
SoftIntGroup generate_chain_int_group(const GroupPtr& g, const UniversePtr& u,
                                      std::uint64_t seed, bool normal_only = false);

/// Uniformly random total map G -> P(U). Deterministic per seed.
SoftSet generate_soft_set(const GroupPtr& g, const UniversePtr& u, std::uint64_t seed);

namespace fixtures {

/// Z4 over {a,b}: 0,2 -> {a,b}; 1,3 -> {a}
SoftSet f1();
/// D3, characteristic function of {e,v}, |U| = 1
SoftSet f2();
/// D3 over {a,b}: e -> {a,b}, everything else -> {a}
SoftSet f3();
/// Klein over {a,b}: e -> {a,b}, x -> {a}, y -> {b}, xy -> {}
SoftSet f4();

}  // namespace fixtures

}  // namespace softint

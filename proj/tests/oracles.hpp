#pragma once

// Naive reference implementations used as test oracles. They work on plain
// tables and value vectors and share no code with the library beyond the
// element product of an already validated group.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "softint/group.hpp"
#include "softint/soft_set.hpp"

namespace oracle {

using softint::Element;
using softint::FiniteGroup;
using softint::Mask;
using Values = std::vector<Mask>;

inline Values vals(const softint::SoftSet& f) { return Values(f.values().begin(), f.values().end()); }

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& s) {
  std::set<Element> in(s.begin(), s.end());
  if (!in.count(g.identity())) return false;
  for (Element a : s)
    for (Element b : s)
      if (!in.count(g.mul(a, b))) return false;
  return true;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Element>& s) {
  if (!is_subgroup(g, s)) return false;
  std::set<Element> in(s.begin(), s.end());
  for (Element x = 0; x < g.order(); ++x)
    for (Element h : s)
      if (!in.count(g.mul(g.mul(x, h), g.inv(x)))) return false;
  return true;
}

/// All subgroups by scanning every subset (|G| <= 16).
inline std::vector<std::vector<Element>> subgroups(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  const std::size_t n = g.order();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if (m >> x & 1) s.push_back(x);
    if (is_subgroup(g, s)) out.push_back(s);
  }
  return out;
}

inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

inline bool int_group(const FiniteGroup& g, const Values& f) {
  for (Element x = 0; x < g.order(); ++x) {
    if (f[g.inv(x)] != f[x]) return false;
    for (Element y = 0; y < g.order(); ++y)
      if (!sub(f[x] & f[y], f[g.mul(x, y)])) return false;
  }
  return true;
}

inline bool normal(const FiniteGroup& g, const Values& f) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (f[g.mul(x, y)] != f[g.mul(y, x)]) return false;
  return true;
}

inline Values product(const FiniteGroup& g, const Values& f, const Values& h) {
  Values out(g.order(), 0);
  for (Element u = 0; u < g.order(); ++u)
    for (Element v = 0; v < g.order(); ++v) out[g.mul(u, v)] |= f[u] & h[v];
  return out;
}

inline Values conjugate(const FiniteGroup& g, const Values& f, Element u) {
  Values out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = f[g.mul(g.mul(u, x), g.inv(u))];
  return out;
}

inline std::vector<Element> normalizer(const FiniteGroup& g, const Values& f) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element y = 0; y < g.order() && ok; ++y) ok = f[g.mul(x, y)] == f[g.mul(y, x)];
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::vector<Element> cut(const Values& f, Mask alpha) {
  std::vector<Element> out;
  for (Element x = 0; x < f.size(); ++x)
    if (sub(alpha, f[x])) out.push_back(x);
  return out;
}

inline Values random_values(std::mt19937_64& rng, std::size_t n, Mask full) {
  Values v(n);
  for (auto& m : v) m = rng() & full;
  return v;
}

}  // namespace oracle

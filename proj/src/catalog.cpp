#include <algorithm>
#include <numeric>

#include "softint/error.hpp"
#include "softint/group.hpp"

namespace softint {

namespace {

using Table = std::vector<std::vector<Element>>;

void require_positive(std::size_t n) {
  if (n == 0) throw AxiomViolation(Axiom::Shape, {0});
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  require_positive(n);
  Table t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return FiniteGroup::from_table(t);
}

GroupPtr dihedral(std::size_t n) {
  require_positive(n);
  // Index s*n + k stands for v^s u^k. Since u^k v = v u^{-k}:
  // (v^s u^k)(v^t u^l) = v^{s+t} u^{(-1)^t k + l}.
  const std::size_t order = 2 * n;
  Table t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t s = a / n, k = a % n, tt = b / n, l = b % n;
      const std::size_t twisted = tt ? (n - k) % n : k;
      t[a][b] = static_cast<Element>(((s + tt) % 2) * n + (twisted + l) % n);
    }
  std::vector<std::string> names;
  auto power = [](std::size_t k) {
    return k == 0 ? std::string() : k == 1 ? std::string("u") : "u^" + std::to_string(k);
  };
  for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : power(k));
  for (std::size_t k = 0; k < n; ++k) names.push_back("v" + power(k));
  return FiniteGroup::from_table(t, std::move(names));
}

GroupPtr klein() {
  Table t(4, std::vector<Element>(4));
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return FiniteGroup::from_table(t, {"e", "x", "y", "xy"});
}

GroupPtr quaternion() {
  // Index 2*unit + sign with units 1, i, j, k and sign 1 meaning negated.
  // kUnit and kNeg give the unit and the sign flip of a product of units.
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kNeg[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<Element>(8));
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int sign = (a % 2) ^ (b % 2) ^ kNeg[ua][ub];
      t[a][b] = static_cast<Element>(2 * kUnit[ua][ub] + sign);
    }
  return FiniteGroup::from_table(t, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

GroupPtr symmetric(std::size_t n) {
  require_positive(n);
  if (n > 5) throw BoundExceeded("symmetric(n) supported for n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  const std::size_t order = perms.size();
  Table t(order, std::vector<Element>(order));
  std::vector<int> r(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      // a then b: apply perms[a] first.
      for (std::size_t k = 0; k < n; ++k) r[k] = perms[b][perms[a][k]];
      t[a][b] = index_of(r);
    }
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v);
    names.push_back(s);
  }
  return FiniteGroup::from_table(t, std::move(names));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t m = h->order(), order = g->order() * m;
  Table t(order, std::vector<Element>(order));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    names.push_back("(" + g->name(static_cast<Element>(a / m)) + "," +
                    h->name(static_cast<Element>(a % m)) + ")");
    for (std::size_t b = 0; b < order; ++b)
      t[a][b] = static_cast<Element>(
          g->mul(static_cast<Element>(a / m), static_cast<Element>(b / m)) * m +
          h->mul(static_cast<Element>(a % m), static_cast<Element>(b % m)));
  }
  return FiniteGroup::from_table(t, std::move(names));
}

}  // namespace softint

#include "softint/group.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "softint/error.hpp"

namespace softint {

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Element>>& table,
                                 std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw AxiomViolation(Axiom::Shape, {});
  for (std::size_t i = 0; i < n; ++i)
    if (table[i].size() != n) throw AxiomViolation(Axiom::Shape, {i});
  if (!names.empty() && names.size() != n)
    throw AxiomViolation(Axiom::Shape, {names.size()});

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw AxiomViolation(Axiom::Closure, {i, j});
      g->table_[i * n + j] = table[i][j];
    }

  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      for (Element k = 0; k < n; ++k)
        if (g->mul(g->mul(i, j), k) != g->mul(i, g->mul(j, k)))
          throw AxiomViolation(Axiom::Associativity, {i, j, k});

  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i)
      ok = g->mul(e, i) == i && g->mul(i, e) == i;
    if (ok) {
      g->identity_ = e;
      found = true;
    }
  }
  if (!found) throw AxiomViolation(Axiom::Identity, {});

  g->inverses_.assign(n, 0);
  for (Element i = 0; i < n; ++i) {
    bool has = false;
    for (Element j = 0; j < n && !has; ++j)
      if (g->mul(i, j) == g->identity_ && g->mul(j, i) == g->identity_) {
        g->inverses_[i] = j;
        has = true;
      }
    if (!has) throw AxiomViolation(Axiom::Inverse, {i});
  }

  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  g->names_ = std::move(names);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (Element i = 0; i < order_; ++i)
    for (Element j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  return this == &other || (order_ == other.order_ && table_ == other.table_);
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
  for (Element i = 0; i < order_; ++i)
    for (Element j = 0; j < order_; ++j) out[i][j] = mul(i, j);
  return out;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

Element commutator(const FiniteGroup& g, Element x, Element y) {
  return g.mul(g.mul(g.mul(g.inv(x), g.inv(y)), x), y);
}

ElementSet closure(const FiniteGroup& g, std::span<const Element> generators) {
  std::vector<char> in(g.order(), 0);
  ElementSet members{g.identity()};
  in[g.identity()] = 1;
  for (Element x : generators)
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  // Finite: closing under the product also closes under inverses.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {g.mul(members[i], members[j]), g.mul(members[j], members[i])})
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_closed_subset(const FiniteGroup& g, std::span<const Element> members) {
  if (members.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Element x : members) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (Element x : members) {
    if (!in[g.inv(x)]) return false;
    for (Element y : members)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

Subgroup Subgroup::make(GroupPtr parent, ElementSet members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_closed_subset(*parent, members))
    throw NotASubgroup("not a subgroup: " + to_string(*parent, members));
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet all(parent->order());
  for (Element i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet e{parent->identity()};
  return Subgroup(std::move(parent), std::move(e));
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

GroupPtr Subgroup::as_group() const {
  const std::size_t k = members_.size();
  std::map<Element, Element> local;
  for (Element i = 0; i < k; ++i) local[members_[i]] = i;
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> names;
  for (Element i = 0; i < k; ++i) {
    names.push_back(parent_->name(members_[i]));
    for (Element j = 0; j < k; ++j)
      table[i][j] = local.at(parent_->mul(members_[i], members_[j]));
  }
  return FiniteGroup::from_table(table, std::move(names));
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  ElementSet gens;
  for (Element x = 0; x < g->order(); ++x)
    for (Element y = 0; y < g->order(); ++y) gens.push_back(commutator(*g, x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup::make(g, closure(*g, gens));
}

namespace {

using Mask = std::uint64_t;

Mask bit(Element x) { return Mask{1} << x; }

ElementSet to_elements(Mask m) {
  ElementSet out;
  while (m) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

bool mask_closed(const FiniteGroup& g, Mask m) {
  for (Mask a = m; a; a &= a - 1) {
    const auto x = static_cast<Element>(std::countr_zero(a));
    for (Mask b = m; b; b &= b - 1) {
      const auto y = static_cast<Element>(std::countr_zero(b));
      if (!(m & bit(g.mul(x, y)))) return false;
    }
  }
  return true;
}

Mask mask_closure(const FiniteGroup& g, Mask m) {
  Mask current = m | bit(g.identity());
  for (;;) {
    Mask next = current;
    for (Mask a = current; a; a &= a - 1) {
      const auto x = static_cast<Element>(std::countr_zero(a));
      for (Mask b = current; b; b &= b - 1)
        next |= bit(g.mul(x, static_cast<Element>(std::countr_zero(b))));
    }
    if (next == current) return current;
    current = next;
  }
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t bound) {
  const std::size_t n = g->order();
  if (n > std::min<std::size_t>(bound, 64))
    throw BoundExceeded("all_subgroups: |G| = " + std::to_string(n) +
                        " exceeds bound " + std::to_string(std::min<std::size_t>(bound, 64)));

  std::set<Mask> found;
  const Mask e = bit(g->identity());
  if (n <= 12) {
    // Exhaustive scan over subsets containing the identity.
    const Mask others = ((Mask{1} << n) - 1) & ~e;
    for (Mask rest = 0;; rest = (rest - others) & others) {
      const Mask m = rest | e;
      if (mask_closed(*g, m)) found.insert(m);
      if (rest == others) break;
    }
  } else {
    std::vector<Mask> queue{e};
    found.insert(e);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Mask h = queue[i];
      for (Element x = 0; x < n; ++x) {
        if (h & bit(x)) continue;
        const Mask k = mask_closure(*g, h | bit(x));
        if (found.insert(k).second) queue.push_back(k);
      }
    }
  }

  std::vector<ElementSet> sets;
  for (Mask m : found) sets.push_back(to_elements(m));
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Subgroup::make(g, std::move(s)));
  return out;
}

bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element m : h.members())
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
  return true;
}

bool is_normal_subgroup(const GroupPtr& g, const ElementSet& members) {
  return is_normal_subgroup(*g, Subgroup::make(g, members));
}

bool is_dedekind(const GroupPtr& g, std::size_t bound) {
  for (const auto& h : all_subgroups(g, bound))
    if (!is_normal_subgroup(*g, h)) return false;
  return true;
}

Homomorphism Homomorphism::make(GroupPtr domain, GroupPtr codomain,
                                std::vector<Element> map) {
  if (map.size() != domain->order())
    throw NotAHomomorphism("homomorphism map has wrong length");
  for (Element y : map)
    if (y >= codomain->order())
      throw NotAHomomorphism("homomorphism image index out of range");
  for (Element x = 0; x < domain->order(); ++x)
    for (Element y = 0; y < domain->order(); ++y)
      if (map[domain->mul(x, y)] != codomain->mul(map[x], map[y]))
        throw NotAHomomorphism("map(xy) != map(x)map(y) at (" +
                               std::to_string(x) + "," + std::to_string(y) + ")");
  return Homomorphism(std::move(domain), std::move(codomain), std::move(map));
}

Homomorphism Homomorphism::identity(GroupPtr g) {
  std::vector<Element> map(g->order());
  for (Element i = 0; i < map.size(); ++i) map[i] = i;
  return Homomorphism(g, g, std::move(map));
}

Homomorphism Homomorphism::inclusion(const Subgroup& h) {
  return make(h.as_group(), h.parent(), h.members());
}

bool Homomorphism::is_surjective() const {
  return image().size() == codomain_->order();
}

Subgroup Homomorphism::image() const {
  ElementSet img(map_.begin(), map_.end());
  return Subgroup::make(codomain_, std::move(img));
}

Subgroup Homomorphism::kernel() const {
  ElementSet ker;
  for (Element x = 0; x < map_.size(); ++x)
    if (map_[x] == codomain_->identity()) ker.push_back(x);
  return Subgroup::make(domain_, std::move(ker));
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                    std::span<const Element> map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  std::vector<char> hit(b.order(), 0);
  for (Element y : map) {
    if (y >= b.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

Homomorphism QuotientGroup::projection() const {
  return Homomorphism::make(parent_, group_, coset_of_);
}

QuotientGroup quotient_by(const GroupPtr& g, const Subgroup& n) {
  if (!same_group(g, n.parent()))
    throw GroupMismatch("quotient_by: subgroup belongs to another group");
  if (!is_normal_subgroup(*g, n))
    throw NotNormal("quotient_by: " + to_string(*g, n.members()) + " is not normal");

  QuotientGroup q(n);
  q.parent_ = g;
  constexpr Element kUnset = ~Element{0};
  q.coset_of_.assign(g->order(), kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < g->order(); ++x) {
    if (q.coset_of_[x] != kUnset) continue;
    ElementSet coset;
    for (Element m : n.members()) coset.push_back(g->mul(x, m));
    std::sort(coset.begin(), coset.end());
    const auto index = static_cast<Element>(q.cosets_.size());
    for (Element y : coset) q.coset_of_[y] = index;
    q.cosets_.push_back(std::move(coset));
    reps.push_back(x);
  }

  const std::size_t k = reps.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> names;
  for (Element i = 0; i < k; ++i) {
    names.push_back("[" + g->name(reps[i]) + "]");
    for (Element j = 0; j < k; ++j) table[i][j] = q.coset_of_[g->mul(reps[i], reps[j])];
  }
  for (Element x = 0; x < g->order(); ++x)
    for (Element y = 0; y < g->order(); ++y)
      assert(q.coset_of_[g->mul(x, y)] == table[q.coset_of_[x]][q.coset_of_[y]]);
  q.group_ = FiniteGroup::from_table(table, std::move(names));
  return q;
}

std::string to_string(const FiniteGroup& g, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] < g.order() ? g.name(s[i]) : std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace softint

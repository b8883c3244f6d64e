#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace softint {

/// Dense element index 0..n-1 of a finite group.
using Element = std::uint32_t;

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its Cayley table. table(i, j) is the index of
/// x_i * x_j ("x_i then x_j"). Immutable after construction; every
/// constructor validates all group axioms.
class FiniteGroup {
 public:
  /// Throws AxiomViolation. Identity and inverses are derived.
  static GroupPtr from_table(const std::vector<std::vector<Element>>& table,
                             std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverses_[a]; }
  const std::string& name(Element a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  bool is_abelian() const;
  bool same_as(const FiniteGroup& other) const;

  std::vector<std::vector<Element>> table() const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> names_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

// Named families. Element orders are fixed:
//   cyclic(n):    0..n-1 as exponents of a generator
//   dihedral(n):  e, u, ..., u^{n-1}, v, vu, ..., vu^{n-1} with uv = vu^{-1}
//   klein:        e, x, y, xy
//   quaternion:   1, -1, i, -i, j, -j, k, -k
//   symmetric(n): permutations of {0..n-1} in lexicographic order,
//                 composed left to right
//   direct_product(G, H): (g, h) at index g * |H| + h
GroupPtr cyclic(std::size_t n);
GroupPtr dihedral(std::size_t n);
GroupPtr klein();
GroupPtr quaternion();
GroupPtr symmetric(std::size_t n);
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

/// x^{-1} y^{-1} x y
Element commutator(const FiniteGroup& g, Element x, Element y);

/// Smallest subset containing `generators` and closed under the product.
ElementSet closure(const FiniteGroup& g, std::span<const Element> generators);

bool is_closed_subset(const FiniteGroup& g, std::span<const Element> members);

class Subgroup {
 public:
  /// Sorts and deduplicates `members`; throws NotASubgroup.
  static Subgroup make(GroupPtr parent, ElementSet members);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const;
  bool is_subset_of(const Subgroup& other) const;

  /// The subgroup as a group in its own right; element k of the result is
  /// members()[k] of the parent.
  GroupPtr as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr parent, ElementSet members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  GroupPtr parent_;
  ElementSet members_;
};

Subgroup commutator_subgroup(const GroupPtr& g);

inline constexpr std::size_t kDefaultSubgroupBound = 24;

/// Every subgroup of `g`, sorted by size then lexicographic membership.
/// Throws BoundExceeded when |g| > bound (bound itself is capped at 64).
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    std::size_t bound = kDefaultSubgroupBound);

bool is_normal_subgroup(const FiniteGroup& g, const Subgroup& h);
/// Validates `members` first; throws NotASubgroup.
bool is_normal_subgroup(const GroupPtr& g, const ElementSet& members);

bool is_dedekind(const GroupPtr& g, std::size_t bound = kDefaultSubgroupBound);

class Homomorphism {
 public:
  /// Throws NotAHomomorphism when map[xy] != map[x]map[y] for some x, y.
  static Homomorphism make(GroupPtr domain, GroupPtr codomain,
                           std::vector<Element> map);
  static Homomorphism identity(GroupPtr g);
  static Homomorphism inclusion(const Subgroup& h);

  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& map() const { return map_; }

  bool is_surjective() const;
  Subgroup image() const;
  Subgroup kernel() const;

 private:
  Homomorphism(GroupPtr d, GroupPtr c, std::vector<Element> m)
      : domain_(std::move(d)), codomain_(std::move(c)), map_(std::move(m)) {}

  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<Element> map_;
};

/// True iff `map` is a bijection A -> B with map[xy] = map[x]map[y].
bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                    std::span<const Element> map);

class QuotientGroup {
 public:
  const GroupPtr& parent() const { return parent_; }
  const Subgroup& normal_subgroup() const { return normal_; }
  /// Cosets ordered by their smallest element.
  const std::vector<ElementSet>& cosets() const { return cosets_; }
  /// Index of the coset containing x.
  Element coset_of(Element x) const { return coset_of_[x]; }
  const GroupPtr& group() const { return group_; }
  Homomorphism projection() const;

 private:
  friend QuotientGroup quotient_by(const GroupPtr& g, const Subgroup& n);
  QuotientGroup(Subgroup n) : normal_(std::move(n)) {}

  GroupPtr parent_;
  Subgroup normal_;
  std::vector<ElementSet> cosets_;
  std::vector<Element> coset_of_;
  GroupPtr group_;
};

/// Throws NotNormal.
QuotientGroup quotient_by(const GroupPtr& g, const Subgroup& n);

std::string to_string(const FiniteGroup& g, const ElementSet& s);

}  // namespace softint

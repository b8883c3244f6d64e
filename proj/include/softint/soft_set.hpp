#pragma once

#include <span>
#include <string>
#include <vector>

#include "softint/group.hpp"
#include "softint/uset.hpp"

namespace softint {

/// A soft set over U with parameter set E = G: a total map G -> P(U).
/// Elements outside the support carry the empty set; the support is
/// derived, never stored.
class SoftSet {
 public:
  /// Throws Error when `values` does not have one entry per element or a
  /// value has bits outside the universe.
  SoftSet(GroupPtr group, UniversePtr universe, std::vector<Mask> values);

  const GroupPtr& group() const { return group_; }
  const UniversePtr& universe() const { return universe_; }
  std::size_t order() const { return values_.size(); }

  Mask operator[](Element x) const { return values_[x]; }
  USet value(Element x) const { return USet(universe_, values_[x]); }
  std::span<const Mask> values() const { return values_; }

  friend bool operator==(const SoftSet& a, const SoftSet& b);

 private:
  GroupPtr group_;
  UniversePtr universe_;
  std::vector<Mask> values_;
};

// Constructors.
SoftSet make_empty(const GroupPtr& g, const UniversePtr& u);
SoftSet make_universal(const GroupPtr& g, const UniversePtr& u);
/// U on A, empty elsewhere.
SoftSet make_characteristic(const GroupPtr& g, const UniversePtr& u, const ElementSet& a);
/// alpha on A, empty elsewhere.
SoftSet make_a_alpha(const GroupPtr& g, const ElementSet& a, const USet& alpha);
SoftSet make_point(const GroupPtr& g, Element w, const USet& alpha);
SoftSet make_explicit(const GroupPtr& g, const UniversePtr& u, std::vector<Mask> values);

/// Throws GroupMismatch / UniverseMismatch.
void require_compatible(const SoftSet& f, const SoftSet& g);

SoftSet soft_union(const SoftSet& f, const SoftSet& g);
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g);
bool is_soft_subset(const SoftSet& f, const SoftSet& g);
bool is_proper_soft_subset(const SoftSet& f, const SoftSet& g);
bool soft_equal(const SoftSet& f, const SoftSet& g);

/// Union of f(x) over x in K; empty for empty K.
USet image_of_set(const SoftSet& f, const ElementSet& k);

struct ImageClass {
  /// Distinct values, largest cardinality first, ties by mask.
  std::vector<USet> values;
  /// True when the values are totally ordered by inclusion.
  bool chain = true;
};

/// Distinct values over the support. With `include_empty`, the empty set
/// is added whenever the support is a proper subset of G.
ImageClass image_class(const SoftSet& f, bool include_empty = false);

/// {x in G : f(x) ⊇ alpha}, or ⊋ alpha when `strict`. The non-strict cut at
/// the empty set is all of G; see support() for {x : f(x) nonempty}.
ElementSet alpha_cut(const SoftSet& f, Mask alpha, bool strict = false);
/// Throws UniverseMismatch.
ElementSet alpha_cut(const SoftSet& f, const USet& alpha, bool strict = false);

ElementSet support(const SoftSet& f);

/// {x : f(x) = f(e)}
ElementSet e_set(const SoftSet& f);

/// "e:{a,b} u:{a} ..." using element names.
std::string to_string(const SoftSet& f);

}  // namespace softint

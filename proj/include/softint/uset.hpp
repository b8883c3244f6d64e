#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace softint {

/// Membership word for a subset of a universe of at most 64 labels.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxUniverse = 64;

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// A finite initial universe U with distinct display labels.
class Universe {
 public:
  /// Throws Error on duplicate labels, an empty label list or more than
  /// kMaxUniverse labels.
  static UniversePtr make(std::vector<std::string> labels);
  /// Labels a, b, c, ... (u0, u1, ... beyond 26).
  static UniversePtr of_size(std::size_t m);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Index of `label`, or size() when absent.
  std::size_t find(const std::string& label) const;
  Mask full() const {
    return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1;
  }

  bool same_as(const Universe& other) const {
    return this == &other || labels_ == other.labels_;
  }

 private:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {}
  std::vector<std::string> labels_;
};

bool same_universe(const UniversePtr& a, const UniversePtr& b);

// Lattice operations on P(U). Comparisons are by inclusion only.
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper_subset_of(Mask a, Mask b) { return subset_of(a, b) && a != b; }
inline bool comparable(Mask a, Mask b) { return subset_of(a, b) || subset_of(b, a); }
inline int cardinality(Mask a) { return std::popcount(a); }

/// An element of P(U): a subset of one universe.
class USet {
 public:
  USet(UniversePtr universe, Mask bits);
  static USet empty(UniversePtr universe) { return USet(std::move(universe), 0); }
  static USet all(const UniversePtr& universe) { return USet(universe, universe->full()); }
  /// Throws Error on an unknown label.
  static USet of(const UniversePtr& universe, const std::vector<std::string>& labels);

  const UniversePtr& universe() const { return universe_; }
  Mask bits() const { return bits_; }
  bool is_empty() const { return bits_ == 0; }
  bool contains(std::size_t label) const { return (bits_ >> label) & 1; }

  bool is_subset_of(const USet& other) const;
  USet operator|(const USet& other) const;
  USet operator&(const USet& other) const;

  friend bool operator==(const USet& a, const USet& b) {
    return a.bits_ == b.bits_ && same_universe(a.universe_, b.universe_);
  }

 private:
  UniversePtr universe_;
  Mask bits_;
};

/// "{a,b}" with labels in universe order; "{}" for the empty set.
std::string format_mask(const Universe& u, Mask bits);
std::string to_string(const USet& s);

}  // namespace softint

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "softint/group.hpp"
#include "softint/soft_set.hpp"

namespace softint {

/// First failure found by the direct int-group check. All pairs (x, y) are
/// scanned row-major for f(xy) ⊇ f(x) ∩ f(y) before any x is checked for
/// f(x^{-1}) = f(x).
struct Violation {
  enum class Kind { Groupoid, Inverse };
  Kind kind;
  Element x;
  Element y;  // equals x for Kind::Inverse
};

std::string describe(const Violation& v, const SoftSet& f);

/// A soft set that satisfies both int-group conditions.
class SoftIntGroup {
 public:
  /// Throws PreconditionFailed carrying the violation.
  static SoftIntGroup from(SoftSet f);

  const SoftSet& soft() const { return inner_; }
  operator const SoftSet&() const { return inner_; }
  const GroupPtr& group() const { return inner_.group(); }
  const UniversePtr& universe() const { return inner_.universe(); }
  Mask operator[](Element x) const { return inner_[x]; }

  friend bool operator==(const SoftIntGroup& a, const SoftIntGroup& b) {
    return a.inner_ == b.inner_;
  }

 private:
  friend std::variant<SoftIntGroup, Violation> check_int_group(const SoftSet& f);
  explicit SoftIntGroup(SoftSet f) : inner_(std::move(f)) {}
  SoftSet inner_;
};

std::optional<Violation> find_int_group_violation(const SoftSet& f);
std::variant<SoftIntGroup, Violation> check_int_group(const SoftSet& f);
bool is_int_group(const SoftSet& f);

/// Alternative route: every nonempty alpha-cut, alpha in P(U), is a subgroup.
/// Distinct cuts are enumerated through the intersection closure of the
/// values of f, which yields every cut that some alpha can produce.
bool int_group_by_level_cuts(const SoftSet& f);

/// Alternative route: f * f ⊆ f and f^{-1} = f.
bool int_group_by_product(const SoftSet& f);

/// f(e) ⊇ f(x) for all x.
bool identity_dominance(const SoftSet& f);
/// The e-set as a subgroup; throws NotASubgroup if f is not an int-group.
Subgroup e_set_subgroup(const SoftIntGroup& f);

/// f restricted to H, as an int-group over H.as_group().
SoftIntGroup restrict(const SoftIntGroup& f, const Subgroup& h);

/// (f * g)(x) = ∪ { f(u) ∩ g(v) : uv = x }
SoftSet soft_product(const SoftSet& f, const SoftSet& g);
/// f^{-1}(x) = f(x^{-1})
SoftSet soft_inverse(const SoftSet& f);

enum class NormalityCriterion {
  Abelian,        // f(xy) = f(yx)
  ConjEq,         // f(xyx^{-1}) = f(y)
  ConjSup,        // f(xyx^{-1}) ⊇ f(y)
  ConjSub,        // f(xyx^{-1}) ⊆ f(y)
  AlphaCuts,      // every cut at a value of f is a normal subgroup
  CommutatorSup,  // f([x,y]) ⊇ f(x)
};

inline constexpr std::array<NormalityCriterion, 6> kAllCriteria = {
    NormalityCriterion::Abelian,  NormalityCriterion::ConjEq,
    NormalityCriterion::ConjSup,  NormalityCriterion::ConjSub,
    NormalityCriterion::AlphaCuts, NormalityCriterion::CommutatorSup};

const char* to_string(NormalityCriterion c);

/// First (x, y) in row-major order where the criterion fails. For AlphaCuts
/// the pair is (conjugator x, cut member y) with x y x^{-1} outside the cut.
std::optional<std::pair<Element, Element>> normality_witness(const SoftSet& f,
                                                             NormalityCriterion c);
bool is_normal(const SoftSet& f, NormalityCriterion c = NormalityCriterion::Abelian);

/// f([x,y]) = f(e) for all x, y.
bool commutator_value_test(const SoftSet& f);

/// Whether G / e_set(f) is Abelian. Throws PreconditionFailed unless f is
/// normal.
bool quotient_by_eset_abelian(const SoftIntGroup& f);

/// x -> f(u x u^{-1}); conjugate(conjugate(f, u), v) = conjugate(f, uv).
SoftSet conjugate(const SoftSet& f, Element u);
SoftIntGroup conjugate(const SoftIntGroup& f, Element u);

/// {x : f(xy) = f(yx) for all y}
Subgroup normalizer(const SoftSet& f);

/// Distinct conjugates in order of first appearance over u = 0..n-1.
/// Throws EmptySupport.
std::vector<SoftIntGroup> distinct_conjugates(const SoftIntGroup& f);

/// Pointwise intersection of all conjugates of f.
SoftIntGroup largest_normal_contained(const SoftIntGroup& f);

enum class Side { Left, Right };

/// The soft coset af (x -> f(a^{-1}x)) or fa (x -> f(xa^{-1})).
class SoftCoset {
 public:
  SoftCoset(SoftIntGroup base, Element representative, Side side)
      : base_(std::move(base)), rep_(representative), side_(side) {}

  const SoftIntGroup& base() const { return base_; }
  Element representative() const { return rep_; }
  Side side() const { return side_; }

  Mask operator()(Element x) const;
  SoftSet values() const;

 private:
  SoftIntGroup base_;
  Element rep_;
  Side side_;
};

SoftCoset coset(const SoftIntGroup& f, Element a, Side side = Side::Left);
/// a e_f = b e_f as element sets.
bool same_coset_by_eset(const SoftIntGroup& f, Element a, Element b);
/// Distinct coset value functions, first appearance over a = 0..n-1.
std::vector<SoftSet> distinct_cosets(const SoftIntGroup& f, Side side);

/// G/f: the distinct cosets xf under (xf)(yf) = (xy)f.
class SoftQuotientGroup {
 public:
  const SoftIntGroup& base() const { return base_; }
  const GroupPtr& group() const { return group_; }
  /// Smallest x giving each coset, in coset index order.
  const std::vector<Element>& representatives() const { return reps_; }
  Element coset_of(Element x) const { return coset_of_[x]; }
  const SoftSet& coset(Element i) const { return cosets_[i]; }

  /// Coset index i -> index of reps[i] e_f in quotient_by(G, e_f).
  std::vector<Element> bijection_to(const QuotientGroup& by_eset) const;

 private:
  friend SoftQuotientGroup quotient_group(const SoftIntGroup& f);
  explicit SoftQuotientGroup(SoftIntGroup base) : base_(std::move(base)) {}

  SoftIntGroup base_;
  GroupPtr group_;
  std::vector<Element> reps_;
  std::vector<Element> coset_of_;
  std::vector<SoftSet> cosets_;
};

/// Throws NotNormal.
SoftQuotientGroup quotient_group(const SoftIntGroup& f);

/// xf -> f(x) over G/f. Throws NotNormal.
SoftIntGroup quotient_soft(const SoftQuotientGroup& q);
SoftIntGroup quotient_soft(const SoftIntGroup& f);

struct LevelReport {
  ImageClass image;
  /// {f^{f(x)} : x in G} together with G, sorted by size then membership.
  std::vector<Subgroup> level_subgroups;
  bool chain = false;
  /// When chained: from e_set(f) up to G.
  std::vector<Subgroup> chain_order;
  /// H ◁ K for every nested pair H ⊆ K of level subgroups.
  bool poset_level_normal = false;
  /// H_i ◁ H_{i+1} along chain_order; empty when there is no chain.
  std::optional<bool> chain_level_normal;
};

LevelReport level_structure(const SoftIntGroup& f);

/// phi(f)(y) = ∪ { f(x) : phi(x) = y }, empty off the image.
SoftSet soft_image(const Homomorphism& phi, const SoftSet& f);
/// phi^{-1}(g)(x) = g(phi(x))
SoftSet soft_preimage(const Homomorphism& phi, const SoftSet& g);

/// Throws EmptyFamily, GroupMismatch, UniverseMismatch.
SoftIntGroup family_intersection(std::span<const SoftIntGroup> family);

/// Builds x -> alpha_{min i : x in chain[i]} for nested subgroups
/// chain[0] ⊆ ... ⊆ chain[k] = G and values alpha_0 ⊇ ... ⊇ alpha_k.
/// Throws PreconditionFailed when either sequence is not nested.
SoftIntGroup int_group_from_chain(const std::vector<Subgroup>& chain,
                                  const std::vector<USet>& values);

}  // namespace softint

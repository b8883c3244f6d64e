#include "softint/int_group.hpp"

#include <algorithm>
#include <set>

#include "softint/error.hpp"

namespace softint {

std::string describe(const Violation& v, const SoftSet& f) {
  const FiniteGroup& g = *f.group();
  const Universe& u = *f.universe();
  if (v.kind == Violation::Kind::Inverse)
    return "f(" + g.name(v.x) + "^-1) = " + format_mask(u, f[g.inv(v.x)]) +
           " != " + format_mask(u, f[v.x]) + " = f(" + g.name(v.x) + ")";
  const Element xy = g.mul(v.x, v.y);
  return "f(" + g.name(v.x) + "*" + g.name(v.y) + ") = " + format_mask(u, f[xy]) +
         " does not contain f(" + g.name(v.x) + ") & f(" + g.name(v.y) + ") = " +
         format_mask(u, f[v.x] & f[v.y]);
}

SoftIntGroup SoftIntGroup::from(SoftSet f) {
  if (auto v = find_int_group_violation(f))
    throw PreconditionFailed("not a soft int-group: " + describe(*v, f));
  return SoftIntGroup(std::move(f));
}

std::optional<Violation> find_int_group_violation(const SoftSet& f) {
  const FiniteGroup& g = *f.group();
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!subset_of(f[x] & f[y], f[g.mul(x, y)]))
        return Violation{Violation::Kind::Groupoid, x, y};
  for (Element x = 0; x < n; ++x)
    if (f[g.inv(x)] != f[x]) return Violation{Violation::Kind::Inverse, x, x};
  return std::nullopt;
}

std::variant<SoftIntGroup, Violation> check_int_group(const SoftSet& f) {
  if (auto v = find_int_group_violation(f)) return *v;
  return SoftIntGroup(f);
}

bool is_int_group(const SoftSet& f) { return !find_int_group_violation(f).has_value(); }

bool int_group_by_level_cuts(const SoftSet& f) {
  const FiniteGroup& g = *f.group();
  std::set<Mask> closed(f.values().begin(), f.values().end());
  std::vector<Mask> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask a : frontier)
      for (Mask b : closed) {
        const Mask c = a & b;
        if (!closed.count(c)) next.push_back(c);
      }
    for (Mask c : next) closed.insert(c);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  for (Mask alpha : closed) {
    const ElementSet cut = alpha_cut(f, alpha);
    if (!cut.empty() && !is_closed_subset(g, cut)) return false;
  }
  return true;
}

bool int_group_by_product(const SoftSet& f) {
  return is_soft_subset(soft_product(f, f), f) && soft_inverse(f) == f;
}

bool identity_dominance(const SoftSet& f) {
  const Mask at_e = f[f.group()->identity()];
  return std::all_of(f.values().begin(), f.values().end(),
                     [&](Mask v) { return subset_of(v, at_e); });
}

Subgroup e_set_subgroup(const SoftIntGroup& f) { return Subgroup::make(f.group(), e_set(f)); }

SoftIntGroup restrict(const SoftIntGroup& f, const Subgroup& h) {
  if (!same_group(f.group(), h.parent()))
    throw GroupMismatch("restrict: subgroup of a different group");
  std::vector<Mask> values;
  for (Element x : h.members()) values.push_back(f[x]);
  return SoftIntGroup::from(SoftSet(h.as_group(), f.universe(), std::move(values)));
}

SoftSet soft_product(const SoftSet& f, const SoftSet& g) {
  require_compatible(f, g);
  const FiniteGroup& grp = *f.group();
  const auto n = static_cast<Element>(grp.order());
  std::vector<Mask> out(n, 0);
  // Every factorization x = u v is visited once as (u, v) = (u, u^{-1}x).
  for (Element u = 0; u < n; ++u) {
    if (f[u] == 0) continue;
    for (Element v = 0; v < n; ++v) out[grp.mul(u, v)] |= f[u] & g[v];
  }
  return SoftSet(f.group(), f.universe(), std::move(out));
}

SoftSet soft_inverse(const SoftSet& f) {
  const FiniteGroup& g = *f.group();
  std::vector<Mask> out(f.order());
  for (Element x = 0; x < out.size(); ++x) out[x] = f[g.inv(x)];
  return SoftSet(f.group(), f.universe(), std::move(out));
}

const char* to_string(NormalityCriterion c) {
  switch (c) {
    case NormalityCriterion::Abelian: return "abelian";
    case NormalityCriterion::ConjEq: return "conj_eq";
    case NormalityCriterion::ConjSup: return "conj_sup";
    case NormalityCriterion::ConjSub: return "conj_sub";
    case NormalityCriterion::AlphaCuts: return "alpha_cuts";
    case NormalityCriterion::CommutatorSup: return "commutator_sup";
  }
  return "unknown";
}

namespace {

using Pair = std::pair<Element, Element>;

template <typename Pred>
std::optional<Pair> first_failing_pair(const FiniteGroup& g, Pred ok) {
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!ok(x, y)) return Pair{x, y};
  return std::nullopt;
}

std::optional<Pair> cut_normality_witness(const FiniteGroup& g, const ElementSet& cut) {
  std::vector<char> in(g.order(), 0);
  for (Element x : cut) in[x] = 1;
  for (Element a : cut)
    for (Element b : cut)
      if (!in[g.mul(a, b)]) return Pair{a, b};
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : cut)
      if (!in[g.mul(g.mul(x, y), g.inv(x))]) return Pair{x, y};
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Element, Element>> normality_witness(const SoftSet& f,
                                                             NormalityCriterion c) {
  const FiniteGroup& g = *f.group();
  auto conj = [&](Element x, Element y) { return g.mul(g.mul(x, y), g.inv(x)); };
  switch (c) {
    case NormalityCriterion::Abelian:
      return first_failing_pair(g, [&](Element x, Element y) {
        return f[g.mul(x, y)] == f[g.mul(y, x)];
      });
    case NormalityCriterion::ConjEq:
      return first_failing_pair(g, [&](Element x, Element y) { return f[conj(x, y)] == f[y]; });
    case NormalityCriterion::ConjSup:
      return first_failing_pair(g, [&](Element x, Element y) {
        return subset_of(f[y], f[conj(x, y)]);
      });
    case NormalityCriterion::ConjSub:
      return first_failing_pair(g, [&](Element x, Element y) {
        return subset_of(f[conj(x, y)], f[y]);
      });
    case NormalityCriterion::CommutatorSup:
      return first_failing_pair(g, [&](Element x, Element y) {
        return subset_of(f[x], f[commutator(g, x, y)]);
      });
    case NormalityCriterion::AlphaCuts:
      for (const USet& alpha : image_class(f).values)
        if (auto w = cut_normality_witness(g, alpha_cut(f, alpha.bits()))) return w;
      return std::nullopt;
  }
  return std::nullopt;
}

bool is_normal(const SoftSet& f, NormalityCriterion c) {
  return !normality_witness(f, c).has_value();
}

bool commutator_value_test(const SoftSet& f) {
  const FiniteGroup& g = *f.group();
  const Mask at_e = f[g.identity()];
  return !first_failing_pair(g, [&](Element x, Element y) {
            return f[commutator(g, x, y)] == at_e;
          }).has_value();
}

bool quotient_by_eset_abelian(const SoftIntGroup& f) {
  if (!is_normal(f))
    throw PreconditionFailed("quotient_by_eset_abelian: f is not a normal soft int-group");
  return quotient_by(f.group(), e_set_subgroup(f)).group()->is_abelian();
}

SoftSet conjugate(const SoftSet& f, Element u) {
  const FiniteGroup& g = *f.group();
  std::vector<Mask> out(f.order());
  for (Element x = 0; x < out.size(); ++x) out[x] = f[g.mul(g.mul(u, x), g.inv(u))];
  return SoftSet(f.group(), f.universe(), std::move(out));
}

SoftIntGroup conjugate(const SoftIntGroup& f, Element u) {
  return SoftIntGroup::from(conjugate(f.soft(), u));
}

Subgroup normalizer(const SoftSet& f) {
  const FiniteGroup& g = *f.group();
  const auto n = static_cast<Element>(g.order());
  ElementSet members;
  for (Element x = 0; x < n; ++x) {
    bool in = true;
    for (Element y = 0; y < n && in; ++y) in = f[g.mul(x, y)] == f[g.mul(y, x)];
    if (in) members.push_back(x);
  }
  return Subgroup::make(f.group(), std::move(members));
}

std::vector<SoftIntGroup> distinct_conjugates(const SoftIntGroup& f) {
  if (support(f).empty())
    throw EmptySupport("distinct_conjugates: f has empty support");
  std::vector<SoftIntGroup> out;
  for (Element u = 0; u < f.group()->order(); ++u) {
    SoftIntGroup c = conjugate(f, u);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

SoftIntGroup largest_normal_contained(const SoftIntGroup& f) {
  std::vector<Mask> acc(f.soft().values().begin(), f.soft().values().end());
  for (Element u = 0; u < f.group()->order(); ++u) {
    const SoftSet c = conjugate(f.soft(), u);
    for (Element x = 0; x < acc.size(); ++x) acc[x] &= c[x];
  }
  return SoftIntGroup::from(SoftSet(f.group(), f.universe(), std::move(acc)));
}

Mask SoftCoset::operator()(Element x) const {
  const FiniteGroup& g = *base_.group();
  return side_ == Side::Left ? base_[g.mul(g.inv(rep_), x)] : base_[g.mul(x, g.inv(rep_))];
}

SoftSet SoftCoset::values() const {
  std::vector<Mask> out(base_.group()->order());
  for (Element x = 0; x < out.size(); ++x) out[x] = (*this)(x);
  return SoftSet(base_.group(), base_.universe(), std::move(out));
}

SoftCoset coset(const SoftIntGroup& f, Element a, Side side) { return SoftCoset(f, a, side); }

bool same_coset_by_eset(const SoftIntGroup& f, Element a, Element b) {
  const FiniteGroup& g = *f.group();
  const ElementSet e = e_set(f);
  ElementSet left_a, left_b;
  for (Element h : e) {
    left_a.push_back(g.mul(a, h));
    left_b.push_back(g.mul(b, h));
  }
  std::sort(left_a.begin(), left_a.end());
  std::sort(left_b.begin(), left_b.end());
  return left_a == left_b;
}

std::vector<SoftSet> distinct_cosets(const SoftIntGroup& f, Side side) {
  std::vector<SoftSet> out;
  for (Element a = 0; a < f.group()->order(); ++a) {
    SoftSet c = coset(f, a, side).values();
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Element> SoftQuotientGroup::bijection_to(const QuotientGroup& by_eset) const {
  std::vector<Element> map;
  for (Element r : reps_) map.push_back(by_eset.coset_of(r));
  return map;
}

SoftQuotientGroup quotient_group(const SoftIntGroup& f) {
  if (!is_normal(f)) throw NotNormal("quotient_group: f is not a normal soft int-group");
  const FiniteGroup& g = *f.group();
  const auto n = static_cast<Element>(g.order());

  SoftQuotientGroup q(f);
  q.coset_of_.resize(n);
  for (Element x = 0; x < n; ++x) {
    SoftSet c = coset(f, x).values();
    auto it = std::find(q.cosets_.begin(), q.cosets_.end(), c);
    if (it == q.cosets_.end()) {
      q.coset_of_[x] = static_cast<Element>(q.cosets_.size());
      q.cosets_.push_back(std::move(c));
      q.reps_.push_back(x);
    } else {
      q.coset_of_[x] = static_cast<Element>(it - q.cosets_.begin());
    }
  }

  const std::size_t k = q.reps_.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> names;
  for (Element i = 0; i < k; ++i) {
    names.push_back("[" + g.name(q.reps_[i]) + "]");
    for (Element j = 0; j < k; ++j) table[i][j] = q.coset_of_[g.mul(q.reps_[i], q.reps_[j])];
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (q.coset_of_[g.mul(x, y)] != table[q.coset_of_[x]][q.coset_of_[y]])
        throw Error("quotient_group: coset product depends on representatives");
  q.group_ = FiniteGroup::from_table(table, std::move(names));
  return q;
}

SoftIntGroup quotient_soft(const SoftQuotientGroup& q) {
  const SoftIntGroup& f = q.base();
  std::vector<Mask> values;
  for (Element r : q.representatives()) values.push_back(f[r]);
  for (Element x = 0; x < f.group()->order(); ++x)
    if (f[x] != values[q.coset_of(x)])
      throw Error("quotient_soft: value depends on the coset representative");
  return SoftIntGroup::from(SoftSet(q.group(), f.universe(), std::move(values)));
}

SoftIntGroup quotient_soft(const SoftIntGroup& f) { return quotient_soft(quotient_group(f)); }

namespace {

bool normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  for (Element x : k.members())
    for (Element y : h.members())
      if (!h.contains(g.mul(g.mul(x, y), g.inv(x)))) return false;
  return true;
}

}  // namespace

LevelReport level_structure(const SoftIntGroup& f) {
  const GroupPtr& g = f.group();
  LevelReport r;
  r.image = image_class(f);

  std::vector<ElementSet> cuts;
  for (Mask v : f.soft().values()) cuts.push_back(alpha_cut(f, v));
  cuts.push_back(alpha_cut(f, Mask{0}));
  std::sort(cuts.begin(), cuts.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (auto& c : cuts) r.level_subgroups.push_back(Subgroup::make(g, std::move(c)));

  const auto& levels = r.level_subgroups;
  r.chain = true;
  r.poset_level_normal = true;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      if (levels[i].is_subset_of(levels[j])) {
        if (!normal_in(*g, levels[i], levels[j])) r.poset_level_normal = false;
      } else {
        r.chain = false;
      }
    }
  if (r.chain) {
    r.chain_order = levels;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
      ok = ok && normal_in(*g, levels[i], levels[i + 1]);
    r.chain_level_normal = ok;
  }
  return r;
}

SoftSet soft_image(const Homomorphism& phi, const SoftSet& f) {
  if (!same_group(phi.domain(), f.group()))
    throw GroupMismatch("soft_image: soft set is not over the domain");
  std::vector<Mask> out(phi.codomain()->order(), 0);
  for (Element x = 0; x < f.order(); ++x) out[phi(x)] |= f[x];
  return SoftSet(phi.codomain(), f.universe(), std::move(out));
}

SoftSet soft_preimage(const Homomorphism& phi, const SoftSet& g) {
  if (!same_group(phi.codomain(), g.group()))
    throw GroupMismatch("soft_preimage: soft set is not over the codomain");
  std::vector<Mask> out(phi.domain()->order());
  for (Element x = 0; x < out.size(); ++x) out[x] = g[phi(x)];
  return SoftSet(phi.domain(), g.universe(), std::move(out));
}

SoftIntGroup family_intersection(std::span<const SoftIntGroup> family) {
  if (family.empty()) throw EmptyFamily("family_intersection: empty family");
  SoftSet acc = family.front().soft();
  for (const auto& f : family.subspan(1)) acc = soft_intersection(acc, f.soft());
  return SoftIntGroup::from(std::move(acc));
}

SoftIntGroup int_group_from_chain(const std::vector<Subgroup>& chain,
                                  const std::vector<USet>& values) {
  if (chain.empty() || chain.size() != values.size())
    throw PreconditionFailed("int_group_from_chain: need one value per subgroup");
  const GroupPtr& g = chain.back().parent();
  if (chain.back().size() != g->order())
    throw PreconditionFailed("int_group_from_chain: chain must end at G");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i].is_subset_of(chain[i + 1]))
      throw PreconditionFailed("int_group_from_chain: subgroups not nested");
    if (!values[i + 1].is_subset_of(values[i]))
      throw PreconditionFailed("int_group_from_chain: values not descending");
  }
  std::vector<Mask> out(g->order());
  for (Element x = 0; x < out.size(); ++x)
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (chain[i].contains(x)) {
        out[x] = values[i].bits();
        break;
      }
  return SoftIntGroup::from(SoftSet(g, values.front().universe(), std::move(out)));
}

}  // namespace softint

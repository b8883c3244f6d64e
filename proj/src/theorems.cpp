#include "softint/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "softint/error.hpp"
#include "softint/io.hpp"

namespace softint {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::PreconditionUnmet: return "precondition-unmet";
  }
  return "unknown";
}

namespace {

struct Ctx {
  const GroupPtr& g;
  const UniversePtr& u;
  const Homomorphism* hom;
};

using Sets = std::span<const SoftSet>;

Outcome holds() { return {}; }
Outcome violated(std::string w) { return {Verdict::Violated, std::move(w)}; }
Outcome unmet(std::string w) { return {Verdict::PreconditionUnmet, std::move(w)}; }

std::string nm(const FiniteGroup& g, Element x) { return g.name(x); }
std::string ms(const SoftSet& f, Mask m) { return format_mask(*f.universe(), m); }

std::string first_difference(const SoftSet& a, const SoftSet& b, const std::string& la,
                             const std::string& lb) {
  const FiniteGroup& g = *a.group();
  for (Element x = 0; x < a.order(); ++x)
    if (a[x] != b[x])
      return "at " + nm(g, x) + ": " + la + " = " + ms(a, a[x]) + ", " + lb + " = " +
             ms(b, b[x]);
  return "equal";
}

std::string first_non_subset(const SoftSet& a, const SoftSet& b, const std::string& la,
                             const std::string& lb) {
  const FiniteGroup& g = *a.group();
  for (Element x = 0; x < a.order(); ++x)
    if (!subset_of(a[x], b[x]))
      return "at " + nm(g, x) + ": " + la + " = " + ms(a, a[x]) + " not within " + lb + " = " +
             ms(b, b[x]);
  return "contained";
}

std::string normality_failure(const SoftSet& f, const std::string& label) {
  if (auto v = find_int_group_violation(f)) return label + " is not an int-group: " + describe(*v, f);
  if (auto w = normality_witness(f, NormalityCriterion::Abelian)) {
    const FiniteGroup& g = *f.group();
    return label + " not normal: f(" + nm(g, w->first) + "*" + nm(g, w->second) + ") = " +
           ms(f, f[g.mul(w->first, w->second)]) + " != " + ms(f, f[g.mul(w->second, w->first)]) +
           " = f(" + nm(g, w->second) + "*" + nm(g, w->first) + ")";
  }
  return {};
}

Outcome require_normal_int(const SoftSet& f, const std::string& label) {
  auto why = normality_failure(f, label);
  return why.empty() ? holds() : violated(why);
}

Outcome require_int(const SoftSet& f, const std::string& label) {
  if (auto v = find_int_group_violation(f))
    return violated(label + " is not an int-group: " + describe(*v, f));
  return holds();
}

std::string set_str(const FiniteGroup& g, const ElementSet& s) { return to_string(g, s); }

SoftSet restrict_values(const SoftSet& f, const Subgroup& h) {
  std::vector<Mask> values;
  for (Element x : h.members()) values.push_back(f[x]);
  return SoftSet(h.as_group(), f.universe(), std::move(values));
}

std::vector<Subgroup> subgroups_or_empty(const GroupPtr& g) {
  if (g->order() > 64) return {};
  return all_subgroups(g, std::max<std::size_t>(kDefaultSubgroupBound, g->order()));
}

std::vector<Mask> masks_for(const SoftSet& f, std::size_t limit_bits) {
  std::vector<Mask> out;
  const Universe& u = *f.universe();
  if (u.size() <= limit_bits) {
    for (Mask m = 0; m <= u.full(); ++m) out.push_back(m);
  } else {
    out = {0, u.full()};
    for (Mask v : f.values()) out.push_back(v);
    for (std::size_t i = 0; i < u.size(); ++i) out.push_back(Mask{1} << i);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

// --- soft-core / int-group basics -------------------------------------------

Outcome b20(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  const Element e = c.g->identity();
  for (Element x = 0; x < f.order(); ++x)
    if (!subset_of(f[x], f[e]))
      return violated("f(" + nm(*c.g, x) + ") = " + ms(f, f[x]) + " not within f(e) = " +
                      ms(f, f[e]));
  return holds();
}

Outcome b100(const Ctx& c, Sets s) {
  const ElementSet es = e_set(s[0]);
  if (!is_closed_subset(*c.g, es)) return violated("e-set " + set_str(*c.g, es) + " not closed");
  return holds();
}

Outcome b210(const Ctx& c, Sets s) {
  for (const auto& h : subgroups_or_empty(c.g)) {
    const SoftSet r = restrict_values(s[0], h);
    if (auto v = find_int_group_violation(r))
      return violated("restriction to " + set_str(*c.g, h.members()) + ": " + describe(*v, r));
  }
  return holds();
}

Outcome b220(const Ctx&, Sets s) { return require_int(soft_intersection(s[0], s[1]), "f & g"); }

Outcome b300(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  const auto masks = masks_for(f, 4);
  for (Mask a : masks)
    for (Mask b : masks) {
      if (!subset_of(a, b)) continue;
      const ElementSet ca = alpha_cut(f, a), cb = alpha_cut(f, b);
      if (!std::includes(ca.begin(), ca.end(), cb.begin(), cb.end()))
        return violated("alpha = " + ms(f, a) + ", beta = " + ms(f, b) + ": cut " +
                        set_str(*c.g, cb) + " not within " + set_str(*c.g, ca));
    }
  return holds();
}

Outcome b367(const Ctx&, Sets s) {
  const bool direct = is_int_group(s[0]);
  const bool cuts = int_group_by_level_cuts(s[0]);
  if (direct != cuts)
    return violated(std::string("direct check says ") + (direct ? "yes" : "no") +
                    ", level-cut route says " + (cuts ? "yes" : "no"));
  return holds();
}

Outcome b380(const Ctx& c, Sets) {
  const FiniteGroup& g = *c.g;
  const UniversePtr& u = c.u;
  const std::size_t bits = u->size() <= 3 ? u->size() : 0;
  std::vector<Mask> masks;
  if (bits == u->size()) {
    for (Mask m = 0; m <= u->full(); ++m) masks.push_back(m);
  } else {
    masks = {0, u->full()};
    for (std::size_t i = 0; i < u->size(); ++i) masks.push_back(Mask{1} << i);
  }
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      for (Mask a : masks)
        for (Mask b : masks) {
          const SoftSet lhs = soft_product(make_point(c.g, x, USet(u, a)), make_point(c.g, y, USet(u, b)));
          const SoftSet rhs = make_point(c.g, g.mul(x, y), USet(u, a & b));
          if (!(lhs == rhs))
            return violated("x = " + nm(g, x) + ", y = " + nm(g, y) + ", alpha = " +
                            format_mask(*u, a) + ", beta = " + format_mask(*u, b) + ": " +
                            first_difference(lhs, rhs, "product", "point"));
        }
  return holds();
}

Outcome b400(const Ctx&, Sets s) {
  const SoftSet l = soft_product(soft_product(s[0], s[1]), s[2]);
  const SoftSet r = soft_product(s[0], soft_product(s[1], s[2]));
  if (!(l == r)) return violated(first_difference(l, r, "(f*g)*h", "f*(g*h)"));
  return holds();
}

Outcome b420(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  const FiniteGroup& g = *c.g;
  ElementSet all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  const USet alpha = image_of_set(f, all);
  for (Element u = 0; u < g.order(); ++u) {
    const SoftSet p = soft_product(make_point(c.g, u, alpha), f);
    for (Element x = 0; x < g.order(); ++x) {
      const Mask want = f[g.mul(g.inv(u), x)];
      if (p[x] != want)
        return violated("u = " + nm(g, u) + ", x = " + nm(g, x) + ": (point*f)(x) = " +
                        ms(f, p[x]) + ", f(u^-1 x) = " + ms(f, want));
    }
  }
  return holds();
}

Outcome b430(const Ctx&, Sets s) {
  const SoftSet inv = soft_inverse(s[0]);
  if (!(inv == s[0])) return violated(first_difference(inv, s[0], "f^-1", "f"));
  return holds();
}

Outcome b480(const Ctx&, Sets s) {
  const bool direct = is_int_group(s[0]);
  const bool prod = int_group_by_product(s[0]);
  if (direct != prod)
    return violated(std::string("direct check says ") + (direct ? "yes" : "no") +
                    ", product route says " + (prod ? "yes" : "no"));
  return holds();
}

Outcome b490(const Ctx&, Sets s) {
  const SoftSet fg = soft_product(s[0], s[1]);
  const SoftSet gf = soft_product(s[1], s[0]);
  const bool is_int = is_int_group(fg);
  const bool commute = fg == gf;
  if (is_int != commute)
    return violated(std::string("f*g int-group: ") + (is_int ? "yes" : "no") +
                    ", f*g = g*f: " + (commute ? "yes" : "no") +
                    (commute ? "" : " (" + first_difference(fg, gf, "f*g", "g*f") + ")"));
  return holds();
}

// --- normality -------------------------------------------------------------

std::string criteria_summary(const SoftSet& f, std::initializer_list<NormalityCriterion> cs) {
  std::string out;
  for (auto c : cs) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(c)) + "=" + (is_normal(f, c) ? "yes" : "no");
  }
  return out;
}

Outcome agree(const SoftSet& f, std::initializer_list<NormalityCriterion> cs) {
  const bool first = is_normal(f, *cs.begin());
  for (auto c : cs)
    if (is_normal(f, c) != first) return violated(criteria_summary(f, cs));
  return holds();
}

Outcome c15(const Ctx&, Sets s) {
  using N = NormalityCriterion;
  return agree(s[0], {N::Abelian, N::ConjEq, N::ConjSup, N::ConjSub});
}

Outcome c110(const Ctx&, Sets s) {
  using N = NormalityCriterion;
  return agree(s[0], {N::Abelian, N::CommutatorSup});
}

Outcome c220(const Ctx&, Sets s) {
  using N = NormalityCriterion;
  return agree(s[0], {N::Abelian, N::AlphaCuts});
}

Outcome c20(const Ctx& c, Sets s) {
  if (!c.g->is_abelian()) return unmet("G is not Abelian");
  return require_normal_int(s[0], "f");
}

Outcome c30(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  const SoftSet h = make_a_alpha(c.g, e_set(f), USet(c.u, f[c.g->identity()]));
  return require_normal_int(h, "f_(e_f)(f(e)) = " + to_string(h));
}

Outcome c35(const Ctx&, Sets s) { return require_normal_int(soft_intersection(s[0], s[1]), "f & g"); }

Outcome c90fwd(const Ctx&, Sets s) {
  if (!commutator_value_test(s[0])) return unmet("f([x,y]) = f(e) fails for some x, y");
  return require_normal_int(s[0], "f");
}

Outcome c90conv(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  const FiniteGroup& g = *c.g;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const Element k = commutator(g, x, y);
      if (f[k] != f[g.identity()])
        return violated("f([" + nm(g, x) + "," + nm(g, y) + "]) = f(" + nm(g, k) + ") = " +
                        ms(f, f[k]) + " != " + ms(f, f[g.identity()]) + " = f(e)");
    }
  return holds();
}

Outcome c95(const Ctx& c, Sets) {
  const Subgroup derived = commutator_subgroup(c.g);
  for (const auto& n : subgroups_or_empty(c.g)) {
    if (!is_normal_subgroup(*c.g, n)) continue;
    const bool abelian = quotient_by(c.g, n).group()->is_abelian();
    const bool contains = derived.is_subset_of(n);
    if (abelian != contains)
      return violated("N = " + set_str(*c.g, n.members()) + ": G/N Abelian " +
                      (abelian ? "yes" : "no") + ", G' within N " + (contains ? "yes" : "no"));
  }
  return holds();
}

Outcome c100(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  if (!quotient_by_eset_abelian(f)) {
    const ElementSet es = e_set(f);
    return violated("G/e_f with e_f = " + set_str(*c.g, es) + " (order " +
                    std::to_string(c.g->order() / es.size()) + ") is not Abelian");
  }
  return holds();
}

Outcome c190(const Ctx&, Sets s) {
  const LevelReport r = level_structure(SoftIntGroup::from(s[0]));
  if (!r.poset_level_normal) return violated("level subgroups not normal in each other (poset form)");
  if (r.chain_level_normal && !*r.chain_level_normal)
    return violated("chain " + std::to_string(r.chain_order.size()) + " levels not level-normal");
  return holds();
}

Outcome c221(const Ctx& c, Sets s) {
  const ElementSet sup = support(s[0]);
  if (sup.empty()) return unmet("empty support");
  if (!is_closed_subset(*c.g, sup) || !is_normal_subgroup(c.g, sup))
    return violated("support " + set_str(*c.g, sup) + " is not a normal subgroup");
  const ElementSet es = e_set(s[0]);
  if (!is_closed_subset(*c.g, es) || !is_normal_subgroup(c.g, es))
    return violated("e-set " + set_str(*c.g, es) + " is not a normal subgroup");
  return holds();
}

Outcome c221e(const Ctx& c, Sets s) {
  const ElementSet es = e_set(s[0]);
  if (!is_closed_subset(*c.g, es) || !is_normal_subgroup(c.g, es))
    return violated("e-set " + set_str(*c.g, es) + " is not a normal subgroup");
  return holds();
}

Outcome c226(const Ctx& c, Sets) {
  const auto subs = subgroups_or_empty(c.g);
  if (subs.empty()) return unmet("subgroup lattice beyond 64 elements");
  const Subgroup* non_normal = nullptr;
  for (const auto& h : subs)
    if (!is_normal_subgroup(*c.g, h)) {
      non_normal = &h;
      break;
    }
  if (non_normal) {
    // Not Dedekind: the characteristic function of a non-normal subgroup
    // must be a non-normal int-group.
    const SoftSet f = make_characteristic(c.g, c.u, non_normal->members());
    if (!is_int_group(f) || is_normal(f))
      return violated("characteristic function of " + set_str(*c.g, non_normal->members()) +
                      " is not a non-normal int-group");
    return holds();
  }
  // Dedekind: every int-group must be normal.
  std::string witness;
  auto visit = [&](const SoftSet& f) {
    if (is_int_group(f) && !is_normal(f)) {
      witness = "non-normal int-group " + to_string(f);
      return false;
    }
    return true;
  };
  try {
    for_each_soft_set(c.g, c.u, visit);
  } catch (const BudgetExceeded&) {
    for (const auto& h : subs) {
      const SoftSet f = make_characteristic(c.g, c.u, h.members());
      if (!visit(f)) break;
    }
  }
  return witness.empty() ? holds() : violated(witness);
}

// --- products of normal int-groups ------------------------------------------

Outcome c227(const Ctx&, Sets s) {
  const SoftSet fg = soft_product(s[0], s[1]), gf = soft_product(s[1], s[0]);
  if (!(fg == gf)) return violated(first_difference(fg, gf, "f*g", "g*f"));
  return holds();
}

Outcome c228(const Ctx&, Sets s) { return require_int(soft_product(s[0], s[1]), "f*g"); }

Outcome c229(const Ctx&, Sets s) { return require_normal_int(soft_product(s[0], s[1]), "f*g"); }

Outcome c240(const Ctx&, Sets s) {
  const SoftSet &f = s[0], &g = s[1], &h = s[2];
  const SoftSet fg = soft_product(f, g), gf = soft_product(g, f);
  if (!(fg == gf)) return violated("commutativity: " + first_difference(fg, gf, "f*g", "g*f"));
  const SoftSet l = soft_product(fg, h), r = soft_product(f, soft_product(g, h));
  if (!(l == r)) return violated("associativity: " + first_difference(l, r, "(f*g)*h", "f*(g*h)"));
  const SoftSet ff = soft_product(f, f);
  if (!(ff == f)) return violated("idempotence: " + first_difference(ff, f, "f*f", "f"));
  return require_normal_int(fg, "closure: f*g");
}

// --- conjugates, normalizer --------------------------------------------------

Outcome c246(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  std::optional<Element> moved;
  for (Element u = 0; u < c.g->order() && !moved; ++u)
    if (!(conjugate(f, u) == f)) moved = u;
  const bool normal = is_normal(f);
  if (normal == !moved.has_value()) return holds();
  if (moved)
    return violated("f normal but conjugate by " + nm(*c.g, *moved) + " differs: " +
                    first_difference(conjugate(f, *moved), f, "f^u", "f"));
  return violated("f not normal yet fixed by every conjugation");
}

Outcome c270(const Ctx& c, Sets s) {
  const SoftSet& f = s[0];
  const Subgroup n = normalizer(f);  // NotASubgroup surfaces as a violation
  const SoftSet r = restrict_values(f, n);
  if (auto why = normality_failure(r, "f restricted to N(f)"); !why.empty()) return violated(why);
  const bool whole = n.size() == c.g->order();
  if (whole != is_normal(f))
    return violated("N(f) = " + set_str(*c.g, n.members()) + " but f normal: " +
                    (is_normal(f) ? "yes" : "no"));
  return holds();
}

Outcome c290(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  if (support(f).empty()) return unmet("empty support");
  const std::size_t conj = distinct_conjugates(f).size();
  const Subgroup n = normalizer(f);
  if (conj * n.size() != c.g->order())
    return violated(std::to_string(conj) + " conjugates, |N(f)| = " + std::to_string(n.size()) +
                    ", |G| = " + std::to_string(c.g->order()));
  return holds();
}

Outcome c300(const Ctx&, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const SoftSet l = largest_normal_contained(f).soft();
  if (auto why = normality_failure(l, "largest normal"); !why.empty()) return violated(why);
  if (!is_soft_subset(l, f)) return violated(first_non_subset(l, f, "largest normal", "f"));
  const SoftSet& g = s[1];
  if (is_soft_subset(g, f) && !is_soft_subset(g, l))
    return violated("normal g within f but not within the largest normal: " +
                    first_non_subset(g, l, "g", "largest normal"));
  return holds();
}

// --- cosets and quotients ------------------------------------------------------

Outcome c345(const Ctx&, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const std::size_t l = distinct_cosets(f, Side::Left).size();
  const std::size_t r = distinct_cosets(f, Side::Right).size();
  if (l != r) return violated(std::to_string(l) + " left cosets, " + std::to_string(r) + " right cosets");
  return holds();
}

Outcome c355(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const FiniteGroup& g = *c.g;
  for (Element a = 0; a < g.order(); ++a) {
    const SoftCoset left = coset(f, a, Side::Left);
    const SoftSet lv = left.values(), rv = coset(f, a, Side::Right).values();
    if (!(lv == rv))
      return violated("a = " + nm(g, a) + ": " + first_difference(lv, rv, "af", "fa"));
    for (Element x = 0; x < g.order(); ++x) {
      const Mask ga = left(g.mul(x, a)), ag = left(g.mul(a, x));
      if (ga != f[x] || ag != f[x])
        return violated("a = " + nm(g, a) + ", g = " + nm(g, x) + ": af(ga) = " + ms(f, ga) +
                        ", af(ag) = " + ms(f, ag) + ", f(g) = " + ms(f, f[x]));
    }
  }
  return holds();
}

Outcome c360(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const FiniteGroup& g = *c.g;
  std::vector<SoftSet> cos;
  for (Element a = 0; a < g.order(); ++a) cos.push_back(coset(f, a, Side::Left).values());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const bool by_eset = same_coset_by_eset(f, a, b);
      const bool by_value = cos[a] == cos[b];
      if (by_eset != by_value)
        return violated("a = " + nm(g, a) + ", b = " + nm(g, b) + ": ae_f = be_f " +
                        (by_eset ? "yes" : "no") + ", af = bf " + (by_value ? "yes" : "no"));
    }
  return holds();
}

Outcome c370(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const FiniteGroup& g = *c.g;
  std::vector<SoftSet> cos;
  for (Element a = 0; a < g.order(); ++a) cos.push_back(coset(f, a, Side::Left).values());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (cos[a] == cos[b] && f[a] != f[b])
        return violated("af = bf for a = " + nm(g, a) + ", b = " + nm(g, b) + " but f(a) = " +
                        ms(f, f[a]) + ", f(b) = " + ms(f, f[b]));
  return holds();
}

Outcome c380(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const FiniteGroup& g = *c.g;
  (void)quotient_group(f);  // validates the induced table
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const SoftSet p = soft_product(coset(f, x).values(), coset(f, y).values());
      const SoftSet want = coset(f, g.mul(x, y)).values();
      if (!(p == want))
        return violated("x = " + nm(g, x) + ", y = " + nm(g, y) + ": " +
                        first_difference(p, want, "(xf)*(yf)", "(xy)f"));
    }
  return holds();
}

Outcome c383(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const SoftQuotientGroup q = quotient_group(f);
  const QuotientGroup by_eset = quotient_by(c.g, e_set_subgroup(f));
  const auto map = q.bijection_to(by_eset);
  if (!is_isomorphism(*q.group(), *by_eset.group(), map))
    return violated("xf -> x e_f is not an isomorphism (orders " +
                    std::to_string(q.group()->order()) + " and " +
                    std::to_string(by_eset.group()->order()) + ")");
  return holds();
}

Outcome c385(const Ctx& c, Sets s) {
  const SoftIntGroup f = SoftIntGroup::from(s[0]);
  const SoftQuotientGroup q = quotient_group(f);
  const SoftIntGroup qs = quotient_soft(q);
  if (auto why = normality_failure(qs, "f over G/f"); !why.empty()) return violated(why);
  for (Element x = 0; x < c.g->order(); ++x)
    if (qs[q.coset_of(x)] != f[x])
      return violated("x = " + nm(*c.g, x) + ": value on xf " + ms(f, qs[q.coset_of(x)]) +
                      " != f(x) = " + ms(f, f[x]));
  return holds();
}

// --- homomorphisms -------------------------------------------------------------

Outcome d376(const Ctx& c, Sets s) {
  if (!is_soft_subset(s[0], s[1])) return unmet("g1 not within g2");
  const SoftSet a = soft_preimage(*c.hom, s[0]), b = soft_preimage(*c.hom, s[1]);
  if (!is_soft_subset(a, b)) return violated(first_non_subset(a, b, "pre(g1)", "pre(g2)"));
  return holds();
}

Outcome c420(const Ctx& c, Sets s) {
  if (!c.hom->is_surjective()) return unmet("homomorphism not surjective");
  return require_normal_int(soft_image(*c.hom, s[0]), "image");
}

Outcome c430(const Ctx& c, Sets s) {
  return require_normal_int(soft_preimage(*c.hom, s[0]), "preimage");
}

Outcome b163(const Ctx& c, Sets s) {
  const SoftSet back = soft_image(*c.hom, soft_preimage(*c.hom, s[0]));
  if (!is_soft_subset(back, s[0])) return violated(first_non_subset(back, s[0], "img(pre(g))", "g"));
  if (c.hom->is_surjective() && !(back == s[0]))
    return violated("surjective but " + first_difference(back, s[0], "img(pre(g))", "g"));
  return holds();
}

Outcome d593(const Ctx& c, Sets s) {
  return require_normal_int(soft_image(*c.hom, soft_preimage(*c.hom, s[0])), "img(pre(g))");
}

Outcome d593n(const Ctx& c, Sets s) {
  const Subgroup im = c.hom->image();
  if (!is_normal_subgroup(*c.hom->codomain(), im)) return unmet("image not normal in codomain");
  return d593(c, s);
}

using Checker = Outcome (*)(const Ctx&, Sets);

struct Entry {
  TheoremInfo info;
  Checker check;
};

TheoremInfo info(std::string id, std::string statement, std::vector<Input> inputs,
                 bool informational = false) {
  TheoremInfo t;
  t.id = std::move(id);
  t.statement = std::move(statement);
  t.inputs = std::move(inputs);
  t.informational = informational;
  return t;
}

TheoremInfo hom_info(std::string id, std::string statement, std::vector<Input> inputs,
                     Carrier carrier, bool informational = false) {
  TheoremInfo t = info(std::move(id), std::move(statement), std::move(inputs), informational);
  t.carrier = carrier;
  t.needs_hom = true;
  return t;
}

const std::vector<Entry>& entries() {
  using I = Input;
  static const std::vector<Entry> table = [] {
    std::vector<Entry> e = {
        {info("B20", "f(e) ⊇ f(x) for every x", {I::IntGroup}), b20},
        {info("B100", "e_f is a subgroup", {I::IntGroup}), b100},
        {info("B210", "f restricted to any H ≤ G is an int-group over H", {I::IntGroup}), b210},
        {info("B220", "f ∩ g is an int-group", {I::IntGroup, I::IntGroup}), b220},
        {info("B300", "α ⊆ β implies f^β ⊆ f^α", {I::Any}), b300},
        {info("B367", "int-group iff every α-cut is a subgroup", {I::Any}), b367},
        {info("B380", "f_{xα} ∗ f_{yβ} = f_{(xy)(α∩β)}", {}), b380},
        {info("B400", "(f ∗ g) ∗ h = f ∗ (g ∗ h)", {I::Any, I::Any, I::Any}), b400},
        {info("B420", "(f_{uα} ∗ f)(x) = f(u⁻¹x) with α = f(G)", {I::Any}), b420},
        {info("B430", "f⁻¹ = f", {I::IntGroup}), b430},
        {info("B480", "int-group iff f ∗ f ⊆ f and f⁻¹ = f", {I::Any}), b480},
        {info("B490", "f ∗ g is an int-group iff f ∗ g = g ∗ f", {I::IntGroup, I::IntGroup}), b490},
        {info("C15", "f(xy) = f(yx) iff f(xyx⁻¹) = f(y) iff ⊇ iff ⊆", {I::IntGroup}), c15},
        {info("C20", "G Abelian implies f normal", {I::IntGroup}), c20},
        {info("C30", "f_{(e_f)(f(e))} is a normal int-group", {I::IntGroup}, true), c30},
        {info("C30n", "f normal implies f_{(e_f)(f(e))} is a normal int-group", {I::Normal}), c30},
        {info("C35", "f ∩ g is normal", {I::Normal, I::Normal}), c35},
        {info("C90fwd", "f([x,y]) = f(e) for all x, y implies f normal", {I::IntGroup}), c90fwd},
        {info("C90conv", "f normal implies f([x,y]) = f(e) for all x, y", {I::Normal}, true), c90conv},
        {info("C95", "G/N Abelian iff G' ⊆ N", {}), c95},
        {info("C100", "f normal implies G/e_f Abelian", {I::Normal}, true), c100},
        {info("C110", "f normal iff f([x,y]) ⊇ f(x) for all x, y", {I::IntGroup}), c110},
        {info("C190", "f normal implies f is soft level normal", {I::Normal}), c190},
        {info("C220", "f normal iff every level cut is a normal subgroup", {I::IntGroup}), c220},
        {info("C221", "f normal implies e_f and f* are normal subgroups", {I::Normal}, true), c221},
        {info("C221e", "f normal implies e_f is a normal subgroup", {I::Normal}), c221e},
        {info("C226", "G Dedekind iff every int-group over G is normal", {}), c226},
        {info("C227", "f normal implies f ∗ g = g ∗ f", {I::Normal, I::Any}), c227},
        {info("C228", "f normal, g int-group implies f ∗ g int-group", {I::Normal, I::IntGroup}), c228},
        {info("C229", "f, g normal implies f ∗ g normal", {I::Normal, I::Normal}), c229},
        {info("C240", "∗ on normal int-groups: commutative, associative, idempotent, closed",
              {I::Normal, I::Normal, I::Normal}),
         c240},
        {info("C246", "f normal iff f^u = f for every u", {I::IntGroup}), c246},
        {info("C270", "N(f) ≤ G, f|N(f) normal, N(f) = G iff f normal", {I::IntGroup}), c270},
        {info("C290", "number of conjugates = |G : N(f)|", {I::IntGroup}), c290},
        {info("C300", "∩ of conjugates is the largest normal int-group within f",
              {I::IntGroup, I::Normal}),
         c300},
        {info("C345", "as many left cosets as right cosets", {I::IntGroup}), c345},
        {info("C355", "af = fa and af(ga) = af(ag) = f(g)", {I::Normal}), c355},
        {info("C360", "af = bf iff a e_f = b e_f", {I::IntGroup}), c360},
        {info("C370", "af = bf implies f(a) = f(b)", {I::Normal}), c370},
        {info("C380", "(xf) ∗ (yf) = (xy)f", {I::Normal}), c380},
        {info("C383", "G/f ≅ G/e_f via xf -> x e_f", {I::Normal}), c383},
        {info("C385", "xf -> f(x) is a normal int-group over G/f", {I::Normal}), c385},
        {hom_info("D376", "g1 ⊆ g2 implies φ⁻¹(g1) ⊆ φ⁻¹(g2)", {I::Any, I::Any}, Carrier::Codomain),
         d376},
        {hom_info("C420", "φ onto, f normal implies φ(f) normal", {I::Normal}, Carrier::Domain), c420},
        {hom_info("C430", "g normal implies φ⁻¹(g) normal", {I::Normal}, Carrier::Codomain), c430},
        {hom_info("B163", "φ(φ⁻¹(g)) ⊆ g, equal when φ is onto", {I::Any}, Carrier::Codomain), b163},
        {hom_info("D593", "g normal implies φ(φ⁻¹(g)) normal", {I::Normal}, Carrier::Codomain, true),
         d593},
        {hom_info("D593n", "g normal, φ(G) normal implies φ(φ⁻¹(g)) normal", {I::Normal},
                  Carrier::Codomain),
         d593n},
    };
    for (auto& x : e)
      if (x.info.id == "C95") x.info.needs_universe = false;
    return e;
  }();
  return table;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw UnknownTheorem("unknown theorem '" + std::string(id) + "'");
}

const GroupPtr& carrier_group(Carrier c, const GroupPtr& g, const Homomorphism* hom) {
  if (c == Carrier::Domain) return hom->domain();
  if (c == Carrier::Codomain) return hom->codomain();
  return g;
}

const char* to_string(Carrier c) {
  switch (c) {
    case Carrier::Group: return "group";
    case Carrier::Domain: return "domain";
    case Carrier::Codomain: return "codomain";
  }
  return "group";
}

}  // namespace

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> out = [] {
    std::vector<TheoremInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return out;
}

const TheoremInfo& theorem_info(std::string_view id) { return entry(id).info; }

Outcome evaluate(const TheoremInfo& t, const GroupPtr& g, const UniversePtr& u,
                 const Homomorphism* hom, std::span<const SoftSet> sets) {
  const Entry& e = entry(t.id);
  if (t.needs_hom && !hom) return unmet("needs a homomorphism");
  if (t.needs_universe && !u) return unmet("needs a universe");
  if (sets.size() != t.inputs.size())
    return unmet("expects " + std::to_string(t.inputs.size()) + " soft sets, got " +
                 std::to_string(sets.size()));
  const GroupPtr& home = carrier_group(t.carrier, g, hom);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string which = "soft set " + std::to_string(i + 1);
    if (!same_group(sets[i].group(), home)) return unmet(which + " over the wrong group");
    if (!same_universe(sets[i].universe(), u)) return unmet(which + " over the wrong universe");
    if (t.inputs[i] != Input::Any && !is_int_group(sets[i]))
      return unmet(which + " is not an int-group");
    if (t.inputs[i] == Input::Normal && !is_normal(sets[i]))
      return unmet(which + " is not normal");
  }
  try {
    return e.check(Ctx{g, u, hom}, sets);
  } catch (const Error& ex) {
    return violated(std::string("raised: ") + ex.what());
  }
}

TheoremReport check_theorem(std::string_view id, const Instance& inst) {
  const Entry& e = entry(id);
  const auto start = std::chrono::steady_clock::now();
  const Homomorphism* hom = inst.hom ? &*inst.hom : nullptr;
  Outcome o;
  if (e.info.needs_hom && inst.carrier != e.info.carrier && !e.info.inputs.empty())
    o = unmet(std::string("soft sets must live over the ") + to_string(e.info.carrier));
  else
    o = evaluate(e.info, inst.group, inst.universe, hom, inst.soft_sets);
  TheoremReport r;
  r.id = e.info.id;
  r.statement = e.info.statement;
  r.instance_digest = inst.digest();
  r.verdict = o.verdict;
  r.witness = std::move(o.witness);
  r.informational = e.info.informational;
  r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

// --- Instance --------------------------------------------------------------------

std::string Instance::serialize() const {
  std::ostringstream out;
  out << "group " << group_spec << "\n";
  if (universe) {
    out << "universe " << universe->size();
    for (const auto& l : universe->labels()) out << " " << l;
    out << "\n";
  }
  if (hom_spec) out << "hom " << *hom_spec << "\n";
  if (seed) out << "seed " << *seed << "\n";
  for (const auto& f : soft_sets) out << "soft " << to_string(carrier) << "\n" << format_soft_set(f);
  return out.str();
}

std::string Instance::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : serialize()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::pair<std::string_view, std::string_view> split_keyword(std::string_view line) {
  const std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos) return {line, {}};
  std::string_view rest = line.substr(sp + 1);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r')) rest.remove_suffix(1);
  return {line.substr(0, sp), rest};
}

}  // namespace

Instance Instance::parse(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  Instance inst;
  std::size_t i = 0;
  auto rethrow_at = [](const ParseError& e, std::size_t first_line) -> ParseError {
    return ParseError(first_line + e.line() - 1, e.column(), e.detail());
  };
  for (; i < lines.size(); ++i) {
    const auto [key, rest] = split_keyword(lines[i]);
    const std::size_t lineno = i + 1;
    if (key.empty() || key.front() == '#') continue;
    if (key == "soft") break;
    try {
      if (key == "group") {
        inst.group_spec = std::string(rest);
        inst.group = parse_group_spec(rest);
      } else if (key == "universe") {
        std::istringstream words{std::string(rest)};
        std::size_t m = 0;
        words >> m;
        std::vector<std::string> labels;
        for (std::string w; words >> w;) labels.push_back(w);
        if (m == 0 || labels.size() != m) throw ParseError(1, 10, "universe size does not match labels");
        inst.universe = Universe::make(std::move(labels));
      } else if (key == "hom") {
        if (!inst.group) throw ParseError(1, 1, "hom before group");
        inst.hom_spec = std::string(rest);
        inst.hom = parse_hom_spec(rest, inst.group);
      } else if (key == "seed") {
        inst.seed = std::stoull(std::string(rest));
      } else {
        throw ParseError(1, 1, "unknown keyword '" + std::string(key) + "'");
      }
    } catch (const ParseError& e) {
      throw rethrow_at(e, lineno);
    } catch (const std::logic_error&) {
      throw ParseError(lineno, 1, "bad number");
    }
  }
  if (!inst.group) throw ParseError(1, 1, "missing group line");

  bool carrier_set = false;
  while (i < lines.size()) {
    const auto [key, rest] = split_keyword(lines[i]);
    const std::size_t header = i + 1;
    Carrier c;
    if (rest == "group") c = Carrier::Group;
    else if (rest == "domain") c = Carrier::Domain;
    else if (rest == "codomain") c = Carrier::Codomain;
    else throw ParseError(header, 6, "expected group, domain or codomain");
    if (carrier_set && c != inst.carrier) throw ParseError(header, 6, "mixed carriers");
    if (c != Carrier::Group && !inst.hom) throw ParseError(header, 6, "carrier needs a hom line");
    inst.carrier = c;
    carrier_set = true;
    std::string body;
    ++i;
    while (i < lines.size() && split_keyword(lines[i]).first != "soft") body += lines[i++] + "\n";
    const GroupPtr& home = c == Carrier::Group    ? inst.group
                           : c == Carrier::Domain ? inst.hom->domain()
                                                  : inst.hom->codomain();
    try {
      inst.soft_sets.push_back(parse_soft_set(std::string_view(body), home));
    } catch (const ParseError& e) {
      throw rethrow_at(e, header + 1);
    }
    if (!inst.universe) inst.universe = inst.soft_sets.back().universe();
  }
  return inst;
}

}  // namespace softint

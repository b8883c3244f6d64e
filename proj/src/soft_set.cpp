#include "softint/soft_set.hpp"

#include <algorithm>
#include <set>

#include "softint/error.hpp"

namespace softint {

UniversePtr Universe::make(std::vector<std::string> labels) {
  if (labels.empty()) throw Error("universe must have at least one label");
  if (labels.size() > kMaxUniverse)
    throw Error("universe larger than " + std::to_string(kMaxUniverse) + " labels");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error("empty universe label");
    if (!seen.insert(l).second) throw Error("duplicate universe label '" + l + "'");
  }
  return UniversePtr(new Universe(std::move(labels)));
}

UniversePtr Universe::of_size(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    labels.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i))
                             : "u" + std::to_string(i));
  return make(std::move(labels));
}

std::size_t Universe::find(const std::string& label) const {
  return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), label) -
                                  labels_.begin());
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

USet::USet(UniversePtr universe, Mask bits)
    : universe_(std::move(universe)), bits_(bits) {
  if (!subset_of(bits_, universe_->full()))
    throw Error("subset has labels outside its universe");
}

USet USet::of(const UniversePtr& universe, const std::vector<std::string>& labels) {
  Mask bits = 0;
  for (const auto& l : labels) {
    const std::size_t i = universe->find(l);
    if (i == universe->size()) throw Error("unknown universe label '" + l + "'");
    bits |= Mask{1} << i;
  }
  return USet(universe, bits);
}

bool USet::is_subset_of(const USet& other) const {
  if (!same_universe(universe_, other.universe_))
    throw UniverseMismatch("subsets of different universes");
  return subset_of(bits_, other.bits_);
}

USet USet::operator|(const USet& other) const {
  if (!same_universe(universe_, other.universe_))
    throw UniverseMismatch("subsets of different universes");
  return USet(universe_, bits_ | other.bits_);
}

USet USet::operator&(const USet& other) const {
  if (!same_universe(universe_, other.universe_))
    throw UniverseMismatch("subsets of different universes");
  return USet(universe_, bits_ & other.bits_);
}

std::string format_mask(const Universe& u, Mask bits) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i)
    if ((bits >> i) & 1) {
      if (!first) out += ",";
      out += u.label(i);
      first = false;
    }
  return out + "}";
}

std::string to_string(const USet& s) { return format_mask(*s.universe(), s.bits()); }

SoftSet::SoftSet(GroupPtr group, UniversePtr universe, std::vector<Mask> values)
    : group_(std::move(group)), universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != group_->order())
    throw Error("soft set needs one value per group element");
  const Mask full = universe_->full();
  for (Mask v : values_)
    if (!subset_of(v, full)) throw Error("soft set value outside its universe");
}

bool operator==(const SoftSet& a, const SoftSet& b) {
  return a.values_ == b.values_ && same_group(a.group_, b.group_) &&
         same_universe(a.universe_, b.universe_);
}

SoftSet make_empty(const GroupPtr& g, const UniversePtr& u) {
  return SoftSet(g, u, std::vector<Mask>(g->order(), 0));
}

SoftSet make_universal(const GroupPtr& g, const UniversePtr& u) {
  return SoftSet(g, u, std::vector<Mask>(g->order(), u->full()));
}

SoftSet make_characteristic(const GroupPtr& g, const UniversePtr& u, const ElementSet& a) {
  return make_a_alpha(g, a, USet::all(u));
}

SoftSet make_a_alpha(const GroupPtr& g, const ElementSet& a, const USet& alpha) {
  std::vector<Mask> values(g->order(), 0);
  for (Element x : a) {
    if (x >= g->order()) throw Error("element index out of range");
    values[x] = alpha.bits();
  }
  return SoftSet(g, alpha.universe(), std::move(values));
}

SoftSet make_point(const GroupPtr& g, Element w, const USet& alpha) {
  return make_a_alpha(g, ElementSet{w}, alpha);
}

SoftSet make_explicit(const GroupPtr& g, const UniversePtr& u, std::vector<Mask> values) {
  return SoftSet(g, u, std::move(values));
}

void require_compatible(const SoftSet& f, const SoftSet& g) {
  if (!same_group(f.group(), g.group()))
    throw GroupMismatch("soft sets over different groups");
  if (!same_universe(f.universe(), g.universe()))
    throw UniverseMismatch("soft sets over different universes");
}

namespace {

template <typename Op>
SoftSet pointwise(const SoftSet& f, const SoftSet& g, Op op) {
  require_compatible(f, g);
  std::vector<Mask> out(f.order());
  for (Element x = 0; x < out.size(); ++x) out[x] = op(f[x], g[x]);
  return SoftSet(f.group(), f.universe(), std::move(out));
}

}  // namespace

SoftSet soft_union(const SoftSet& f, const SoftSet& g) {
  return pointwise(f, g, [](Mask a, Mask b) { return a | b; });
}

SoftSet soft_intersection(const SoftSet& f, const SoftSet& g) {
  return pointwise(f, g, [](Mask a, Mask b) { return a & b; });
}

bool is_soft_subset(const SoftSet& f, const SoftSet& g) {
  require_compatible(f, g);
  for (Element x = 0; x < f.order(); ++x)
    if (!subset_of(f[x], g[x])) return false;
  return true;
}

bool is_proper_soft_subset(const SoftSet& f, const SoftSet& g) {
  return is_soft_subset(f, g) && !soft_equal(f, g);
}

bool soft_equal(const SoftSet& f, const SoftSet& g) {
  require_compatible(f, g);
  return std::equal(f.values().begin(), f.values().end(), g.values().begin());
}

USet image_of_set(const SoftSet& f, const ElementSet& k) {
  Mask acc = 0;
  for (Element x : k) {
    if (x >= f.order()) throw Error("element index out of range");
    acc |= f[x];
  }
  return USet(f.universe(), acc);
}

ImageClass image_class(const SoftSet& f, bool include_empty) {
  std::vector<Mask> distinct;
  bool proper_support = false;
  for (Mask v : f.values()) {
    if (v == 0) {
      proper_support = true;
      continue;
    }
    distinct.push_back(v);
  }
  if (include_empty && proper_support) distinct.push_back(0);
  std::sort(distinct.begin(), distinct.end(), [](Mask a, Mask b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) > cardinality(b) : a < b;
  });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  ImageClass out;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    out.values.emplace_back(f.universe(), distinct[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (!comparable(distinct[i], distinct[j])) out.chain = false;
  }
  return out;
}

ElementSet alpha_cut(const SoftSet& f, Mask alpha, bool strict) {
  ElementSet out;
  for (Element x = 0; x < f.order(); ++x)
    if (strict ? proper_subset_of(alpha, f[x]) : subset_of(alpha, f[x])) out.push_back(x);
  return out;
}

ElementSet alpha_cut(const SoftSet& f, const USet& alpha, bool strict) {
  if (!same_universe(f.universe(), alpha.universe()))
    throw UniverseMismatch("alpha_cut: alpha over a different universe");
  return alpha_cut(f, alpha.bits(), strict);
}

ElementSet support(const SoftSet& f) {
  ElementSet out;
  for (Element x = 0; x < f.order(); ++x)
    if (f[x] != 0) out.push_back(x);
  return out;
}

ElementSet e_set(const SoftSet& f) {
  const Mask at_e = f[f.group()->identity()];
  ElementSet out;
  for (Element x = 0; x < f.order(); ++x)
    if (f[x] == at_e) out.push_back(x);
  return out;
}

std::string to_string(const SoftSet& f) {
  std::string out;
  for (Element x = 0; x < f.order(); ++x) {
    if (x) out += " ";
    out += f.group()->name(x) + ":" + format_mask(*f.universe(), f[x]);
  }
  return out;
}

}  // namespace softint

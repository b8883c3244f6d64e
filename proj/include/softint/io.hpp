#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "softint/group.hpp"
#include "softint/soft_set.hpp"

namespace softint {

// Cayley-table files:
//   order n
//   n rows of n whitespace-separated 0-based indices
//   names l_0 ... l_{n-1}        (optional)
// Identity and inverses are derived. Lines starting with '#' are skipped.
GroupPtr parse_cayley_table(std::istream& in);
GroupPtr read_cayley_table(const std::string& path);
std::string format_cayley_table(const FiniteGroup& g);

// Soft-set files:
//   universe m l_0 ... l_{m-1}
//   <element-index> : {lab,lab,...}     one line per element, {} for empty
// Omitted elements default to the empty set. Whitespace-insensitive and
// order-insensitive inside the braces. Lines starting with '#' are skipped.
SoftSet parse_soft_set(std::istream& in, const GroupPtr& g);
SoftSet parse_soft_set(std::string_view text, const GroupPtr& g);
SoftSet read_soft_set(const std::string& path, const GroupPtr& g);
/// Writes every element, one per line. Each line of `comment` is emitted
/// as a leading "# ..." line.
std::string format_soft_set(const SoftSet& f, std::string_view comment = {});

/// cyclic:n, dihedral:n, klein, quaternion, symmetric:n, table:PATH, plus
/// the short forms Zn, Dn, Sn, Q8, V4. Throws ParseError (line 1).
GroupPtr parse_group_spec(std::string_view spec);

/// Homomorphism specs, relative to a context group G:
///   identity           G -> G
///   mod:n:k            Z_n -> Z_k, k divides n (G ignored)
///   sign:n             D_n -> Z_2, v -> 1 (G ignored)
///   quotient:i,j,...   G -> G/N for the listed normal subgroup N
///   inclusion:i,j,...  H -> G for the listed subgroup H
Homomorphism parse_hom_spec(std::string_view spec, const GroupPtr& g);

}  // namespace softint

#pragma once

#include <vector>

#include "invar/perm_group.hpp"
#include "invar/poly.hpp"

namespace invar {

/// One cycle type's contribution to the Molien sum: multiplicity elements
/// sharing det(Id - l*sigma) = prod over cycles (1 - l^length).
struct RawTerm {
  long multiplicity = 0;
  DenomDegrees degrees;

  bool operator==(const RawTerm&) const = default;
};

struct MolienResult {
  std::size_t group_order = 0;
  std::vector<RawTerm> raw_terms; // grouped by cycle type, sorted by degrees
  GradedSeries canonical;         // denominator {1..n}, integer numerator
  BigInt h_at_one;                // canonical numerator evaluated at 1
};

/// det(Id - l*sigma) for a permutation matrix factors as one (1 - l^len) per
/// cycle; the degrees are exactly the cycle type.
DenomDegrees element_denominator(const Permutation& p);

/// (1/|G|) sum over sigma of 1/det(Id - l*sigma), brought to the canonical
/// denominator {1,...,n}. The numerator is guaranteed integral with
/// nonnegative coefficients and h(1) * |G| == n!; violations throw
/// InternalInconsistency, as they cannot arise for permutation groups.
MolienResult molien_series(const PermGroup& g);

/// Number of degree-d monomials fixed by p: exponent vectors constant on
/// cycles, i.e. the denumerant of d over the cycle lengths (computed by
/// dynamic programming). Equals coefficient d of 1/det(Id - l*p).
BigInt fixed_monomial_count(const Permutation& p, int d);

namespace detail {

/// |G| * h(lambda) over the standard denominator {1..n}, summing one
/// exact-division cofactor per cycle type. Throws NotDivisible when some
/// cycle-type denominator does not divide prod (1 - l^i).
IntPoly molien_numerator_sum(const std::vector<RawTerm>& terms, int n);

/// Same sum via a full common denominator with maximal factor
/// multiplicities, then one final exact division; never fails.
IntPoly molien_numerator_sum_common_denominator(const std::vector<RawTerm>& terms, int n);

} // namespace detail

} // namespace invar

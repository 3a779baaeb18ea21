#include "invar/molien.hpp"

#include <algorithm>
#include <map>

namespace invar {

DenomDegrees element_denominator(const Permutation& p) {
  return DenomDegrees(cycle_type(p).lengths);
}

namespace detail {

IntPoly molien_numerator_sum(const std::vector<RawTerm>& terms, int n) {
  const IntPoly target = DenomDegrees::standard(n).product_poly();
  IntPoly sum;
  for (const auto& term : terms) {
    const IntPoly cofactor = exact_divide(target, term.degrees.product_poly());
    sum += cofactor * BigInt(term.multiplicity);
  }
  return sum;
}

IntPoly molien_numerator_sum_common_denominator(const std::vector<RawTerm>& terms, int n) {
  // Common denominator: every distinct factor at its maximal multiplicity.
  std::map<int, long> max_mult;
  for (const auto& term : terms) {
    std::map<int, long> mult;
    for (int d : term.degrees.degrees()) ++mult[d];
    for (const auto& [d, m] : mult) max_mult[d] = std::max(max_mult[d], m);
  }
  IntPoly common{BigInt(1)};
  for (const auto& [d, m] : max_mult)
    for (long i = 0; i < m; ++i) common = common * IntPoly::one_minus_power(static_cast<std::size_t>(d));

  IntPoly sum;
  for (const auto& term : terms) {
    const IntPoly cofactor = exact_divide(common, term.degrees.product_poly());
    sum += cofactor * BigInt(term.multiplicity);
  }
  // sum / common == |G| * H, so multiplying through by the standard product
  // leaves an exact polynomial division.
  const IntPoly target = DenomDegrees::standard(n).product_poly();
  return exact_divide(sum * target, common);
}

} // namespace detail

MolienResult molien_series(const PermGroup& g) {
  const int n = g.degree();

  std::map<std::vector<int>, long> by_type;
  for (const auto& p : g.elements()) ++by_type[cycle_type(p).lengths];

  MolienResult result;
  result.group_order = g.order();
  for (const auto& [lengths, count] : by_type)
    result.raw_terms.push_back(RawTerm{count, DenomDegrees(lengths)});

  IntPoly sum;
  try {
    sum = detail::molien_numerator_sum(result.raw_terms, n);
  } catch (const NotDivisible&) {
    // Every cycle-type denominator of S_n divides prod (1 - l^i) (count
    // cyclotomic factors), but the summation does not rely on that.
    sum = detail::molien_numerator_sum_common_denominator(result.raw_terms, n);
  }

  // The averaged numerator is a theorem-backed integer polynomial; anything
  // else is a bug, not an input property.
  const BigInt order(static_cast<unsigned long>(g.order()));
  std::vector<BigInt> h(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const BigInt& c = sum.coeffs()[i];
    if (!mpz_divisible_p(c.get_mpz_t(), order.get_mpz_t()))
      throw InternalInconsistency("Molien numerator is not integral after averaging");
    h[i] = c / order;
    if (h[i] < 0) throw InternalInconsistency("Molien numerator has a negative coefficient");
  }

  result.canonical = GradedSeries{IntPoly(std::move(h)), DenomDegrees::standard(n)};
  result.h_at_one = result.canonical.numerator.at_one();

  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
  if (result.h_at_one * order != factorial)
    throw InternalInconsistency("h(1) * |G| != n! for the Molien numerator");
  return result;
}

BigInt fixed_monomial_count(const Permutation& p, int d) {
  if (d < 0) return BigInt(0);
  std::vector<BigInt> ways(static_cast<std::size_t>(d) + 1, BigInt(0));
  ways[0] = 1;
  for (int len : cycle_type(p).lengths)
    for (int i = len; i <= d; ++i)
      ways[static_cast<std::size_t>(i)] += ways[static_cast<std::size_t>(i - len)];
  return ways[static_cast<std::size_t>(d)];
}

} // namespace invar

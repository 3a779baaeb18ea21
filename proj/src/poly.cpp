#include "invar/poly.hpp"

#include <algorithm>
#include <sstream>

namespace invar {

RatPoly to_rational(const IntPoly& p) {
  std::vector<BigRat> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = BigRat(p.coeffs()[i]);
  return RatPoly(std::move(c));
}

IntPoly exact_divide(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw DivideByZero("polynomial division by zero");
  if (dividend.is_zero()) return IntPoly{};
  const std::size_t ddeg = *dividend.degree();
  const std::size_t vdeg = *divisor.degree();
  if (ddeg < vdeg)
    throw NotDivisible("dividend degree " + std::to_string(ddeg) + " below divisor degree " +
                       std::to_string(vdeg));

  const BigInt& lead = divisor.coeffs()[vdeg];
  std::vector<BigInt> rem = dividend.coeffs();
  std::vector<BigInt> q(ddeg - vdeg + 1, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + vdeg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw NotDivisible("quotient would not have integer coefficients");
    q[k] = top / lead;
    for (std::size_t j = 0; j <= vdeg; ++j) rem[k + j] -= q[k] * divisor.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw NotDivisible("nonzero remainder");
  return IntPoly(std::move(q));
}

bool is_palindromic(const IntPoly& h) {
  if (h.is_zero()) return true; // vacuous case, fixed by convention
  const auto& c = h.coeffs();
  std::size_t k = 0;
  while (c[k] == 0) ++k;
  const std::size_t hi = c.size() - 1;
  for (std::size_t i = 0; 2 * i <= hi - k; ++i)
    if (c[k + i] != c[hi - i]) return false;
  return true;
}

std::optional<long> palindromic_offset(const IntPoly& h) {
  if (h.is_zero() || !is_palindromic(h)) return std::nullopt;
  const auto& c = h.coeffs();
  std::size_t k = 0;
  while (c[k] == 0) ++k;
  return static_cast<long>(k + c.size() - 1);
}

DenomDegrees::DenomDegrees(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_)
    if (d < 1) throw UsageError("denominator degree must be positive, got " + std::to_string(d));
  std::sort(degrees_.begin(), degrees_.end());
}

DenomDegrees DenomDegrees::standard(int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = i + 1;
  return DenomDegrees(std::move(d));
}

IntPoly DenomDegrees::product_poly() const {
  IntPoly p{BigInt(1)};
  for (int d : degrees_) p = p * IntPoly::one_minus_power(static_cast<std::size_t>(d));
  return p;
}

std::vector<BigRat> series_coefficients(const RatPoly& numerator, const DenomDegrees& denominator,
                                        std::size_t max_degree) {
  std::vector<BigRat> c(max_degree + 1, BigRat(0));
  for (std::size_t i = 0; i < numerator.size() && i <= max_degree; ++i)
    c[i] = numerator.coeffs()[i];
  // Multiplying by 1/(1 - l^d) is a strided prefix sum.
  for (int d : denominator.degrees())
    for (std::size_t i = static_cast<std::size_t>(d); i <= max_degree; ++i)
      c[i] += c[i - static_cast<std::size_t>(d)];
  return c;
}

std::vector<BigRat> series_coefficients(const GradedSeries& s, std::size_t max_degree) {
  return series_coefficients(to_rational(s.numerator), s.denominator, max_degree);
}

GradedSeries to_standard_form(const GradedSeries& s, const DenomDegrees& target) {
  // Multiset differences target \ source and source \ target.
  std::vector<int> missing, extra;
  {
    const auto& src = s.denominator.degrees();
    const auto& tgt = target.degrees();
    std::size_t i = 0, j = 0;
    while (i < src.size() || j < tgt.size()) {
      if (j == tgt.size() || (i < src.size() && src[i] < tgt[j]))
        extra.push_back(src[i++]);
      else if (i == src.size() || tgt[j] < src[i])
        missing.push_back(tgt[j++]);
      else {
        ++i;
        ++j;
      }
    }
  }

  IntPoly numerator = s.numerator;
  for (int d : missing) numerator = numerator * IntPoly::one_minus_power(static_cast<std::size_t>(d));
  if (!extra.empty()) {
    IntPoly divisor{BigInt(1)};
    for (int d : extra) divisor = divisor * IntPoly::one_minus_power(static_cast<std::size_t>(d));
    try {
      numerator = exact_divide(numerator, divisor);
    } catch (const NotDivisible&) {
      throw NotRepresentable("series has no integer-polynomial numerator over the target degrees");
    }
  }

  GradedSeries out{std::move(numerator), target};
  if (out.numerator * s.denominator.product_poly() != s.numerator * target.product_poly())
    throw InternalInconsistency("denominator rewrite failed cross-multiplication check");
  return out;
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const BigInt& a = p.coeffs()[k];
    if (a == 0) continue;
    const bool negative = a < 0;
    const BigInt mag = negative ? BigInt(-a) : a;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'l';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string to_string(const DenomDegrees& d) {
  std::ostringstream os;
  for (int deg : d.degrees()) {
    os << "(1-l";
    if (deg > 1) os << '^' << deg;
    os << ')';
  }
  return os.str();
}

} // namespace invar

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "invar/errors.hpp"

namespace invar {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Dense univariate polynomial over an exact coefficient ring, stored in
/// ascending powers of l with trailing zeros trimmed. The zero polynomial
/// holds no coefficients and its degree is nullopt. All arithmetic is exact.
template <typename Coeff>
class DensePoly {
public:
  DensePoly() = default;
  DensePoly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
  explicit DensePoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// a * l^k
  static DensePoly term(std::size_t k, Coeff a) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[k] = std::move(a);
    return DensePoly(std::move(c));
  }

  /// 1 - l^d
  static DensePoly one_minus_power(std::size_t d) {
    if (d == 0) return DensePoly{};
    std::vector<Coeff> c(d + 1, Coeff(0));
    c[0] = Coeff(1);
    c[d] = Coeff(-1);
    return DensePoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  std::size_t size() const { return c_.size(); }
  const std::vector<Coeff>& coeffs() const { return c_; }

  /// Coefficient of l^k; zero beyond the stored range.
  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }

  /// Sum of coefficients, the value at l = 1.
  Coeff at_one() const {
    Coeff s(0);
    for (const auto& x : c_) s += x;
    return s;
  }

  bool operator==(const DensePoly&) const = default;

  DensePoly operator+(const DensePoly& o) const {
    std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return DensePoly(std::move(r));
  }

  DensePoly operator-(const DensePoly& o) const {
    std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return DensePoly(std::move(r));
  }

  DensePoly operator-() const {
    std::vector<Coeff> r(c_);
    for (auto& x : r) x = -x;
    return DensePoly(std::move(r));
  }

  DensePoly operator*(const DensePoly& o) const {
    if (is_zero() || o.is_zero()) return DensePoly{};
    std::vector<Coeff> r(c_.size() + o.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return DensePoly(std::move(r));
  }

  DensePoly operator*(const Coeff& a) const {
    std::vector<Coeff> r(c_);
    for (auto& x : r) x *= a;
    return DensePoly(std::move(r));
  }

  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<BigRat>;

RatPoly to_rational(const IntPoly& p);

/// The q with q * divisor == dividend, which must exist with integer
/// coefficients; otherwise throws NotDivisible (DivideByZero on a zero
/// divisor). The zero dividend yields the zero quotient.
IntPoly exact_divide(const IntPoly& dividend, const IntPoly& divisor);

/// True iff the coefficient run from the lowest to the highest nonzero term
/// reads the same in both directions. The zero polynomial counts as
/// palindromic by convention.
bool is_palindromic(const IntPoly& h);

/// For a nonzero palindromic h with lowest nonzero term l^k and highest
/// l^K, the offset k + K realizing l^(k+K) h(1/l) == h(l); nullopt when h is
/// zero or not palindromic.
std::optional<long> palindromic_offset(const IntPoly& h);

/// Multiset of positive degrees d_1..d_k standing for the formal product
/// prod_i (1 - l^(d_i)); multiset equality is the identity criterion.
class DenomDegrees {
public:
  DenomDegrees() = default;
  explicit DenomDegrees(std::vector<int> degrees);

  /// {1, 2, ..., n}
  static DenomDegrees standard(int n);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t count() const { return degrees_.size(); }
  bool operator==(const DenomDegrees&) const = default;
  auto operator<=>(const DenomDegrees&) const = default;

  /// The expanded product prod (1 - l^d).
  IntPoly product_poly() const;

private:
  std::vector<int> degrees_; // ascending
};

/// numerator / prod (1 - l^(d_i)) as a formal power series. Common factors
/// between numerator and denominator are deliberately never cancelled: the
/// denominator degrees are part of the value's identity.
struct GradedSeries {
  IntPoly numerator;
  DenomDegrees denominator;

  bool operator==(const GradedSeries&) const = default;
};

/// Power-series coefficients c_0..c_max_degree of numerator * prod
/// (1 - l^d)^-1, each factor expanded as the geometric series sum_k l^(dk).
std::vector<BigRat> series_coefficients(const RatPoly& numerator, const DenomDegrees& denominator,
                                        std::size_t max_degree);
std::vector<BigRat> series_coefficients(const GradedSeries& s, std::size_t max_degree);

/// Rewrites s over exactly the target denominator degrees, preserving the
/// series. Throws NotRepresentable when the resulting numerator would not be
/// an integer polynomial. The result is verified by cross-multiplication.
GradedSeries to_standard_form(const GradedSeries& s, const DenomDegrees& target);

/// "1 + l^2 + l^3 + 2*l^4 + l^5" (ascending powers); "0" for the zero
/// polynomial.
std::string to_string(const IntPoly& p);

/// "(1-l)(1-l^2)(1-l^3)(1-l^4)"
std::string to_string(const DenomDegrees& d);

} // namespace invar

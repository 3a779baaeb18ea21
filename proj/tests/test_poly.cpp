#include <doctest.h>

#include <cstdint>
#include <vector>

#include "invar/errors.hpp"
#include "invar/poly.hpp"

using namespace invar;

namespace {

// Deterministic small RNG for the property tests.
struct Lcg {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  int next(int bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
  }
};

IntPoly random_poly(Lcg& rng, int max_degree, int max_abs) {
  std::vector<BigInt> c(static_cast<std::size_t>(rng.next(max_degree + 1)) + 1);
  for (auto& x : c) x = rng.next(2 * max_abs + 1) - max_abs;
  return IntPoly(std::move(c));
}

// Independent expansion oracle: term-by-term power-series long division by
// the expanded denominator polynomial.
std::vector<BigRat> long_division_series(const IntPoly& numerator, const DenomDegrees& denom,
                                         std::size_t max_degree) {
  const IntPoly d = denom.product_poly();
  std::vector<BigRat> c(max_degree + 1, BigRat(0));
  for (std::size_t k = 0; k <= max_degree; ++k) {
    BigRat acc(numerator.coeff(k));
    for (std::size_t j = 1; j <= k; ++j) acc -= BigRat(d.coeff(j)) * c[k - j];
    c[k] = acc / BigRat(d.coeff(0)); // constant term is 1
  }
  return c;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPoly one_plus{1, 1};
  const IntPoly one_minus{1, -1};
  CHECK(one_plus * one_minus == IntPoly{1, 0, -1});
  CHECK((IntPoly{1, 1, 1} * one_minus) == IntPoly{1, 0, 0, -1});

  const IntPoly p{3, 0, -2, 7};
  CHECK(p + IntPoly{} == p);
  CHECK(p - p == IntPoly{});
  CHECK((p * IntPoly{}).is_zero());

  CHECK_FALSE(IntPoly{}.degree().has_value());
  CHECK(*p.degree() == 3);
  CHECK(p.at_one() == 8);
}

TEST_CASE("rational polynomial arithmetic") {
  const RatPoly half{BigRat(1, 2)};
  const RatPoly p{BigRat(1), BigRat(1, 3)};
  CHECK(p * half == RatPoly{BigRat(1, 2), BigRat(1, 6)});
  CHECK(p + p == RatPoly{BigRat(2), BigRat(2, 3)});
  CHECK(p - p == RatPoly{});
  CHECK((p * RatPoly{BigRat(3)}).coeff(1) == BigRat(1));
  CHECK(to_rational(IntPoly{1, -2}) == RatPoly{BigRat(1), BigRat(-2)});

  // coefficients stay in lowest terms with positive denominators
  const BigRat c = (BigRat(2, 4) + BigRat(1, 4)) * BigRat(-2, 3);
  CHECK(c.get_num() == -1);
  CHECK(c.get_den() == 2);
}

TEST_CASE("exact_divide") {
  const IntPoly geometric = exact_divide(IntPoly::one_minus_power(4), IntPoly::one_minus_power(1));
  CHECK(geometric == IntPoly{1, 1, 1, 1});
  CHECK(geometric * IntPoly::one_minus_power(1) == IntPoly::one_minus_power(4));

  const IntPoly p{5, -1, 2};
  CHECK(exact_divide(p, IntPoly{1}) == p);

  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly::one_minus_power(1)), NotDivisible);
  CHECK_THROWS_AS(exact_divide(IntPoly{2, 2}, IntPoly{3}), NotDivisible); // non-integer quotient
  CHECK_THROWS_AS(exact_divide(p, IntPoly{}), DivideByZero);
  CHECK(exact_divide(IntPoly{}, p).is_zero());
}

TEST_CASE("exact_divide round-trips q*d / d == q") {
  Lcg rng;
  for (int i = 0; i < 200; ++i) {
    const IntPoly q = random_poly(rng, 8, 9);
    IntPoly d = random_poly(rng, 5, 4);
    if (d.is_zero()) d = IntPoly{1, 2};
    CHECK(exact_divide(q * d, d) == q);
  }
}

TEST_CASE("series_coefficients") {
  auto as_ints = [](const std::vector<BigRat>& v) {
    std::vector<long> out;
    for (const auto& x : v) {
      REQUIRE(x.get_den() == 1);
      out.push_back(x.get_num().get_si());
    }
    return out;
  };

  CHECK(as_ints(series_coefficients(GradedSeries{IntPoly{1}, DenomDegrees({1})}, 3)) ==
        std::vector<long>{1, 1, 1, 1});
  CHECK(as_ints(series_coefficients(GradedSeries{IntPoly{1, 0, 1, 1, 2, 1},
                                                 DenomDegrees::standard(4)},
                                    4)) == std::vector<long>{1, 1, 3, 5, 10});
  // partitions of d into parts <= 4
  CHECK(as_ints(series_coefficients(GradedSeries{IntPoly{1}, DenomDegrees::standard(4)}, 5)) ==
        std::vector<long>{1, 1, 2, 3, 5, 6});
}

TEST_CASE("series_coefficients agrees with power-series long division") {
  Lcg rng;
  for (int i = 0; i < 60; ++i) {
    const IntPoly num = random_poly(rng, 6, 5);
    std::vector<int> degs;
    const int k = rng.next(3) + 1;
    for (int j = 0; j < k; ++j) degs.push_back(rng.next(5) + 1);
    const DenomDegrees denom(degs);
    CHECK(series_coefficients(GradedSeries{num, denom}, 20) ==
          long_division_series(num, denom, 20));
  }
}

TEST_CASE("is_palindromic") {
  CHECK_FALSE(is_palindromic(IntPoly{1, 0, 1, 1, 2, 1}));
  CHECK(is_palindromic(IntPoly{1}));
  CHECK(is_palindromic(IntPoly{1, 0, 0, 1}));
  CHECK(is_palindromic(IntPoly{})); // zero polynomial, by convention
  CHECK(is_palindromic(IntPoly{0, 0, 3, 1, 3}));
  CHECK_FALSE(is_palindromic(IntPoly{1, 2}));

  CHECK(palindromic_offset(IntPoly{0, 0, 3, 1, 3}) == 6); // k=2, K=4
  CHECK(palindromic_offset(IntPoly{1, 0, 0, 1}) == 3);
  CHECK_FALSE(palindromic_offset(IntPoly{1, 2}).has_value());
  CHECK_FALSE(palindromic_offset(IntPoly{}).has_value());
}

TEST_CASE("palindromicity survives shifts and scalings") {
  Lcg rng;
  for (int i = 0; i < 100; ++i) {
    const IntPoly p = random_poly(rng, 7, 6);
    const int shift = rng.next(4);
    const BigInt scale = rng.next(2) == 0 ? BigInt(3) : BigInt(-7);
    const IntPoly shifted = p * IntPoly::term(static_cast<std::size_t>(shift), BigInt(1));
    CHECK(is_palindromic(p) == is_palindromic(shifted));
    CHECK(is_palindromic(p) == is_palindromic(p * scale));
  }
}

TEST_CASE("to_standard_form") {
  // 1/(1-l) rewritten over {1,2}: numerator picks up the missing factor
  const GradedSeries geometric{IntPoly{1}, DenomDegrees({1})};
  const GradedSeries widened = to_standard_form(geometric, DenomDegrees({1, 2}));
  CHECK(widened.numerator == IntPoly{1, 0, -1});
  CHECK(widened.denominator == DenomDegrees({1, 2}));

  // the identity-element Molien term over the standard denominator
  const GradedSeries identity_term{IntPoly{1}, DenomDegrees({1, 1, 1, 1})};
  CHECK(to_standard_form(identity_term, DenomDegrees::standard(4)).numerator ==
        IntPoly{1, 3, 5, 6, 5, 3, 1});

  CHECK_THROWS_AS(to_standard_form(GradedSeries{IntPoly{1, 1}, DenomDegrees({1, 2})},
                                   DenomDegrees({1})),
                  NotRepresentable);
}

TEST_CASE("to_standard_form preserves the series") {
  Lcg rng;
  for (int i = 0; i < 60; ++i) {
    const IntPoly num = random_poly(rng, 5, 4);
    std::vector<int> source, target;
    const int k = rng.next(3) + 1;
    for (int j = 0; j < k; ++j) {
      const int d = rng.next(4) + 1;
      source.push_back(d);
      target.push_back(d);
    }
    for (int j = rng.next(3); j > 0; --j) target.push_back(rng.next(5) + 1); // supersets succeed
    const GradedSeries s{num, DenomDegrees(source)};
    const GradedSeries t = to_standard_form(s, DenomDegrees(target));
    CHECK(series_coefficients(s, 30) == series_coefficients(t, 30));
  }
}

TEST_CASE("text rendering") {
  CHECK(to_string(IntPoly{1, 0, 1, 1, 2, 1}) == "1 + l^2 + l^3 + 2*l^4 + l^5");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(to_string(IntPoly{0, 1}) == "l");
  CHECK(to_string(IntPoly{-1, 0, 2}) == "-1 + 2*l^2");
  CHECK(to_string(IntPoly{1, -1}) == "1 - l");
  CHECK(to_string(DenomDegrees::standard(4)) == "(1-l)(1-l^2)(1-l^3)(1-l^4)");
}

#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "invar/perm_group.hpp"
#include "invar/poly.hpp"

namespace invar {

inline constexpr std::size_t kDefaultEnumCap = 1000000;
inline constexpr std::size_t kSpanDimensionCap = 500;

/// Exponent vector A in N^n, standing for the monomial x^A.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  int size() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const;
  int height() const; // max exponent
  std::set<int> exponent_set() const;

  /// "x1^2*x3" with zero exponents omitted; "1" for the constant.
  std::string to_text() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

private:
  std::vector<int> e_;
};

/// The action matching sigma(x_i) = x_sigma(i): (sigma.A) at position
/// sigma(i) carries A_i.
Monomial apply(const Permutation& p, const Monomial& a);

struct MonomialOrbit {
  Monomial representative;       // lexicographically greatest member
  std::vector<Monomial> members; // sorted ascending, distinct

  std::size_t size() const { return members.size(); }
  bool operator==(const MonomialOrbit&) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// keyed by exponent vector in lexicographic order; zero coefficients are
/// never stored.
class MultiPoly {
public:
  explicit MultiPoly(int variables = 0) : n_(variables) {}

  static MultiPoly constant(int variables, const BigRat& c);
  static MultiPoly from_monomial(const Monomial& m, const BigRat& c = BigRat(1));

  int variables() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, BigRat>& terms() const { return terms_; }
  BigRat coefficient(const std::vector<int>& exponents) const;

  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero polynomial; -1 for the zero polynomial.
  int homogeneous_degree() const;

  void add_term(const std::vector<int>& exponents, const BigRat& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const BigRat& a) const;
  bool operator==(const MultiPoly&) const = default;

  std::string to_text() const;

private:
  int n_ = 0;
  std::map<std::vector<int>, BigRat> terms_;
};

MultiPoly apply(const Permutation& p, const MultiPoly& f);
bool is_invariant(const MultiPoly& f, const PermGroup& g);

enum class AnOrbitClass { Symmetric, Split };

/// The set { sigma.A : sigma in G }, deduplicated.
MonomialOrbit orbit(const PermGroup& g, const Monomial& a);

/// Sum of the distinct orbit members, each with coefficient 1; G-invariant.
MultiPoly orbit_sum(const PermGroup& g, const Monomial& a);

/// Number of monomial orbits in degree d, the dimension of the degree-d
/// invariant component in every characteristic. Throws
/// EnumerationCapExceeded when C(d+n-1, n-1) exceeds enum_cap.
std::size_t orbit_count(const PermGroup& g, int d, std::size_t enum_cap = kDefaultEnumCap);

/// Whether some value r < height(A) is missing from the exponent set while
/// everything above r occurs. Equivalently: x^A is gap-free exactly when
/// every value 0..height(A) appears among the exponents. (The quantifier on
/// r is bounded by the height; unbounded r would make every monomial
/// gapped vacuously.)
bool has_gap(const Monomial& a);

/// Orbits of all gap-free monomials of positive degree plus the orbit of
/// x_1 x_2 ... x_n, sorted by (degree, representative). Gap-freeness bounds
/// the height by n-1 and the degree by n(n-1)/2, so the search is finite.
std::vector<MonomialOrbit> gobel_generators(const PermGroup& g,
                                            std::size_t enum_cap = kDefaultEnumCap);

/// Split when all exponents are pairwise distinct (the S_n-orbit breaks into
/// two A_n-orbits of equal size); Symmetric when some exponent repeats (the
/// A_n-orbit sum is already S_n-invariant).
AnOrbitClass classify_an_orbit(const Monomial& a, int n);

/// Whether the products of the given G-invariant homogeneous generators with
/// total degree exactly d (the empty product included when d == 0) span the
/// degree-d invariant component, decided by exact rational elimination
/// against the orbit-sum basis.
bool spans_degree(const std::vector<MultiPoly>& generators, const PermGroup& g, int d,
                  std::size_t enum_cap = kDefaultEnumCap);

} // namespace invar

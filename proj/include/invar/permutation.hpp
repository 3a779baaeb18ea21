#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace invar {

/// A bijection of {1..n}. The degree n is part of the value's identity:
/// (1 2) on 3 points and (1 2) on 4 points are distinct values. Points are
/// 1-based on the whole public surface.
class Permutation {
public:
  /// Identity on n points, n >= 1.
  explicit Permutation(int n);

  /// Builds from a 1-based image sequence; every value in {1..n} must appear
  /// exactly once.
  static Permutation from_image(const std::vector<int>& one_based_image);

  int degree() const { return static_cast<int>(image_.size()); }

  /// Image of a 1-based point.
  int apply(int point) const { return image_[point - 1] + 1; }

  /// 1-based image sequence [p(1), p(2), ..., p(n)].
  std::vector<int> image() const;

  bool is_identity() const;
  Permutation inverse() const;

  /// p after q: compose(p, q)(i) = p(q(i)).
  friend Permutation compose(const Permutation& p, const Permutation& q);

  // Lexicographic by image sequence (the element order used everywhere).
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> image_; // 0-based internally

  explicit Permutation(std::vector<int> zero_based, int)
      : image_(std::move(zero_based)) {}
};

Permutation compose(const Permutation& p, const Permutation& q);

/// Multiset of cycle lengths (fixed points as 1s), held ascending.
struct CycleType {
  std::vector<int> lengths;

  int cycle_count() const { return static_cast<int>(lengths.size()); }
  bool operator==(const CycleType&) const = default;
};

/// Parses disjoint-cycle notation, e.g. "(1 2 3 4)" or "(1 2)(3 4)".
/// Whitespace-tolerant; the empty string is the identity; a label may appear
/// at most once in the whole expression.
Permutation parse_permutation(std::string_view text, int n);

CycleType cycle_type(const Permutation& p);

/// (-1)^(n - number of cycles); multiplicative under composition.
int sign(const Permutation& p);

/// rank(Id - P) over a characteristic-0 field = n - number of cycles.
int rank_id_minus(const Permutation& p);

/// True iff the cycle type is {2,1,...,1}, equivalently rank(Id - P) == 1.
bool is_pseudoreflection(const Permutation& p);

/// Nontrivial cycles as 1-based point lists, each starting at its smallest
/// point, ordered by smallest point. Fixed points are omitted.
std::vector<std::vector<int>> disjoint_cycles(const Permutation& p);

/// "(1 2 3 4)", "(1 2)(3 4)"; the identity renders as "()".
std::string to_cycle_string(const Permutation& p);

} // namespace invar

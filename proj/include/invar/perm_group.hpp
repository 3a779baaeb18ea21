#pragma once

#include <cstddef>
#include <vector>

#include "invar/permutation.hpp"

namespace invar {

inline constexpr std::size_t kDefaultClosureCap = 20160;

/// A finite permutation group held as its complete element list: closed under
/// composition and inverse, deduplicated, sorted lexicographically by image
/// sequence. Immutable after construction.
class PermGroup {
public:
  /// Breadth-first closure of the generators (the identity is always
  /// included). Throws MixedDegrees if the generators disagree on the degree
  /// and ClosureCapExceeded if the closure would exceed cap elements.
  static PermGroup generate(int n, std::vector<Permutation> generators,
                            std::size_t cap = kDefaultClosureCap);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool contains(const Permutation& p) const;

private:
  PermGroup(int n, std::vector<Permutation> generators, std::vector<Permutation> elements)
      : n_(n), generators_(std::move(generators)), elements_(std::move(elements)) {}

  int n_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_; // sorted, unique
};

} // namespace invar

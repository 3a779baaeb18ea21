#include "invar/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "invar/errors.hpp"

namespace invar {

Permutation::Permutation(int n) {
  if (n < 1) throw InvalidPermutation("degree must be positive, got " + std::to_string(n));
  image_.resize(static_cast<std::size_t>(n));
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::from_image(const std::vector<int>& one_based_image) {
  const int n = static_cast<int>(one_based_image.size());
  if (n < 1) throw InvalidPermutation("image sequence must be nonempty");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> zero_based(one_based_image.size());
  for (std::size_t i = 0; i < one_based_image.size(); ++i) {
    const int v = one_based_image[i];
    if (v < 1 || v > n)
      throw InvalidPermutation("image value " + std::to_string(v) + " out of range 1.." +
                               std::to_string(n));
    if (seen[static_cast<std::size_t>(v - 1)])
      throw InvalidPermutation("image value " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v - 1)] = 1;
    zero_based[i] = v - 1;
  }
  return Permutation(std::move(zero_based), 0);
}

std::vector<int> Permutation::image() const {
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv), 0);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw MixedDegrees("cannot compose permutations of degrees " + std::to_string(p.degree()) +
                       " and " + std::to_string(q.degree()));
  std::vector<int> r(p.image_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = p.image_[static_cast<std::size_t>(q.image_[i])];
  return Permutation(std::move(r), 0);
}

Permutation parse_permutation(std::string_view text, int n) {
  if (n < 1) throw InvalidPermutation("degree must be positive, got " + std::to_string(n));
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point label or ')' in cycle");
      int label = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        label = label * 10 + (text[pos] - '0');
        if (label > n) break;
        ++pos;
      }
      if (label < 1 || label > n)
        throw ParseError("point label out of range 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(label - 1)])
        throw ParseError("point label " + std::to_string(label) + " repeated");
      used[static_cast<std::size_t>(label - 1)] = 1;
      cycle.push_back(label);
    }
    if (cycle.empty()) throw ParseError("empty cycle '()'");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      image[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_image(image);
}

CycleType cycle_type(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  CycleType t;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = 1;
      j = p.apply(j);
      ++len;
    }
    t.lengths.push_back(len);
  }
  std::sort(t.lengths.begin(), t.lengths.end());
  return t;
}

int sign(const Permutation& p) {
  const int cycles = cycle_type(p).cycle_count();
  return ((p.degree() - cycles) % 2 == 0) ? 1 : -1;
}

int rank_id_minus(const Permutation& p) {
  return p.degree() - cycle_type(p).cycle_count();
}

bool is_pseudoreflection(const Permutation& p) { return rank_id_minus(p) == 1; }

std::vector<std::vector<int>> disjoint_cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = 1;
      cycle.push_back(j);
      j = p.apply(j);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  const auto cycles = disjoint_cycles(p);
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

} // namespace invar

#include "invar/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "invar/errors.hpp"

namespace invar {

PermGroup PermGroup::generate(int n, std::vector<Permutation> generators, std::size_t cap) {
  if (n < 1) throw InvalidPermutation("group degree must be positive, got " + std::to_string(n));
  if (cap < 1) throw ClosureCapExceeded("closure cap must be positive");
  for (const auto& g : generators)
    if (g.degree() != n)
      throw MixedDegrees("generator " + to_cycle_string(g) + " has degree " +
                         std::to_string(g.degree()) + ", expected " + std::to_string(n));

  std::set<Permutation> closed;
  std::deque<Permutation> frontier;
  const Permutation identity(n);
  closed.insert(identity);
  frontier.push_back(identity);
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(current, g);
      if (closed.insert(next).second) {
        if (closed.size() > cap)
          throw ClosureCapExceeded("group closure exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(next));
      }
    }
  }

  std::vector<Permutation> elements(closed.begin(), closed.end());
  return PermGroup(n, std::move(generators), std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

} // namespace invar

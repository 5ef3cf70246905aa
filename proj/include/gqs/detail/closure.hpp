#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "gqs/element_set.hpp"
#include "gqs/graded_abelian.hpp"

namespace gqs::detail {

/// Smallest subset containing `zero` and `gens` that is closed under `add`
/// and under `act(r, -)` for every scalar r < scalars. In a finite group,
/// closure under addition already yields a subgroup.
template <class Add, class Act>
std::vector<bool> closeUnder(std::size_t universe, Elem zero, std::span<const Elem> gens, std::size_t scalars, Add add,
                             Act act) {
  std::vector<bool> mask(universe, false);
  std::vector<Elem> members;
  std::deque<Elem> queue;
  auto push = [&](Elem x) {
    if (!mask[x]) {
      mask[x] = true;
      queue.push_back(x);
    }
  };
  push(zero);
  for (Elem g : gens) push(g);
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    members.push_back(x);
    for (std::size_t r = 0; r < scalars; ++r) push(act(static_cast<Elem>(r), x));
    for (Elem y : members) push(add(x, y));
  }
  return mask;
}

/// First member of `set` with a homogeneous component outside `set`, if any.
inline std::optional<Elem> gradedWitness(const GradedAbelianGroup& carrier, const ElementSet& set) {
  for (Elem x : set) {
    for (GroupElem g = 0; g < carrier.group().order(); ++g) {
      if (!set.contains(carrier.componentOf(x, g))) return x;
    }
  }
  return std::nullopt;
}

}  // namespace gqs::detail

#pragma once

#include <unordered_set>
#include <vector>

#include "permcanon/generating_set.hpp"

namespace permcanon {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Every element of the group generated by `gs`, each exactly once; the sign
/// is part of an element's identity. Elements are listed identity first,
/// then coset by coset as the generators are added.
inline std::vector<SignedPermutation> dimino(const GeneratingSet& gs,
                                             std::size_t cap = kDefaultEnumerationCap) {
  const auto id = SignedPermutation::identity(gs.degree());
  std::vector<SignedPermutation> elements{id};
  std::unordered_set<SignedPermutation> seen{id};

  auto push = [&](SignedPermutation e) {
    if (elements.size() >= cap)
      throw ResourceLimitError("group enumeration exceeded cap of " + std::to_string(cap) +
                               " elements");
    seen.insert(e);
    elements.push_back(std::move(e));
  };

  std::vector<SignedPermutation> used;
  for (const auto& g : gs) {
    if (seen.contains(g)) {
      used.push_back(g);
      continue;
    }
    used.push_back(g);
    const std::size_t subgroup = elements.size();
    // The current list is a subgroup H; adjoin right cosets H*r until the
    // set is closed under right multiplication by every generator so far.
    for (std::size_t i = 0; i < subgroup; ++i) push(product(elements[i], g));
    for (std::size_t rep = subgroup; rep < elements.size(); rep += subgroup) {
      for (const auto& s : used) {
        auto r = product(elements[rep], s);
        if (seen.contains(r)) continue;
        for (std::size_t i = 0; i < subgroup; ++i) push(product(elements[i], r));
      }
    }
  }
  return elements;
}

}  // namespace permcanon

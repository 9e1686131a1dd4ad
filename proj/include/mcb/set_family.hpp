#pragma once

#include <algorithm>
#include <vector>

#include "mcb/subset.hpp"

namespace mcb {

// Ordered collection of subsets of {1,...,n}. Duplicates are allowed; the
// operations that require distinct members say so and check.
struct SetFamily {
  int n = 0;
  std::vector<Subset> members;

  SetFamily() = default;
  SetFamily(int ground_size, std::vector<Subset> subsets)
      : n(check_ground_size(ground_size)), members(std::move(subsets)) {
    const Subset full = full_set(n);
    for (Subset s : members)
      if (s & ~full)
        throw InputError("family member " + subset_to_string(s) +
                         " is not contained in the ground set of size " +
                         std::to_string(n));
  }

  static SetFamily from_element_lists(
      int ground_size, const std::vector<std::vector<int>>& lists) {
    std::vector<Subset> subsets;
    subsets.reserve(lists.size());
    for (const auto& list : lists)
      subsets.push_back(subset_from_elements(list, ground_size));
    return SetFamily(ground_size, std::move(subsets));
  }

  bool contains(Subset s) const {
    return std::find(members.begin(), members.end(), s) != members.end();
  }

  Subset union_of_members() const {
    Subset u = 0;
    for (Subset s : members) u |= s;
    return u;
  }

  // Canonical order for serialization and deterministic searches.
  SetFamily& sort_lex() {
    std::sort(members.begin(), members.end(), SubsetLexLess{});
    return *this;
  }

  SetFamily& sort_size_lex() {
    std::sort(members.begin(), members.end(), subset_size_lex_less);
    return *this;
  }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n == b.n && a.members == b.members;
  }
};

}  // namespace mcb

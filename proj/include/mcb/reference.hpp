#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcb/matroid.hpp"
#include "mcb/rational.hpp"
#include "mcb/set_family.hpp"

namespace mcb::reference {

// Serial reference implementations, kept alongside the OpenMP kernels for
// cross-checking and benchmarking. Each one takes the most direct route the
// definition allows and never prunes.

// rank(S) = max |B & S| over bases, one basis scan per subset.
std::vector<std::uint8_t> rank_table(int n, const std::vector<Subset>& bases);

// Flats as fixpoints of the closure derived from the naive rank table.
SetFamily flats(int n, const std::vector<Subset>& bases);

// Exhaustive multiset search over `family` for a union equal to the ground
// set minus one point: no pruning, no parallelism. Returns the first
// violating tuple (members in non-decreasing family order) and the omitted
// point, or nullopt when the property holds. `nodes` reports visited
// partial tuples.
struct Violation {
  std::vector<Subset> tuple;
  int omitted = 0;
};
std::optional<Violation> mcb_search_naive(int n,
                                          const std::vector<Subset>& family,
                                          int degree, std::uint64_t budget,
                                          std::uint64_t* nodes = nullptr);

// Support function of a signed sum of simplices minus the support function
// of the convex hull of `vertices`, evaluated serially over all directions
// in {-1,0,1}^n. Returns the first direction (counting order) where the two
// differ, or nullopt when they agree everywhere.
std::optional<std::vector<int>> support_mismatch(
    int n, const std::vector<Rational>& simplex_coeffs,
    const std::vector<Subset>& vertices);

}  // namespace mcb::reference

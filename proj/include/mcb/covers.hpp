#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcb/bigint.hpp"
#include "mcb/set_family.hpp"

namespace mcb {

// Number of unordered families of `b` distinct nonempty subsets of [a]
// whose union is [a] and in which every member keeps a private element.
// Exhaustive enumeration with pruning; aborts with ScopeError past the node
// budget (the count itself can dwarf any budget at the upper end of the
// permitted range).
BigUint count_minimal_covers_oracle(int a, int b,
                                    std::uint64_t budget = 1'000'000'000);

// The recursion evaluated verbatim: T(a,1) = 1,
// T(a,2) = sum_{m=1..a} C(a,m) 2^(a-m), and for b >= 3
// T(a,b) = sum_{r=1..a-1} C(a,r) 2^(a-r) T(a-r, b-1).
// The exponent reads the subsets as subsets of the a-set being covered;
// passing ambient_n switches to 2^(n-r) for comparison. The recursion
// counts something other than minimal unordered covers (T(2,2) = 5 vs 1);
// CoverCount carries both values and the computed agreement flag.
BigUint count_covers_recursion(int a, int b,
                               std::optional<int> ambient_n = std::nullopt);

struct CoverCount {
  int a = 0;
  int b = 0;
  BigUint value_recursion;
  BigUint value_oracle;
  bool agree = false;
};
CoverCount compare_cover_counts(int a, int b,
                                std::uint64_t budget = 1'000'000'000);

// Ordered partitions of [a] into r nonempty blocks, r! * S(a,r). Computed
// by the Stirling recurrence and cross-checked against the
// inclusion-exclusion surjection count; r > a gives 0.
BigUint count_disjoint_covers(int a, int r);

// Explicit list behind the oracle at small sizes: all minimal covers of
// [ground_size] by exactly b distinct nonempty subsets.
std::vector<SetFamily> enumerate_minimal_covers(int ground_size, int b);

}  // namespace mcb

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mcb/error.hpp"

namespace mcb {

// Subsets of a ground set {1,...,n} as bitmasks: element i occupies bit i-1.
// n is capped at 16 so every 2^n-indexed table stays desk-sized.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSize = 16;

inline Subset full_set(int n) { return (Subset{1} << n) - 1; }

inline int set_size(Subset s) { return std::popcount(s); }

inline bool contains(Subset s, int element) {
  return (s >> (element - 1)) & 1u;
}

inline Subset singleton(int element) { return Subset{1} << (element - 1); }

inline int check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw InputError("ground set size must be between 1 and " +
                     std::to_string(kMaxGroundSize) + ", got " +
                     std::to_string(n));
  return n;
}

// Elements of s in ascending order, 1-based.
inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline Subset subset_from_elements(const std::vector<int>& elements, int n) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw InputError("element " + std::to_string(e) +
                       " out of range 1.." + std::to_string(n));
    s |= singleton(e);
  }
  return s;
}

// Order subsets by their ascending element sequences, compared as words:
// {} < {1} < {1,2} < {1,2,3} < {1,3} < {2} < {2,3} < {3}.
// This is the canonical member order used for serialization and for the
// deterministic tuple searches.
inline bool subset_lex_less(Subset a, Subset b) {
  if (a == b) return false;
  const Subset diff = a ^ b;
  const int e = std::countr_zero(diff);
  const Subset above = ~((Subset{2} << e) - 1);
  if ((a >> e) & 1u) return (b & above) != 0;
  return (a & above) == 0;
}

struct SubsetLexLess {
  bool operator()(Subset a, Subset b) const { return subset_lex_less(a, b); }
};

// Size first, then the lex order above; used for flat enumeration.
inline bool subset_size_lex_less(Subset a, Subset b) {
  const int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  return subset_lex_less(a, b);
}

inline std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// Visits every subset of mask, including 0 and mask itself.
template <typename F>
void for_each_subset_of(Subset mask, F&& visit) {
  Subset s = mask;
  while (true) {
    visit(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

}  // namespace mcb

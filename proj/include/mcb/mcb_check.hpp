#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcb/matroid.hpp"
#include "mcb/set_family.hpp"

namespace mcb {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

struct McbWitness {
  SetFamily flats;  // the violating tuple, members in non-decreasing order
  int omitted = 0;  // the point p with union == E \ {p}
};

struct McbVerdict {
  bool holds = true;
  std::optional<McbWitness> witness;
  bool simple_rank1 = true;  // the standing rank-1 assumption, reported
  std::uint64_t nodes = 0;   // partial tuples visited
  std::size_t candidates = 0;
};

// Decides the matroidal Cayley-Bacharach property of the given degree:
// holds iff no `degree`-multiset of flats (proper flats unless proper_only
// is false) has union equal to E minus a single point. The search iterates
// multisets of candidate flats in lex order with union-size pruning; the
// returned witness is the first violation in that order, independent of
// thread count.
McbVerdict check_mcb(const Matroid& m, int degree, bool proper_only = true,
                     std::uint64_t budget = kDefaultSearchBudget);

// The set-theoretic analogue over an arbitrary family of proper subsets.
McbVerdict check_smcb(int ground_size, const SetFamily& family, int degree,
                      std::uint64_t budget = kDefaultSearchBudget);

// Size bound that reduces near-covers to hyperplanes: true iff
// n - 1 - B(a-1) >= r. When it holds and all proper flats of a paving
// matroid of rank r have size <= B, every a-tuple of proper flats covering
// >= n-1 points consists of hyperplanes only.
bool hyperplane_bound_applies(int n, int flat_size_bound, int degree,
                              int rank);

// Scans every `degree`-multiset of proper flats covering >= n-1 points and
// returns a non-hyperplane member of some such tuple, if any exists.
std::optional<Subset> non_hyperplane_in_near_cover(
    const Matroid& m, int degree, std::uint64_t budget = kDefaultSearchBudget);

struct CoverProfile {
  SetFamily flats;         // an inclusion-minimal cover of the ground set
  std::vector<int> ranks;  // multiset of flat ranks, ascending
  int total_rank = 0;
};

// All inclusion-minimal covers of the ground set by at most k_max flats
// (every member keeps a private element). proper_only excludes the ground
// set itself from the candidate flats.
std::vector<CoverProfile> cover_profiles(const Matroid& m, int k_max,
                                         bool proper_only = true);

// Minimum total rank over covers by at most k proper flats; nullopt when no
// such cover exists.
std::optional<int> min_total_rank_cover(const Matroid& m, int k);

}  // namespace mcb

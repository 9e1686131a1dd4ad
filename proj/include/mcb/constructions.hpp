#pragma once

#include <optional>
#include <vector>

#include "mcb/matroid.hpp"
#include "mcb/rational.hpp"
#include "mcb/set_family.hpp"

namespace mcb {

// Parameters of the block-plus-crossings paving family: n/B blocks of
// consecutive labels plus every m-subset meeting at least two blocks.
struct NobdParams {
  int n = 0;
  int block_size = 0;  // B
  int m = 0;

  // Largest degree certified to hold: floor(n/B + B/m - 3), exact rational.
  int degree_bound() const;

  // B even, B >= 2m+2, B | n, 2 <= n/B < B. Throws naming the violated
  // inequality.
  void validate() const;
};

// Rank-(m+1) paving matroid whose hyperplanes are the n/B blocks
// {1..B}, {B+1..2B}, ... plus every m-subset meeting >= 2 blocks.
Matroid nobd_paving(const NobdParams& params);

// The rank-3 specialization (m = 2) under its own weaker hypothesis
// B >= 4; B must still be even with B | n and 2 <= n/B < B.
Matroid pavexmp_paving(int n, int block_size);
Rational pavexmp_degree_bound(int n, int block_size);  // min of the two bounds

// Smallest integer d with (n-1)/a < d < (m-1)a, or nullopt when the open
// interval contains no integer.
std::optional<int> mcbdimnobd_gap(int n, int degree, int m);

// Paving matroid rebuilt on the complement of a hyperplane A: members are
// the intersections H & (E\A) of hyperplanes H with at least m points
// outside A. Intersections equal to all of E\A cannot be hyperplanes of the
// result and are dropped; m-subsets of E\A missed by the remaining members
// are padded in as their own blocks. Both adjustments are reported.
struct RestrictComplement {
  Matroid matroid;                 // on relabeled ground set 1..|E\A|
  std::vector<int> labels;         // new label i+1 <-> original labels[i]
  SetFamily padded_blocks;         // added m-subsets, original labels
  std::vector<Subset> dropped;     // improper intersections, original labels
};
RestrictComplement restrict_complement(const Matroid& m, Subset hyperplane_a);

// Parameters of the negative family: a distinguished hyperplane A, an
// m-partition of E\A whose members avoid A entirely, and every remaining
// m-subset as its own hyperplane.
struct NegPavingParams {
  int n = 0;
  Subset a = 0;   // the distinguished hyperplane, |A| >= m
  int m = 0;      // m >= 3; |E\A| >= m+1
  // Optional m-partition of E\A with members disjoint from A; defaults to
  // the single block E\A.
  std::optional<SetFamily> type2_blocks;

  void validate() const;
};

struct NegPaving {
  Matroid matroid;
  int witness_size = 0;      // |C| + 1
  SetFamily witness_family;  // A together with C, unions to E minus a point
  int omitted = 0;           // the point the witness family misses
};

// Builds the matroid and the explicit covering family from the proof: C is
// the set of m-subsets of W, where W is E\A minus its largest element. The
// union A | C covers exactly E minus that element; the matroid fails the
// degree-(|C|+1) check at desk scale.
NegPaving neg_paving(const NegPavingParams& params);

}  // namespace mcb

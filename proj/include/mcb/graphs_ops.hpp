#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mcb/graph.hpp"
#include "mcb/matroid.hpp"
#include "mcb/mcb_check.hpp"
#include "mcb/set_family.hpp"

namespace mcb {

// |T| = k rank(T) for every proper subset as written, or <= as the relaxed
// variant (the strict equation kills every candidate once k >= 2, since a
// non-loop singleton needs k rank = 1).
enum class CircuitReading { kStrict, kRelaxed };

// Subsets S with |S| = k rank(S) + 1 whose proper subsets satisfy the
// chosen reading, in size order.
SetFamily k_circuits(const Matroid& m, int k,
                     CircuitReading reading = CircuitReading::kStrict);

struct DisjointnessVerdict {
  bool disjoint = true;
  std::optional<std::pair<Subset, Subset>> overlap;  // witness pair
};

// The k-fold direct sum is graphic iff the k-circuits are pairwise
// disjoint.
DisjointnessVerdict direct_sum_graphic(
    const Matroid& m, int k, CircuitReading reading = CircuitReading::kStrict);

// True iff every edge of A has its endpoints connected inside A minus that
// edge.
bool induced_two_connected(const Graph& g, Subset edge_set);

// Directed graph on [ground_size] with an edge i -> j exactly when every
// family member containing i also contains j.
Digraph mcb_digraph(int ground_size, const SetFamily& family);

// Directed paths that cannot be extended past their last vertex without a
// revisit; one list entry per (start, greedy branch).
using VertexPath = std::vector<int>;
std::vector<VertexPath> maximal_paths(const Digraph& d);

// Families of at most r maximal paths whose vertices cover the digraph.
std::vector<std::vector<VertexPath>> maximal_path_covers(const Digraph& d,
                                                         int r);

// Side-by-side evaluation of the degree-r check on a cycle matroid against
// edge-wise 2-connectivity over every assignment of edges to r parts,
// with the hypothesis ambiguities computed under both readings.
struct DirgraphReport {
  bool r_circuits_disjoint_strict = true;
  bool r_circuits_disjoint_relaxed = true;
  // Minimal families of <= r flats covering E minus a point, collected over
  // every omitted point.
  bool minimal_tuples_internally_disjoint = true;  // flats inside one family
  bool minimal_tuples_share_no_flat = true;        // across distinct families
  bool mcb_holds = false;
  bool all_assignments_two_connected = false;
  bool sides_equal = false;
  bool hypotheses_hold = false;  // strict circuits + both tuple readings
  bool asserted = false;
};
DirgraphReport check_dirgraph_equivalence(const Graph& g, int r);

}  // namespace mcb

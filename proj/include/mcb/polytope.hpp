#pragma once

#include <optional>
#include <vector>

#include "mcb/matroid.hpp"
#include "mcb/mcb_check.hpp"
#include "mcb/rational.hpp"
#include "mcb/set_family.hpp"

namespace mcb {

// Which direction the z-map looks in: the stated reading uses the span of I
// itself, the complementary one the span of E\I. decompose() certifies one
// of them against the vertex oracle and records which.
enum class ZConvention { kSpanAsStated, kComplementSpan };

// Signed Minkowski decomposition P = sum over I of y_I * Delta_I, with
// negative terms read as Minkowski differences. y is indexed by subset
// mask; y[0] stays zero.
struct MinkDecomp {
  int n = 0;
  std::vector<Rational> y;
  ZConvention convention = ZConvention::kSpanAsStated;
};

// Indicator vectors of the bases, each on the hyperplane sum x_i = rank.
std::vector<Subset> polytope_vertices(const Matroid& m);

// z_I for every mask I: r - rank(closure(I)) under kSpanAsStated,
// r - rank(E\I) under kComplementSpan; z of the empty set is fixed at 0.
std::vector<int> z_values(const Matroid& m,
                          ZConvention convention = ZConvention::kSpanAsStated);

// Moebius inversion over the boolean lattice: y_I = sum over J subset of I
// of (-1)^{|I|-|J|} z_J. zeta_transform is the inverse direction.
std::vector<Rational> mobius_invert(const std::vector<Rational>& z);
std::vector<Rational> zeta_transform(const std::vector<Rational>& y);

// Raised when neither convention's signed sum reproduces the polytope.
// Both candidate maps ride along for diagnostics.
class ConventionMismatch : public ScopeError {
 public:
  ConventionMismatch(std::string what, MinkDecomp stated,
                     MinkDecomp complement)
      : ScopeError(std::move(what)),
        stated_candidate(std::move(stated)),
        complement_candidate(std::move(complement)) {}
  MinkDecomp stated_candidate;
  MinkDecomp complement_candidate;
};

// Decomposes the matroid polytope as a signed sum of simplices, trying the
// stated convention first and the complementary one second; the result is
// whichever the support-function oracle certifies on every direction in
// {-1,0,1}^n. Ground sets above 10 elements are out of scope.
MinkDecomp decompose(const Matroid& m);

// Support-function agreement of the signed sum against the hull of the
// given vertices, over all of {-1,0,1}^n; returns a failing direction or
// nullopt. This is the OpenMP twin of reference::support_mismatch.
std::optional<std::vector<int>> support_mismatch(
    const MinkDecomp& decomp, const std::vector<Subset>& vertices);

bool is_generic(const MinkDecomp& decomp);  // all y_I >= 0

struct BuildingSet {
  int n = 0;
  std::vector<Subset> members;  // sorted lex; contains all singletons,
                                // closed under unions of intersecting pairs
};

// Least building set containing the family: add singletons, then unions of
// intersecting members to a fixpoint.
BuildingSet building_closure(int n, const SetFamily& family);

bool is_building_set(int n, const std::vector<Subset>& members);

struct FacetInequality {
  Subset support = 0;  // G
  Rational bound;      // sum of y_I over I in B with I subset of G
};

// Inequalities sum_{i in G} x_i >= bound for every G in the building
// closure of B = {I : y_I > 0}. Requires a generic decomposition.
std::vector<FacetInequality> facet_inequalities(const MinkDecomp& decomp);

// Flats whose restriction and contraction are both connected. Requires a
// connected matroid; callers with a disconnected one should split it into
// direct-sum components first.
SetFamily flacets(const Matroid& m);

// Side-by-side run of the matroid check and its set-theoretic counterpart
// over the building closure of the positive-coefficient supports.
struct FlacetEquivalenceReport {
  bool connected = false;
  bool simple_rank1 = false;
  bool interval_minors_connected = false;   // M[F,G] connected, F proper in G
  bool flats_connected_coconnected = false;  // restriction+contraction per flat
  bool generic = false;        // all y_I >= 0
  bool full_support = false;   // y_[n] > 0
  bool hypotheses_hold = false;
  ZConvention convention = ZConvention::kSpanAsStated;
  McbVerdict matroid_side;
  McbVerdict set_side;
  bool sides_equal = false;
  bool asserted = false;  // equality is claimed only under the hypotheses
};
FlacetEquivalenceReport mcb_flacet_equivalence(const Matroid& m, int degree);

// Whether the two matroid polytopes have the same normal fan. Both fans
// coarsen the fan of the permutohedron, so they coincide exactly when they
// group the n! orderings by maximizing vertex in the same way. Capped at
// n <= 6.
bool normal_fan_equivalent(const Matroid& m, const Matroid& other);

}  // namespace mcb

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcb/graph.hpp"
#include "mcb/set_family.hpp"
#include "mcb/subset.hpp"

namespace mcb {

// Whether the basis-exchange axiom is verified at construction. Mandatory
// up to 12 elements; above that the pairwise check gets expensive and the
// caller opts in.
enum class Validation { kAuto, kAlways, kNever };

// Finite matroid stored by its explicit list of bases, with a full
// 2^n rank table built at construction. Immutable afterwards and safe to
// share across threads; every operation is a pure function.
class Matroid {
 public:
  static Matroid from_bases(int n, std::vector<Subset> bases,
                            Validation validation = Validation::kAuto);

  int size() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }

  int rank_of(Subset s) const;
  Subset closure_of(Subset s) const;
  bool is_flat(Subset s) const { return closure_of(s) == s; }
  bool is_independent(Subset s) const { return rank_of(s) == set_size(s); }

  // All flats in size order (lex within a size); hyperplanes are the flats
  // of rank r-1.
  SetFamily flats() const;
  SetFamily hyperplanes() const;
  SetFamily proper_flats() const;  // flats() minus the ground set

  // Minimal dependent sets, size order.
  SetFamily circuits() const;

  // Every circuit has size >= rank; equivalently every (r-1)-subset is
  // independent.
  bool is_paving() const;

  // Every rank-1 flat is a singleton: no loops, no parallel elements.
  bool is_simple_rank1() const;

  bool is_connected() const;
  bool is_coconnected() const;  // connectivity of the dual

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid() = default;

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;            // sorted lex, deduplicated
  std::vector<std::uint8_t> rank_table_;  // indexed by subset mask
};

// -- constructions ----------------------------------------------------------

Matroid uniform(int r, int n);

// Paving matroid of rank m+1 whose hyperplanes are exactly `blocks`.
// `blocks` must be an m-partition: every block has >= m elements, every
// m-subset of the ground set lies in exactly one block, and at least two
// blocks exist (a block equal to the whole ground set leaves no bases).
Matroid from_m_partition(int n, const SetFamily& blocks, int m);

// Ground set = edge labels of g; bases = maximal spanning forests.
Matroid cycle_matroid(const Graph& g);

Matroid dual(const Matroid& m);

// Ground sets are relabeled consecutively: part k occupies labels right
// after part k-1.
Matroid direct_sum(const std::vector<Matroid>& parts);

// Minors. The result lives on a relabeled ground set 1..n'; `kept_labels`
// (ascending original labels, position i -> new label i+1) is returned when
// the caller needs the correspondence.
Matroid restriction(const Matroid& m, Subset s,
                    std::vector<int>* kept_labels = nullptr);
Matroid contraction(const Matroid& m, Subset s,
                    std::vector<int>* kept_labels = nullptr);

// The minor on G \ F spanned by bases meeting F and G at full rank:
// bases = { b & (G\F) : b basis, |b & F| = rk F, |b & G| = rk G }.
// F, G must be flats with F a proper subset of G.
Matroid minor_interval(const Matroid& m, Subset f, Subset g,
                       std::vector<int>* kept_labels = nullptr);

}  // namespace mcb

#include "mcb/constructions.hpp"

#include <algorithm>
#include <string>

#include "mcb/error.hpp"

namespace mcb {
namespace {

std::vector<Subset> consecutive_blocks(int n, int block_size) {
  std::vector<Subset> blocks;
  for (int start = 0; start < n; start += block_size) {
    Subset b = 0;
    for (int e = start + 1; e <= start + block_size; ++e) b |= singleton(e);
    blocks.push_back(b);
  }
  return blocks;
}

// Blocks plus every m-subset meeting at least two of them.
Matroid blocks_and_crossings(int n, int block_size, int m) {
  std::vector<Subset> members = consecutive_blocks(n, block_size);
  const std::size_t block_count = members.size();
  const Subset full = full_set(n);
  for (Subset s = 0; s <= full; ++s) {
    if (set_size(s) != m) continue;
    bool crossing = true;
    for (std::size_t i = 0; i < block_count && crossing; ++i)
      if ((s & members[i]) == s) crossing = false;
    if (crossing) members.push_back(s);
  }
  return from_m_partition(n, SetFamily(n, std::move(members)), m);
}

void check_common_block_params(int n, int block_size) {
  if (block_size % 2 != 0)
    throw InputError("B = " + std::to_string(block_size) + " must be even");
  if (n % block_size != 0)
    throw InputError("B = " + std::to_string(block_size) +
                     " must divide n = " + std::to_string(n));
  const int blocks = n / block_size;
  if (blocks >= block_size)
    throw InputError("need n/B < B, got n/B = " + std::to_string(blocks) +
                     " >= B = " + std::to_string(block_size));
  if (blocks < 2)
    throw InputError("need at least two blocks, got n/B = " +
                     std::to_string(blocks));
}

}  // namespace

int NobdParams::degree_bound() const {
  const Rational bound = Rational(n, block_size) + Rational(block_size, m) -
                         Rational(3);
  return static_cast<int>(bound.floor());
}

void NobdParams::validate() const {
  check_ground_size(n);
  if (m < 1) throw InputError("m must be positive");
  if (block_size < 2 * m + 2)
    throw InputError("need B >= 2m+2, got B = " + std::to_string(block_size) +
                     " < " + std::to_string(2 * m + 2));
  check_common_block_params(n, block_size);
}

Matroid nobd_paving(const NobdParams& params) {
  params.validate();
  return blocks_and_crossings(params.n, params.block_size, params.m);
}

Matroid pavexmp_paving(int n, int block_size) {
  check_ground_size(n);
  if (block_size < 4)
    throw InputError("need B >= 4, got B = " + std::to_string(block_size));
  check_common_block_params(n, block_size);
  return blocks_and_crossings(n, block_size, 2);
}

Rational pavexmp_degree_bound(int n, int block_size) {
  const Rational first =
      Rational(n, block_size) + Rational(block_size, 2) - Rational(3);
  const Rational second = Rational(n - 3, block_size) + Rational(1);
  return std::min(first, second);
}

std::optional<int> mcbdimnobd_gap(int n, int degree, int m) {
  if (n < 1 || degree < 1 || m < 1)
    throw InputError("mcbdimnobd_gap needs positive arguments");
  // Smallest integer strictly above (n-1)/degree.
  const std::int64_t d = std::int64_t{n - 1} / degree + 1;
  if (d < std::int64_t{m - 1} * degree) return static_cast<int>(d);
  return std::nullopt;
}

RestrictComplement restrict_complement(const Matroid& m,
                                       Subset hyperplane_a) {
  const int rank = m.rank();
  const int small_m = rank - 1;
  if (small_m < 1) throw InputError("matroid rank must be at least 2");
  if (!m.is_paving()) throw InputError("matroid is not paving");
  if (!m.is_flat(hyperplane_a) || m.rank_of(hyperplane_a) != rank - 1)
    throw InputError(subset_to_string(hyperplane_a) + " is not a hyperplane");
  const Subset rest = full_set(m.size()) & ~hyperplane_a;
  if (set_size(rest) < small_m + 1)
    throw InputError("complement of the hyperplane has only " +
                     std::to_string(set_size(rest)) +
                     " points; need at least m+1 = " +
                     std::to_string(small_m + 1));

  std::vector<Subset> members;
  std::vector<Subset> dropped;
  for (Subset h : m.hyperplanes().members) {
    const Subset cut = h & rest;
    if (set_size(cut) < small_m) continue;
    if (cut == rest) {
      dropped.push_back(cut);  // improper: cannot be a hyperplane
      continue;
    }
    members.push_back(cut);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  // Complete to an m-partition of E\A: any m-subset of the complement not
  // inside a member becomes its own block.
  std::vector<Subset> padded;
  for_each_subset_of(rest, [&](Subset s) {
    if (set_size(s) != small_m) return;
    for (Subset t : members)
      if ((s & t) == s) return;
    members.push_back(s);
    padded.push_back(s);
  });

  const std::vector<int> labels = elements_of(rest);
  const int packed_n = static_cast<int>(labels.size());
  std::vector<Subset> packed;
  packed.reserve(members.size());
  for (Subset member : members) {
    Subset q = 0;
    for (int i = 0; i < packed_n; ++i)
      if (contains(member, labels[i])) q |= Subset{1} << i;
    packed.push_back(q);
  }
  return RestrictComplement{
      from_m_partition(packed_n, SetFamily(packed_n, std::move(packed)),
                       small_m),
      labels, SetFamily(m.size(), std::move(padded)), std::move(dropped)};
}

void NegPavingParams::validate() const {
  check_ground_size(n);
  if (m < 3) throw InputError("need m >= 3, got m = " + std::to_string(m));
  if (a == 0 || (a & ~full_set(n)))
    throw InputError("hyperplane A must be a nonempty subset of the ground "
                     "set");
  if (set_size(a) < m)
    throw InputError("need |A| >= m, got |A| = " +
                     std::to_string(set_size(a)));
  const Subset rest = full_set(n) & ~a;
  if (set_size(rest) < m + 1)
    throw InputError("need |E\\A| >= m+1, got |E\\A| = " +
                     std::to_string(set_size(rest)));
  if (type2_blocks) {
    for (Subset b : type2_blocks->members) {
      if (b & a)
        throw InputError("type-2 block " + subset_to_string(b) +
                         " meets A");
      if (b & ~rest)
        throw InputError("type-2 block " + subset_to_string(b) +
                         " leaves E\\A");
    }
  }
}

NegPaving neg_paving(const NegPavingParams& params) {
  params.validate();
  const Subset full = full_set(params.n);
  const Subset rest = full & ~params.a;

  std::vector<Subset> members = {params.a};
  if (params.type2_blocks)
    members.insert(members.end(), params.type2_blocks->members.begin(),
                   params.type2_blocks->members.end());
  else
    members.push_back(rest);

  // Every m-subset not inside A or a type-2 block becomes a type-3
  // hyperplane.
  const std::size_t fixed = members.size();
  for (Subset s = 0; s <= full; ++s) {
    if (set_size(s) != params.m) continue;
    bool inside = false;
    for (std::size_t i = 0; i < fixed && !inside; ++i)
      if ((s & members[i]) == s) inside = true;
    if (!inside) members.push_back(s);
  }

  NegPaving out{from_m_partition(params.n,
                                 SetFamily(params.n, std::move(members)),
                                 params.m),
                0,
                SetFamily(params.n, {}),
                0};

  // W = E\A minus its largest element; C = all m-subsets of W.
  const int dropped = 32 - std::countl_zero(rest);  // largest element of E\A
  const Subset w = rest & ~singleton(dropped);
  out.omitted = dropped;
  out.witness_family.members.push_back(params.a);
  for_each_subset_of(w, [&](Subset s) {
    if (set_size(s) == params.m) out.witness_family.members.push_back(s);
  });
  out.witness_family.sort_lex();
  out.witness_size = static_cast<int>(out.witness_family.members.size());

  if (out.witness_family.union_of_members() != (full & ~singleton(dropped)))
    throw InputError(
        "internal check failed: witness family does not cover E minus one "
        "point");
  return out;
}

}  // namespace mcb

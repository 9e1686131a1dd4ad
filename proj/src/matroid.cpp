#include "mcb/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mcb {
namespace {

// Rank table in two passes. First a superset-sum ("how many bases contain
// S"), which marks the independent sets: S is independent iff some basis
// contains it. Then rank(S) for dependent S as the max over one-element
// deletions; S \ {e} has a smaller mask, so one ascending sweep suffices.
std::vector<std::uint8_t> build_rank_table(int n,
                                           const std::vector<Subset>& bases) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::int32_t> containing(m, 0);
  for (Subset b : bases) containing[b] += 1;
  for (int d = 0; d < n; ++d) {
    const Subset bit = Subset{1} << d;
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(m); ++s)
      if (!(s & bit)) containing[s] += containing[s | bit];
  }
  std::vector<std::uint8_t> rank(m, 0);
  for (Subset s = 1; s < m; ++s) {
    if (containing[s] > 0) {
      rank[s] = static_cast<std::uint8_t>(set_size(s));
    } else {
      std::uint8_t best = 0;
      Subset rest = s;
      while (rest) {
        const Subset bit = rest & (~rest + 1);
        best = std::max(best, rank[s ^ bit]);
        rest ^= bit;
      }
      rank[s] = best;
    }
  }
  return rank;
}

void check_basis_exchange(int n, const std::vector<Subset>& bases) {
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (i == j) continue;
      const Subset b1 = bases[i], b2 = bases[j];
      Subset removable = b1 & ~b2;
      while (removable) {
        const Subset x = removable & (~removable + 1);
        removable ^= x;
        bool exchanged = false;
        Subset candidates = b2 & ~b1;
        while (candidates) {
          const Subset y = candidates & (~candidates + 1);
          candidates ^= y;
          if (std::binary_search(bases.begin(), bases.end(), (b1 ^ x) | y)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged)
          throw InputError(
              "basis-exchange axiom fails for bases " + subset_to_string(b1) +
              " and " + subset_to_string(b2) + " at element " +
              std::to_string(std::countr_zero(x) + 1) + " on ground size " +
              std::to_string(n));
      }
    }
}

std::vector<int> subset_labels(Subset s) { return elements_of(s); }

Matroid relabeled_minor(Subset kept, const std::vector<Subset>& minor_bases,
                        std::vector<int>* kept_labels) {
  const std::vector<int> labels = subset_labels(kept);
  if (kept_labels) *kept_labels = labels;
  std::vector<Subset> packed;
  packed.reserve(minor_bases.size());
  for (Subset b : minor_bases) {
    Subset q = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (contains(b, labels[i])) q |= Subset{1} << i;
    packed.push_back(q);
  }
  return Matroid::from_bases(static_cast<int>(labels.size()),
                             std::move(packed), Validation::kNever);
}

}  // namespace

Matroid Matroid::from_bases(int n, std::vector<Subset> bases,
                            Validation validation) {
  check_ground_size(n);
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  const Subset full = full_set(n);
  for (Subset b : bases)
    if (b & ~full)
      throw InputError("basis " + subset_to_string(b) +
                       " is not contained in the ground set of size " +
                       std::to_string(n));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = set_size(bases.front());
  for (Subset b : bases)
    if (set_size(b) != r)
      throw InputError("bases of unequal size: " +
                       subset_to_string(bases.front()) + " vs " +
                       subset_to_string(b));
  const bool validate = validation == Validation::kAlways ||
                        (validation == Validation::kAuto && n <= 12);
  if (validate) check_basis_exchange(n, bases);

  Matroid m;
  m.n_ = n;
  m.rank_ = r;
  m.rank_table_ = build_rank_table(n, bases);
  m.bases_ = std::move(bases);
  return m;
}

int Matroid::rank_of(Subset s) const {
  if (s & ~full_set(n_))
    throw InputError("subset " + subset_to_string(s) +
                     " is not contained in the ground set of size " +
                     std::to_string(n_));
  return rank_table_[s];
}

Subset Matroid::closure_of(Subset s) const {
  const int base_rank = rank_of(s);
  Subset out = s;
  Subset outside = full_set(n_) & ~s;
  while (outside) {
    const Subset bit = outside & (~outside + 1);
    outside ^= bit;
    if (rank_table_[s | bit] == base_rank) out |= bit;
  }
  return out;
}

SetFamily Matroid::flats() const {
  const std::int64_t m = std::int64_t{1} << n_;
  std::vector<Subset> found;
#pragma omp parallel
  {
    std::vector<Subset> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < m; ++s)
      if (closure_of(static_cast<Subset>(s)) == static_cast<Subset>(s))
        local.push_back(static_cast<Subset>(s));
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }
  std::sort(found.begin(), found.end(), subset_size_lex_less);
  return SetFamily(n_, std::move(found));
}

SetFamily Matroid::hyperplanes() const {
  std::vector<Subset> out;
  for (Subset f : flats().members)
    if (rank_table_[f] == rank_ - 1) out.push_back(f);
  return SetFamily(n_, std::move(out));
}

SetFamily Matroid::proper_flats() const {
  SetFamily all = flats();
  all.members.erase(
      std::remove(all.members.begin(), all.members.end(), full_set(n_)),
      all.members.end());
  return all;
}

SetFamily Matroid::circuits() const {
  const Subset full = full_set(n_);
  std::vector<Subset> out;
  for (Subset s = 1; s <= full; ++s) {
    if (is_independent(s)) continue;
    bool minimal = true;
    Subset rest = s;
    while (rest && minimal) {
      const Subset bit = rest & (~rest + 1);
      rest ^= bit;
      if (!is_independent(s ^ bit)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return SetFamily(n_, std::move(out));
}

bool Matroid::is_paving() const {
  if (rank_ <= 1) return true;
  const Subset full = full_set(n_);
  for (Subset s = 1; s <= full; ++s)
    if (set_size(s) == rank_ - 1 && !is_independent(s)) return false;
  return true;
}

bool Matroid::is_simple_rank1() const {
  if (closure_of(0) != 0) return false;
  for (int e = 1; e <= n_; ++e)
    if (closure_of(singleton(e)) != singleton(e)) return false;
  return true;
}

bool Matroid::is_connected() const {
  const Subset full = full_set(n_);
  // Separators come in complementary pairs, so fixing element 1 loses
  // nothing.
  for (Subset s = 1; s < full; s += 2)
    if (rank_table_[s] + rank_table_[full & ~s] == rank_) return false;
  return true;
}

bool Matroid::is_coconnected() const { return dual(*this).is_connected(); }

Matroid uniform(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n)
    throw InputError("uniform matroid needs 0 <= r <= n, got r = " +
                     std::to_string(r) + ", n = " + std::to_string(n));
  std::vector<Subset> bases;
  const Subset full = full_set(n);
  for (Subset s = 0; s <= full; ++s)
    if (set_size(s) == r) bases.push_back(s);
  return Matroid::from_bases(n, std::move(bases), Validation::kNever);
}

Matroid from_m_partition(int n, const SetFamily& blocks, int m) {
  check_ground_size(n);
  if (m < 1) throw InputError("m-partition needs m >= 1");
  if (n <= m) throw InputError("m-partition needs n > m");
  if (blocks.n != n)
    throw InputError("block family lives on the wrong ground set");
  for (Subset b : blocks.members)
    if (set_size(b) < m)
      throw InputError("block " + subset_to_string(b) +
                       " has fewer than m = " + std::to_string(m) +
                       " elements");
  const Subset full = full_set(n);
  for (Subset s = 0; s <= full; ++s) {
    if (set_size(s) != m) continue;
    int hits = 0;
    for (Subset b : blocks.members)
      if ((s & b) == s) ++hits;
    if (hits != 1)
      throw InputError("invalid m-partition: m-subset " + subset_to_string(s) +
                       " lies in " + std::to_string(hits) +
                       " blocks (must be exactly 1)");
  }
  std::vector<Subset> bases;
  for (Subset s = 0; s <= full; ++s) {
    if (set_size(s) != m + 1) continue;
    bool inside = false;
    for (Subset b : blocks.members)
      if ((s & b) == s) {
        inside = true;
        break;
      }
    if (!inside) bases.push_back(s);
  }
  if (bases.empty())
    throw InputError(
        "invalid m-partition: every (m+1)-subset lies inside a block, so no "
        "bases remain (a block equal to the ground set is not allowed)");
  return Matroid::from_bases(n, std::move(bases));
}

Matroid cycle_matroid(const Graph& g) {
  const int n = static_cast<int>(g.edges.size());
  check_ground_size(n);

  std::vector<int> parent(g.vertex_count + 1);
  const auto root = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto forest_rank = [&](Subset edge_set) {
    std::iota(parent.begin(), parent.end(), 0);
    int rank = 0;
    for (int e = 1; e <= n; ++e) {
      if (!contains(edge_set, e)) continue;
      const auto [u, v] = g.edges[e - 1];
      const int ru = root(u), rv = root(v);
      if (ru != rv) {
        parent[ru] = rv;
        ++rank;
      }
    }
    return rank;
  };

  const int r = forest_rank(full_set(n));
  std::vector<Subset> bases;
  const Subset full = full_set(n);
  for (Subset s = 0; s <= full; ++s)
    if (set_size(s) == r && forest_rank(s) == r) bases.push_back(s);
  return Matroid::from_bases(n, std::move(bases), Validation::kNever);
}

Matroid dual(const Matroid& m) {
  const Subset full = full_set(m.size());
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(full & ~b);
  return Matroid::from_bases(m.size(), std::move(bases), Validation::kNever);
}

Matroid direct_sum(const std::vector<Matroid>& parts) {
  if (parts.empty()) throw InputError("direct sum of zero matroids");
  int total = 0;
  for (const Matroid& p : parts) total += p.size();
  if (total > kMaxGroundSize)
    throw InputError("direct sum ground set of size " + std::to_string(total) +
                     " exceeds the supported maximum " +
                     std::to_string(kMaxGroundSize));
  std::vector<Subset> bases = {0};
  int shift = 0;
  for (const Matroid& p : parts) {
    std::vector<Subset> next;
    next.reserve(bases.size() * p.bases().size());
    for (Subset prefix : bases)
      for (Subset b : p.bases()) next.push_back(prefix | (b << shift));
    bases = std::move(next);
    shift += p.size();
  }
  return Matroid::from_bases(total, std::move(bases), Validation::kNever);
}

Matroid restriction(const Matroid& m, Subset s,
                    std::vector<int>* kept_labels) {
  if (s == 0) throw InputError("restriction to the empty set");
  const int r = m.rank_of(s);
  std::vector<Subset> minor_bases;
  for_each_subset_of(s, [&](Subset i) {
    if (set_size(i) == r && m.is_independent(i)) minor_bases.push_back(i);
  });
  return relabeled_minor(s, minor_bases, kept_labels);
}

Matroid contraction(const Matroid& m, Subset s,
                    std::vector<int>* kept_labels) {
  const Subset rest = full_set(m.size()) & ~s;
  if (rest == 0) throw InputError("contraction of the whole ground set");
  const int rs = m.rank_of(s);
  const int target = m.rank() - rs;
  std::vector<Subset> minor_bases;
  for_each_subset_of(rest, [&](Subset j) {
    if (set_size(j) == target && m.rank_of(j | s) - rs == target)
      minor_bases.push_back(j);
  });
  return relabeled_minor(rest, minor_bases, kept_labels);
}

Matroid minor_interval(const Matroid& m, Subset f, Subset g,
                       std::vector<int>* kept_labels) {
  if (!m.is_flat(f))
    throw InputError("minor_interval: " + subset_to_string(f) +
                     " is not a flat");
  if (!m.is_flat(g))
    throw InputError("minor_interval: " + subset_to_string(g) +
                     " is not a flat");
  if ((f & ~g) != 0 || f == g)
    throw InputError("minor_interval needs F to be a proper subset of G");
  const int rank_f = m.rank_of(f);
  const int rank_g = m.rank_of(g);
  const Subset window = g & ~f;
  std::vector<Subset> minor_bases;
  for (Subset b : m.bases())
    if (set_size(b & f) == rank_f && set_size(b & g) == rank_g)
      minor_bases.push_back(b & window);
  std::sort(minor_bases.begin(), minor_bases.end());
  minor_bases.erase(std::unique(minor_bases.begin(), minor_bases.end()),
                    minor_bases.end());
  return relabeled_minor(window, minor_bases, kept_labels);
}

}  // namespace mcb

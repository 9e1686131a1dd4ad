#include "mcb/mcb_check.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <unordered_map>

#include "mcb/error.hpp"

namespace mcb {
namespace {

// Shared engine for the degree-multiset scans. Candidates are visited as
// non-decreasing index tuples in lex order; subtrees that cannot reach
// min_union points are cut. Leaf(tuple, covered) returns true to stop the
// enclosing branch (first hit wins inside a branch; branches are merged by
// smallest first index, so the overall result is the first hit in lex
// order no matter how the loop is scheduled).
struct MultisetScan {
  const std::vector<Subset>& family;
  std::vector<int> suffix_max_size;
  int degree;
  int min_union;
  Subset full;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::uint64_t budget;

  MultisetScan(const std::vector<Subset>& sorted_family, int degree_,
               int min_union_, Subset full_, std::uint64_t budget_)
      : family(sorted_family),
        degree(degree_),
        min_union(min_union_),
        full(full_),
        budget(budget_) {
    suffix_max_size.assign(family.size() + 1, 0);
    for (std::size_t i = family.size(); i-- > 0;)
      suffix_max_size[i] =
          std::max(suffix_max_size[i + 1], set_size(family[i]));
  }

  // memo, when given, caches failed (from, covered) states per branch: a
  // state with no violation in k slots has none in fewer slots either
  // (violations pad by repeating an index). Only valid when the leaf
  // predicate depends on the covered set alone.
  template <typename Leaf>
  bool descend(int depth, std::size_t from, Subset covered,
               std::vector<Subset>& tuple, Leaf&& leaf,
               std::unordered_map<std::uint64_t, int>* memo) {
    if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
      out_of_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    if (covered == full) return false;  // union can only stay at E
    const int remaining = degree - depth;
    if (set_size(covered) + remaining * suffix_max_size[from] < min_union)
      return false;
    if (depth == degree) return leaf(tuple, covered);
    const std::uint64_t key = (std::uint64_t{from} << 32) | covered;
    if (memo) {
      const auto it = memo->find(key);
      if (it != memo->end() && it->second >= remaining) return false;
    }
    for (std::size_t i = from; i < family.size(); ++i) {
      if (out_of_budget.load(std::memory_order_relaxed)) return false;
      tuple[depth] = family[i];
      if (descend(depth + 1, i, covered | family[i], tuple, leaf, memo))
        return true;
    }
    if (memo && !out_of_budget.load(std::memory_order_relaxed)) {
      int& slot = (*memo)[key];
      slot = std::max(slot, remaining);
    }
    return false;
  }

  // Runs one branch per first index in parallel and returns the result of
  // the smallest first index that produced one.
  template <typename Result, typename Leaf>
  std::optional<Result> run(Leaf&& leaf_for_branch, bool covered_only_leaf) {
    const std::int64_t width = static_cast<std::int64_t>(family.size());
    std::vector<std::optional<Result>> results(family.size());
    if (degree == 0) return std::nullopt;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < width; ++i) {
      std::vector<Subset> tuple(degree, 0);
      tuple[0] = family[i];
      Result branch_result{};
      auto leaf = [&](const std::vector<Subset>& t, Subset covered) {
        return leaf_for_branch(t, covered, branch_result);
      };
      std::unordered_map<std::uint64_t, int> failed_states;
      if (descend(1, static_cast<std::size_t>(i), family[i], tuple, leaf,
                  covered_only_leaf ? &failed_states : nullptr))
        results[i] = std::move(branch_result);
    }
    if (out_of_budget.load())
      throw ScopeError("tuple search budget of " + std::to_string(budget) +
                       " partial tuples exceeded after visiting " +
                       std::to_string(nodes.load()) + " nodes");
    for (auto& r : results)
      if (r) return r;
    return std::nullopt;
  }
};

McbVerdict run_mcb_search(int n, std::vector<Subset> candidates, int degree,
                          std::uint64_t budget, bool simple_rank1) {
  if (degree < 1) throw InputError("degree must be a positive integer");
  std::sort(candidates.begin(), candidates.end(), SubsetLexLess{});

  McbVerdict verdict;
  verdict.simple_rank1 = simple_rank1;
  verdict.candidates = candidates.size();

  MultisetScan scan(candidates, degree, n - 1, full_set(n), budget);
  auto leaf = [&](const std::vector<Subset>& tuple, Subset covered,
                  McbWitness& out) {
    const Subset missing = scan.full & ~covered;
    if (set_size(missing) != 1) return false;
    out.flats = SetFamily(n, tuple);
    out.omitted = std::countr_zero(missing) + 1;
    return true;
  };
  std::optional<McbWitness> witness =
      scan.run<McbWitness>(std::move(leaf), /*covered_only_leaf=*/true);
  verdict.nodes = scan.nodes.load();
  if (witness) {
    verdict.holds = false;
    verdict.witness = std::move(witness);
  }
  return verdict;
}

}  // namespace

McbVerdict check_mcb(const Matroid& m, int degree, bool proper_only,
                     std::uint64_t budget) {
  const SetFamily candidates = proper_only ? m.proper_flats() : m.flats();
  return run_mcb_search(m.size(), candidates.members, degree, budget,
                        m.is_simple_rank1());
}

McbVerdict check_smcb(int ground_size, const SetFamily& family, int degree,
                      std::uint64_t budget) {
  check_ground_size(ground_size);
  if (family.n != ground_size)
    throw InputError("family ground size " + std::to_string(family.n) +
                     " does not match E of size " +
                     std::to_string(ground_size));
  const Subset full = full_set(ground_size);
  for (Subset s : family.members)
    if (s == full)
      throw InputError(
          "set-theoretic check requires proper subsets; found the full set");
  return run_mcb_search(ground_size, family.members, degree, budget, true);
}

bool hyperplane_bound_applies(int n, int flat_size_bound, int degree,
                              int rank) {
  if (n < 1 || flat_size_bound < 1 || degree < 1 || rank < 1)
    throw InputError("hyperplane_bound_applies needs positive arguments");
  return std::int64_t{n} - 1 -
             std::int64_t{flat_size_bound} * (std::int64_t{degree} - 1) >=
         rank;
}

std::optional<Subset> non_hyperplane_in_near_cover(const Matroid& m,
                                                   int degree,
                                                   std::uint64_t budget) {
  if (degree < 1) throw InputError("degree must be a positive integer");
  std::vector<Subset> candidates = m.proper_flats().members;
  std::sort(candidates.begin(), candidates.end(), SubsetLexLess{});
  const int hyperplane_rank = m.rank() - 1;

  MultisetScan scan(candidates, degree, m.size() - 1, full_set(m.size()),
                    budget);
  auto leaf = [&](const std::vector<Subset>& tuple, Subset covered,
                  Subset& out) {
    if (set_size(covered) < m.size() - 1) return false;
    for (Subset f : tuple)
      if (m.rank_of(f) != hyperplane_rank) {
        out = f;
        return true;
      }
    return false;
  };
  return scan.run<Subset>(std::move(leaf), /*covered_only_leaf=*/false);
}

std::vector<CoverProfile> cover_profiles(const Matroid& m, int k_max,
                                         bool proper_only) {
  if (k_max < 1) throw InputError("k_max must be a positive integer");
  std::vector<Subset> candidates =
      (proper_only ? m.proper_flats() : m.flats()).members;
  std::sort(candidates.begin(), candidates.end(), SubsetLexLess{});
  std::vector<int> suffix_max(candidates.size() + 1, 0);
  for (std::size_t i = candidates.size(); i-- > 0;)
    suffix_max[i] = std::max(suffix_max[i + 1], set_size(candidates[i]));

  const Subset full = full_set(m.size());
  std::vector<CoverProfile> out;
  std::vector<Subset> chosen;

  auto emit_if_minimal = [&]() {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      Subset others = 0;
      for (std::size_t j = 0; j < chosen.size(); ++j)
        if (j != i) others |= chosen[j];
      if ((chosen[i] & ~others) == 0) return;  // member has no private point
    }
    CoverProfile profile;
    profile.flats = SetFamily(m.size(), chosen);
    for (Subset f : chosen) profile.ranks.push_back(m.rank_of(f));
    std::sort(profile.ranks.begin(), profile.ranks.end());
    profile.total_rank = 0;
    for (int r : profile.ranks) profile.total_rank += r;
    out.push_back(std::move(profile));
  };

  auto dfs = [&](auto&& self, std::size_t from, Subset covered) -> void {
    if (covered == full) {
      emit_if_minimal();
      return;  // supersets of a cover are never minimal
    }
    const int depth = static_cast<int>(chosen.size());
    if (depth == k_max) return;
    if (set_size(covered) + (k_max - depth) * suffix_max[from] < m.size())
      return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates[i] == (candidates[i] & covered)) continue;  // no news
      chosen.push_back(candidates[i]);
      self(self, i + 1, covered | candidates[i]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

std::optional<int> min_total_rank_cover(const Matroid& m, int k) {
  std::optional<int> best;
  for (const CoverProfile& p : cover_profiles(m, k, /*proper_only=*/true))
    if (!best || p.total_rank < *best) best = p.total_rank;
  return best;
}

}  // namespace mcb

#include "mcb/reference.hpp"

#include <algorithm>

#include "mcb/error.hpp"

namespace mcb::reference {

std::vector<std::uint8_t> rank_table(int n, const std::vector<Subset>& bases) {
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::uint8_t> rank(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    int best = 0;
    for (Subset b : bases)
      best = std::max(best, set_size(b & static_cast<Subset>(s)));
    rank[s] = static_cast<std::uint8_t>(best);
  }
  return rank;
}

SetFamily flats(int n, const std::vector<Subset>& bases) {
  const std::vector<std::uint8_t> rank = rank_table(n, bases);
  const Subset full = full_set(n);
  std::vector<Subset> out;
  for (Subset s = 0; s <= full; ++s) {
    bool closed = true;
    for (int e = 1; e <= n && closed; ++e)
      if (!contains(s, e) && rank[s | singleton(e)] == rank[s]) closed = false;
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return SetFamily(n, std::move(out));
}

namespace {

bool search(const std::vector<Subset>& family, int depth, int degree,
            std::size_t from, Subset covered, Subset full,
            std::uint64_t budget, std::uint64_t& nodes, Violation& out) {
  if (++nodes > budget)
    throw ScopeError("tuple search budget of " + std::to_string(budget) +
                     " partial tuples exceeded");
  if (depth == degree) {
    const Subset missing = full & ~covered;
    if (set_size(missing) == 1) {
      out.omitted = std::countr_zero(missing) + 1;
      return true;
    }
    return false;
  }
  for (std::size_t i = from; i < family.size(); ++i) {
    out.tuple[depth] = family[i];
    if (search(family, depth + 1, degree, i, covered | family[i], full,
               budget, nodes, out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<Violation> mcb_search_naive(int n,
                                          const std::vector<Subset>& family,
                                          int degree, std::uint64_t budget,
                                          std::uint64_t* nodes) {
  std::vector<Subset> sorted = family;
  std::sort(sorted.begin(), sorted.end(), SubsetLexLess{});
  Violation candidate;
  candidate.tuple.assign(degree, 0);
  std::uint64_t visited = 0;
  const bool found =
      search(sorted, 0, degree, 0, 0, full_set(n), budget, visited, candidate);
  if (nodes) *nodes = visited;
  if (!found) return std::nullopt;
  return candidate;
}

std::optional<std::vector<int>> support_mismatch(
    int n, const std::vector<Rational>& simplex_coeffs,
    const std::vector<Subset>& vertices) {
  std::vector<int> direction(n, -1);
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::int64_t step = 0; step < total; ++step) {
    // h of the signed sum: sum over I of y_I * max_{i in I} w_i.
    Rational lhs;
    for (Subset i = 1; i < (Subset{1} << n); ++i) {
      if (simplex_coeffs[i].is_zero()) continue;
      int best = -2;
      for (int e = 1; e <= n; ++e)
        if (contains(i, e)) best = std::max(best, direction[e - 1]);
      lhs += simplex_coeffs[i] * Rational(best);
    }
    // h of the hull: max over vertices of <w, v>.
    bool first = true;
    std::int64_t rhs = 0;
    for (Subset v : vertices) {
      std::int64_t dot = 0;
      for (int e = 1; e <= n; ++e)
        if (contains(v, e)) dot += direction[e - 1];
      if (first || dot > rhs) rhs = dot;
      first = false;
    }
    if (lhs != Rational(rhs)) return direction;
    // Next direction in {-1,0,1}^n, odometer order.
    for (int i = 0; i < n; ++i) {
      if (direction[i] < 1) {
        ++direction[i];
        break;
      }
      direction[i] = -1;
    }
  }
  return std::nullopt;
}

}  // namespace mcb::reference

#include "mcb/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "mcb/error.hpp"

namespace mcb {
namespace {

constexpr int kDecomposeMaxGround = 10;
constexpr int kNormalFanMaxGround = 6;

std::int64_t pow3(int n) {
  std::int64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

}  // namespace

std::vector<Subset> polytope_vertices(const Matroid& m) { return m.bases(); }

std::vector<int> z_values(const Matroid& m, ZConvention convention) {
  const Subset full = full_set(m.size());
  std::vector<int> z(std::size_t{1} << m.size(), 0);
  for (Subset i = 1; i <= full; ++i)
    z[i] = convention == ZConvention::kSpanAsStated
               ? m.rank() - m.rank_of(i)
               : m.rank() - m.rank_of(full & ~i);
  if (convention == ZConvention::kSpanAsStated) z[0] = 0;
  return z;
}

std::vector<Rational> mobius_invert(const std::vector<Rational>& z) {
  std::vector<Rational> y = z;
  const std::size_t size = y.size();
  for (std::size_t d = 1; d < size; d <<= 1)
    for (std::size_t s = 0; s < size; ++s)
      if (s & d) y[s] -= y[s ^ d];
  return y;
}

std::vector<Rational> zeta_transform(const std::vector<Rational>& y) {
  std::vector<Rational> z = y;
  const std::size_t size = z.size();
  for (std::size_t d = 1; d < size; d <<= 1)
    for (std::size_t s = 0; s < size; ++s)
      if (s & d) z[s] += z[s ^ d];
  return z;
}

std::optional<std::vector<int>> support_mismatch(
    const MinkDecomp& decomp, const std::vector<Subset>& vertices) {
  const int n = decomp.n;
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::pair<Subset, Rational>> terms;
  for (Subset i = 1; i < masks; ++i)
    if (!decomp.y[i].is_zero()) terms.emplace_back(i, decomp.y[i]);

  const std::int64_t total = pow3(n);
  std::int64_t first_bad = total;

#pragma omp parallel reduction(min : first_bad)
  {
    std::vector<int> w(n);
    std::vector<std::int8_t> best(masks);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t code = idx;
      for (int i = 0; i < n; ++i) {
        w[i] = static_cast<int>(code % 3) - 1;
        code /= 3;
      }
      // best[s] = max of w over the elements of s, by lowest-bit peeling.
      best[0] = -2;
      for (std::size_t s = 1; s < masks; ++s) {
        const int low = std::countr_zero(static_cast<Subset>(s));
        const Subset rest = static_cast<Subset>(s) & (static_cast<Subset>(s) - 1);
        best[s] = static_cast<std::int8_t>(
            std::max<int>(w[low], rest ? best[rest] : -2));
      }
      Rational lhs;
      for (const auto& [mask, coeff] : terms)
        lhs += coeff * Rational(best[mask]);
      std::int64_t rhs = 0;
      bool first = true;
      for (Subset v : vertices) {
        std::int64_t dot = 0;
        Subset rest = v;
        while (rest) {
          dot += w[std::countr_zero(rest)];
          rest &= rest - 1;
        }
        if (first || dot > rhs) rhs = dot;
        first = false;
      }
      if (lhs != Rational(rhs)) first_bad = std::min(first_bad, idx);
    }
  }

  if (first_bad == total) return std::nullopt;
  std::vector<int> w(n);
  std::int64_t code = first_bad;
  for (int i = 0; i < n; ++i) {
    w[i] = static_cast<int>(code % 3) - 1;
    code /= 3;
  }
  return w;
}

bool is_generic(const MinkDecomp& decomp) {
  for (const Rational& v : decomp.y)
    if (v.is_negative()) return false;
  return true;
}

MinkDecomp decompose(const Matroid& m) {
  if (m.size() > kDecomposeMaxGround)
    throw ScopeError("decompose supports ground sets up to " +
                     std::to_string(kDecomposeMaxGround) + " elements, got " +
                     std::to_string(m.size()));
  const std::vector<Subset> vertices = polytope_vertices(m);
  MinkDecomp candidates[2];
  const ZConvention order[2] = {ZConvention::kSpanAsStated,
                                ZConvention::kComplementSpan};
  for (int c = 0; c < 2; ++c) {
    const std::vector<int> z = z_values(m, order[c]);
    std::vector<Rational> zq(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zq[i] = Rational(z[i]);
    candidates[c] = MinkDecomp{m.size(), mobius_invert(zq), order[c]};
    if (!support_mismatch(candidates[c], vertices)) return candidates[c];
  }
  throw ConventionMismatch(
      "no z-convention reproduces the matroid polytope on a ground set of "
      "size " +
          std::to_string(m.size()),
      std::move(candidates[0]), std::move(candidates[1]));
}

bool is_building_set(int n, const std::vector<Subset>& members) {
  const std::set<Subset> present(members.begin(), members.end());
  for (int e = 1; e <= n; ++e)
    if (!present.count(singleton(e))) return false;
  for (Subset a : present)
    for (Subset b : present)
      if ((a & b) && !present.count(a | b)) return false;
  return true;
}

BuildingSet building_closure(int n, const SetFamily& family) {
  check_ground_size(n);
  if (family.n != n)
    throw InputError("family lives on the wrong ground set");
  std::set<Subset> present;
  std::vector<Subset> queue;
  const auto insert = [&](Subset s) {
    if (present.insert(s).second) queue.push_back(s);
  };
  for (Subset s : family.members) {
    if (s == 0)
      throw InputError("building closure is defined for nonempty members");
    insert(s);
  }
  for (int e = 1; e <= n; ++e) insert(singleton(e));
  while (!queue.empty()) {
    const Subset s = queue.back();
    queue.pop_back();
    std::vector<Subset> unions;
    for (Subset t : present)
      if ((s & t) && !present.count(s | t)) unions.push_back(s | t);
    for (Subset u : unions) insert(u);
  }
  BuildingSet out;
  out.n = n;
  out.members.assign(present.begin(), present.end());
  std::sort(out.members.begin(), out.members.end(), SubsetLexLess{});
  return out;
}

std::vector<FacetInequality> facet_inequalities(const MinkDecomp& decomp) {
  if (!is_generic(decomp))
    throw InputError(
        "facet inequalities need a generic decomposition (all y_I >= 0)");
  std::vector<Subset> support;
  for (Subset i = 1; i < (Subset{1} << decomp.n); ++i)
    if (!decomp.y[i].is_zero()) support.push_back(i);
  const BuildingSet closure =
      building_closure(decomp.n, SetFamily(decomp.n, support));
  std::vector<FacetInequality> out;
  out.reserve(closure.members.size());
  for (Subset g : closure.members) {
    Rational bound;
    for (Subset i : support)
      if ((i & g) == i) bound += decomp.y[i];
    out.push_back(FacetInequality{g, bound});
  }
  return out;
}

SetFamily flacets(const Matroid& m) {
  if (!m.is_connected())
    throw InputError(
        "flacets are defined for connected matroids; split a disconnected "
        "matroid into its direct-sum components first");
  std::vector<Subset> out;
  const Subset full = full_set(m.size());
  for (Subset f : m.flats().members) {
    if (f == 0 || f == full) continue;
    if (restriction(m, f).is_connected() && contraction(m, f).is_connected())
      out.push_back(f);
  }
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return SetFamily(m.size(), std::move(out));
}

FlacetEquivalenceReport mcb_flacet_equivalence(const Matroid& m, int degree) {
  FlacetEquivalenceReport report;
  report.connected = m.is_connected();
  report.simple_rank1 = m.is_simple_rank1();

  const SetFamily all_flats = m.flats();
  const Subset full = full_set(m.size());

  report.interval_minors_connected = true;
  for (Subset f : all_flats.members)
    for (Subset g : all_flats.members) {
      if (f == g || (f & ~g)) continue;
      if (!minor_interval(m, f, g).is_connected()) {
        report.interval_minors_connected = false;
        goto interval_done;
      }
    }
interval_done:

  report.flats_connected_coconnected = true;
  for (Subset f : all_flats.members) {
    if (f == 0 || f == full) continue;
    if (!restriction(m, f).is_connected() ||
        !contraction(m, f).is_connected()) {
      report.flats_connected_coconnected = false;
      break;
    }
  }

  const MinkDecomp decomp = decompose(m);
  report.convention = decomp.convention;
  report.generic = is_generic(decomp);
  report.full_support = decomp.y[full] > Rational(0);

  std::vector<Subset> support;
  for (Subset i = 1; i <= full; ++i)
    if (decomp.y[i] > Rational(0)) support.push_back(i);
  const BuildingSet closure =
      building_closure(m.size(), SetFamily(m.size(), support));
  std::vector<Subset> proper_members;
  for (Subset s : closure.members)
    if (s != full) proper_members.push_back(s);

  report.matroid_side = check_mcb(m, degree);
  report.set_side =
      check_smcb(m.size(), SetFamily(m.size(), proper_members), degree);
  report.sides_equal = report.matroid_side.holds == report.set_side.holds;
  report.hypotheses_hold =
      report.connected && report.simple_rank1 &&
      (report.interval_minors_connected ||
       report.flats_connected_coconnected) &&
      report.generic && report.full_support;
  report.asserted = report.hypotheses_hold;
  return report;
}

bool normal_fan_equivalent(const Matroid& m, const Matroid& other) {
  if (m.size() != other.size())
    throw InputError("normal fan comparison needs equal ground sets");
  if (m.size() > kNormalFanMaxGround)
    throw ScopeError("normal fan comparison supports ground sets up to " +
                     std::to_string(kNormalFanMaxGround) + " elements");
  const int n = m.size();

  // One weight vector per ordering, distinct powers of two so the
  // maximizing vertex is unique; fans agree iff the orderings are grouped
  // by maximizer identically.
  const auto classes = [n](const Matroid& matroid) {
    std::vector<int> labels;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::int64_t best = -1;
      int best_index = -1;
      for (std::size_t v = 0; v < matroid.bases().size(); ++v) {
        std::int64_t value = 0;
        for (int pos = 0; pos < n; ++pos)
          if (contains(matroid.bases()[v], perm[pos] + 1))
            value += std::int64_t{1} << (n - 1 - pos);
        if (value > best) {
          best = value;
          best_index = static_cast<int>(v);
        }
      }
      labels.push_back(best_index);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Renumber by first occurrence so vertex identities drop out.
    std::vector<int> canonical(labels.size());
    std::vector<int> seen_at(labels.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (seen_at[labels[i]] < 0) seen_at[labels[i]] = next++;
      canonical[i] = seen_at[labels[i]];
    }
    return canonical;
  };

  return classes(m) == classes(other);
}

}  // namespace mcb

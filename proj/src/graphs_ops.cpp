#include "mcb/graphs_ops.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mcb/error.hpp"

namespace mcb {
namespace {

constexpr int kDirgraphMaxEdges = 8;
constexpr int kDirgraphMaxDegree = 3;
constexpr int kPathCoverMaxVertices = 10;

bool endpoints_connected(const Graph& g, Subset edge_set, int edge) {
  const auto [source, target] = g.edges[edge - 1];
  if (source == target) return true;
  std::vector<char> seen(g.vertex_count + 1, 0);
  std::vector<int> stack = {source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == target) return true;
    for (int e = 1; e <= static_cast<int>(g.edges.size()); ++e) {
      if (e == edge || !contains(edge_set, e)) continue;
      const auto [a, b] = g.edges[e - 1];
      int next = -1;
      if (a == v && !seen[b]) next = b;
      if (b == v && !seen[a]) next = a;
      if (next > 0) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  return false;
}

void extend_path(const Digraph& d, VertexPath& path, Subset visited,
                 std::vector<VertexPath>& out) {
  bool extended = false;
  for (int next : d.out[path.back() - 1]) {
    if (contains(visited, next)) continue;
    extended = true;
    path.push_back(next);
    extend_path(d, path, visited | singleton(next), out);
    path.pop_back();
  }
  if (!extended) out.push_back(path);
}

}  // namespace

SetFamily k_circuits(const Matroid& m, int k, CircuitReading reading) {
  if (k < 1) throw InputError("k must be a positive integer");
  const Subset full = full_set(m.size());
  std::vector<Subset> out;
  for (Subset s = 1; s <= full; ++s) {
    if (set_size(s) != k * m.rank_of(s) + 1) continue;
    bool ok = true;
    for_each_subset_of(s, [&](Subset t) {
      if (!ok || t == s) return;
      const int bound = k * m.rank_of(t);
      if (reading == CircuitReading::kStrict ? set_size(t) != bound
                                             : set_size(t) > bound)
        ok = false;
    });
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return SetFamily(m.size(), std::move(out));
}

DisjointnessVerdict direct_sum_graphic(const Matroid& m, int k,
                                       CircuitReading reading) {
  const SetFamily circuits = k_circuits(m, k, reading);
  for (std::size_t i = 0; i < circuits.members.size(); ++i)
    for (std::size_t j = i + 1; j < circuits.members.size(); ++j)
      if (circuits.members[i] & circuits.members[j])
        return DisjointnessVerdict{
            false, std::make_pair(circuits.members[i], circuits.members[j])};
  return DisjointnessVerdict{};
}

bool induced_two_connected(const Graph& g, Subset edge_set) {
  if (edge_set & ~full_set(static_cast<int>(g.edges.size())))
    throw InputError("edge subset uses labels beyond the edge list");
  for (int e = 1; e <= static_cast<int>(g.edges.size()); ++e)
    if (contains(edge_set, e) && !endpoints_connected(g, edge_set, e))
      return false;
  return true;
}

Digraph mcb_digraph(int ground_size, const SetFamily& family) {
  check_ground_size(ground_size);
  if (family.n != ground_size)
    throw InputError("family lives on the wrong ground set");
  Digraph d(ground_size);
  for (int i = 1; i <= ground_size; ++i)
    for (int j = 1; j <= ground_size; ++j) {
      if (i == j) continue;
      bool implied = true;
      for (Subset f : family.members)
        if (contains(f, i) && !contains(f, j)) {
          implied = false;
          break;
        }
      if (implied) d.add_edge(i, j);
    }
  return d;
}

std::vector<VertexPath> maximal_paths(const Digraph& d) {
  std::vector<VertexPath> out;
  for (int start = 1; start <= d.vertex_count; ++start) {
    VertexPath path = {start};
    extend_path(d, path, singleton(start), out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexPath>> maximal_path_covers(const Digraph& d,
                                                         int r) {
  if (r < 1) throw InputError("r must be a positive integer");
  if (d.vertex_count > kPathCoverMaxVertices)
    throw ScopeError("path covers support up to " +
                     std::to_string(kPathCoverMaxVertices) + " vertices");
  const std::vector<VertexPath> paths = maximal_paths(d);
  std::vector<Subset> path_sets;
  path_sets.reserve(paths.size());
  for (const VertexPath& p : paths) {
    Subset s = 0;
    for (int v : p) s |= singleton(v);
    path_sets.push_back(s);
  }
  const Subset everyone = full_set(d.vertex_count);

  std::vector<std::vector<VertexPath>> out;
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t from, Subset covered) -> void {
    if (covered == everyone) {
      std::vector<VertexPath> family;
      family.reserve(chosen.size());
      for (std::size_t i : chosen) family.push_back(paths[i]);
      out.push_back(std::move(family));
      return;
    }
    if (static_cast<int>(chosen.size()) == r) return;
    for (std::size_t i = from; i < paths.size(); ++i) {
      chosen.push_back(i);
      self(self, i + 1, covered | path_sets[i]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

DirgraphReport check_dirgraph_equivalence(const Graph& g, int r) {
  const int n = static_cast<int>(g.edges.size());
  if (n > kDirgraphMaxEdges || r > kDirgraphMaxDegree || r < 1)
    throw ScopeError("equivalence report supports up to " +
                     std::to_string(kDirgraphMaxEdges) + " edges and r <= " +
                     std::to_string(kDirgraphMaxDegree));
  const Matroid m = cycle_matroid(g);
  DirgraphReport report;
  report.r_circuits_disjoint_strict =
      direct_sum_graphic(m, r, CircuitReading::kStrict).disjoint;
  report.r_circuits_disjoint_relaxed =
      direct_sum_graphic(m, r, CircuitReading::kRelaxed).disjoint;

  // Minimal families of <= r flats covering E minus one point.
  const std::vector<Subset> flats = m.flats().members;
  const Subset full = full_set(n);
  std::vector<std::vector<Subset>> minimal_families;
  for (int p = 1; p <= n; ++p) {
    const Subset target = full & ~singleton(p);
    std::vector<Subset> chosen;
    auto dfs = [&](auto&& self, std::size_t from, Subset covered) -> void {
      if ((covered & target) == target) {
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          Subset others = 0;
          for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) others |= chosen[j];
          if ((others & target) == target) return;  // member removable
        }
        minimal_families.push_back(chosen);
        return;
      }
      if (static_cast<int>(chosen.size()) == r) return;
      for (std::size_t i = from; i < flats.size(); ++i) {
        chosen.push_back(flats[i]);
        self(self, i + 1, covered | flats[i]);
        chosen.pop_back();
      }
    };
    dfs(dfs, 0, 0);
  }
  std::sort(minimal_families.begin(), minimal_families.end());
  minimal_families.erase(
      std::unique(minimal_families.begin(), minimal_families.end()),
      minimal_families.end());

  report.minimal_tuples_internally_disjoint = true;
  for (const auto& family : minimal_families)
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        if (family[i] & family[j])
          report.minimal_tuples_internally_disjoint = false;

  report.minimal_tuples_share_no_flat = true;
  for (std::size_t x = 0; x < minimal_families.size(); ++x)
    for (std::size_t y = x + 1; y < minimal_families.size(); ++y)
      for (Subset fx : minimal_families[x])
        for (Subset fy : minimal_families[y])
          if (fx == fy) report.minimal_tuples_share_no_flat = false;

  report.mcb_holds = check_mcb(m, r).holds;

  // Every assignment of edges to r labeled parts; part i keeps its own copy
  // of the graph, so the disjoint union is 2-connected iff every part is.
  report.all_assignments_two_connected = true;
  std::vector<int> assign(n, 0);
  while (true) {
    std::vector<Subset> parts(r, 0);
    for (int e = 1; e <= n; ++e) parts[assign[e - 1]] |= singleton(e);
    for (const Subset part : parts)
      if (!induced_two_connected(g, part))
        report.all_assignments_two_connected = false;
    int pos = 0;
    while (pos < n && assign[pos] == r - 1) assign[pos++] = 0;
    if (pos == n) break;
    ++assign[pos];
  }

  report.sides_equal =
      report.mcb_holds == report.all_assignments_two_connected;
  report.hypotheses_hold = report.r_circuits_disjoint_strict &&
                           report.minimal_tuples_internally_disjoint &&
                           report.minimal_tuples_share_no_flat;
  report.asserted = report.hypotheses_hold;
  return report;
}

}  // namespace mcb

#include <doctest.h>

#include <algorithm>

#include "mcb/error.hpp"
#include "mcb/graphs_ops.hpp"
#include "mcb/mcb_check.hpp"
#include "oracles.hpp"

using namespace mcb;
using mcb::testing::small_corpus;

namespace {

Subset sub(const std::vector<int>& elements, int n) {
  return subset_from_elements(elements, n);
}

// All-pairs reachability closure over the kept edges, used as the oracle
// for the edge-wise 2-connectivity check.
bool two_connected_oracle(const Graph& g, Subset edge_set) {
  for (int e = 1; e <= static_cast<int>(g.edges.size()); ++e) {
    if (!contains(edge_set, e)) continue;
    const int v = g.vertex_count;
    std::vector<std::vector<char>> reach(v + 1, std::vector<char>(v + 1, 0));
    for (int i = 1; i <= v; ++i) reach[i][i] = 1;
    for (int f = 1; f <= static_cast<int>(g.edges.size()); ++f) {
      if (f == e || !contains(edge_set, f)) continue;
      reach[g.edges[f - 1].first][g.edges[f - 1].second] = 1;
      reach[g.edges[f - 1].second][g.edges[f - 1].first] = 1;
    }
    for (int k = 1; k <= v; ++k)
      for (int i = 1; i <= v; ++i)
        for (int j = 1; j <= v; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    if (!reach[g.edges[e - 1].first][g.edges[e - 1].second]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("k-circuits under both readings") {
  const SetFamily strict = k_circuits(uniform(1, 2), 1);
  CHECK(strict.members == std::vector<Subset>{sub({1, 2}, 2)});

  CHECK(k_circuits(uniform(3, 3), 1).members.empty());
  CHECK(k_circuits(uniform(3, 3), 2).members.empty());
  CHECK(k_circuits(uniform(4, 4), 3).members.empty());

  // A single circuit of length c: the whole set passes the relaxed reading
  // at k = 1 and, for c > 2, fails the strict one through its singletons...
  const Matroid circuit = cycle_matroid(Graph::cycle(3));
  const SetFamily relaxed = k_circuits(circuit, 1, CircuitReading::kRelaxed);
  CHECK(std::find(relaxed.members.begin(), relaxed.members.end(),
                  full_set(3)) != relaxed.members.end());
  const SetFamily strict_c3 = k_circuits(circuit, 1, CircuitReading::kStrict);
  CHECK(std::find(strict_c3.members.begin(), strict_c3.members.end(),
                  full_set(3)) != strict_c3.members.end());

  // ...while for k >= 2 the strict reading only ever admits single loops:
  // any other member would contain a rank-1 singleton with 1 != k.
  for (const auto& [name, m] : small_corpus()) {
    CAPTURE(name);
    for (Subset s : k_circuits(m, 2, CircuitReading::kStrict).members) {
      CHECK(set_size(s) == 1);
      CHECK(m.rank_of(s) == 0);
    }
  }

  // Members re-validate their defining equations.
  for (const auto& [name, m] : small_corpus()) {
    CAPTURE(name);
    for (int k = 1; k <= 2; ++k)
      for (Subset s : k_circuits(m, k, CircuitReading::kRelaxed).members) {
        CHECK(set_size(s) == k * m.rank_of(s) + 1);
        for_each_subset_of(s, [&](Subset t) {
          if (t != s) CHECK(set_size(t) <= k * m.rank_of(t));
        });
      }
  }
}

TEST_CASE("disjointness of k-circuits") {
  CHECK(direct_sum_graphic(uniform(3, 3), 2).disjoint);

  // U_{1,2} + U_{1,2} has the two pair-circuits, disjoint.
  const Matroid pairs = direct_sum({uniform(1, 2), uniform(1, 2)});
  const auto verdict = direct_sum_graphic(pairs, 1);
  CHECK(verdict.disjoint);

  // U_{2,3} at k = 1 relaxed: the full set is the only candidate.
  const auto lone = direct_sum_graphic(uniform(2, 3), 1,
                                       CircuitReading::kRelaxed);
  CHECK(lone.disjoint);

  // Two overlapping relaxed 1-circuits: two triangles sharing an edge.
  const Graph shared(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {2, 4}});
  const auto overlapping =
      direct_sum_graphic(cycle_matroid(shared), 1, CircuitReading::kRelaxed);
  CHECK_FALSE(overlapping.disjoint);
  REQUIRE(overlapping.overlap.has_value());
  CHECK((overlapping.overlap->first & overlapping.overlap->second) != 0);

  // M(K_3) at k = 2: no 2-circuits under either reading, so the verdict is
  // vacuously positive with no overlap certificate.
  for (CircuitReading reading :
       {CircuitReading::kStrict, CircuitReading::kRelaxed}) {
    const auto verdict =
        direct_sum_graphic(cycle_matroid(Graph::complete(3)), 2, reading);
    CHECK(verdict.disjoint);
    CHECK_FALSE(verdict.overlap.has_value());
  }
}

TEST_CASE("edge-wise two-connectivity examples") {
  const Graph triangle = Graph::cycle(3);
  CHECK(induced_two_connected(triangle, full_set(3)));

  const Graph path(3, {{1, 2}, {2, 3}});
  CHECK_FALSE(induced_two_connected(path, full_set(2)));

  const Graph k4 = Graph::complete(4);
  // Edges (1,2),(2,3),(3,4),(1,4) form a 4-cycle: labels 1, 4, 6, 3.
  CHECK(induced_two_connected(k4, sub({1, 4, 6, 3}, 6)));
  // A spanning star is a tree.
  CHECK_FALSE(induced_two_connected(k4, sub({1, 2, 3}, 6)));
  // The empty set is vacuously fine.
  CHECK(induced_two_connected(k4, 0));

  // Cycles of every length pass, trees with an edge fail.
  for (int len = 2; len <= 6; ++len)
    CHECK(induced_two_connected(Graph::cycle(len), full_set(len)));
  CHECK_FALSE(induced_two_connected(Graph(2, {{1, 2}}), full_set(1)));
}

TEST_CASE("two-connectivity matches the reachability oracle exhaustively") {
  for (const Graph& g : {Graph::complete(4), Graph::cycle(3)}) {
    const int n = static_cast<int>(g.edges.size());
    for (Subset a = 0; a <= full_set(n); ++a)
      CHECK(induced_two_connected(g, a) == two_connected_oracle(g, a));
  }
}

TEST_CASE("implication digraph") {
  const Digraph d = mcb_digraph(
      2, SetFamily(2, {sub({1, 2}, 2), sub({2}, 2)}));
  CHECK(d.out[0] == std::vector<int>{2});
  CHECK(d.out[1].empty());

  // Empty family: all implications hold vacuously.
  const Digraph complete = mcb_digraph(3, SetFamily(3, {}));
  for (int v = 1; v <= 3; ++v) CHECK(complete.out[v - 1].size() == 2);

  // Singletons kill every edge.
  const Digraph none = mcb_digraph(
      3, SetFamily(3, {sub({1}, 3), sub({2}, 3), sub({3}, 3)}));
  for (int v = 1; v <= 3; ++v) CHECK(none.out[v - 1].empty());
}

TEST_CASE("digraph edges are antitone in the family") {
  const std::vector<Subset> pool = {sub({1, 2}, 4), sub({2, 3}, 4),
                                    sub({1, 3, 4}, 4), sub({4}, 4)};
  std::vector<Subset> members;
  auto edge_count = [&](const std::vector<Subset>& f) {
    const Digraph d = mcb_digraph(4, SetFamily(4, f));
    std::size_t count = 0;
    for (const auto& outs : d.out) count += outs.size();
    return count;
  };
  std::size_t previous = edge_count(members);
  for (Subset s : pool) {
    members.push_back(s);
    const std::size_t current = edge_count(members);
    CHECK(current <= previous);
    previous = current;
  }
}

TEST_CASE("maximal paths and path covers") {
  Digraph chain(3);
  chain.add_edge(1, 2);
  chain.add_edge(2, 3);
  const auto chain_covers = maximal_path_covers(chain, 1);
  REQUIRE(chain_covers.size() == 1);
  CHECK(chain_covers[0][0] == VertexPath{1, 2, 3});

  Digraph join(3);
  join.add_edge(1, 3);
  join.add_edge(2, 3);
  const auto join_covers = maximal_path_covers(join, 2);
  REQUIRE(join_covers.size() == 1);
  CHECK(join_covers[0].size() == 2);
  CHECK(join_covers[0][0] == VertexPath{1, 3});
  CHECK(join_covers[0][1] == VertexPath{2, 3});

  Digraph cycle(3);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 3);
  cycle.add_edge(3, 1);
  const auto cycle_covers = maximal_path_covers(cycle, 1);
  CHECK(cycle_covers.size() == 3);
  for (const auto& family : cycle_covers) CHECK(family[0].size() == 3);

  CHECK_THROWS_AS(maximal_path_covers(Digraph(11), 1), ScopeError);
}

TEST_CASE("equivalence report for the triangle at degree 2") {
  const DirgraphReport report =
      check_dirgraph_equivalence(Graph::cycle(3), 2);
  CHECK(report.r_circuits_disjoint_strict);
  CHECK(report.r_circuits_disjoint_relaxed);
  CHECK(report.minimal_tuples_internally_disjoint);
  CHECK_FALSE(report.minimal_tuples_share_no_flat);
  CHECK_FALSE(report.mcb_holds);
  CHECK_FALSE(report.all_assignments_two_connected);
  CHECK(report.sides_equal);
  CHECK_FALSE(report.asserted);
}

TEST_CASE("equivalence report for K_4 at degree 2") {
  const DirgraphReport report =
      check_dirgraph_equivalence(Graph::complete(4), 2);
  CHECK_FALSE(report.mcb_holds);
  CHECK_FALSE(report.all_assignments_two_connected);
  CHECK(report.sides_equal);
  CHECK_THROWS_AS(check_dirgraph_equivalence(Graph::complete(5), 2),
                  ScopeError);
}

TEST_CASE("the implication premise forces the check to pass") {
  // Whenever every degree-r tuple of proper flats admits a second witness
  // point x_p for each missed p, the degree-r check must hold.
  for (const auto& [name, m] : small_corpus()) {
    if (m.size() > 6) continue;
    CAPTURE(name);
    const std::vector<Subset> flats = m.proper_flats().members;
    for (int r = 1; r <= 2; ++r) {
      bool premise = true;
      std::vector<std::size_t> pick(r, 0);
      while (premise) {
        for (int p = 1; p <= m.size() && premise; ++p) {
          bool witness_found = false;
          for (int x = 1; x <= m.size() && !witness_found; ++x) {
            if (x == p) continue;
            bool works = true;
            for (int slot = 0; slot < r && works; ++slot) {
              const Subset f = flats[pick[slot]];
              if (!contains(f, p) && contains(f, x)) works = false;
            }
            witness_found = works;
          }
          if (!witness_found) premise = false;
        }
        int slot = 0;
        while (slot < r && pick[slot] + 1 == flats.size()) pick[slot++] = 0;
        if (slot == r) break;
        ++pick[slot];
      }
      if (premise) CHECK(check_mcb(m, r).holds);
    }
  }
}

#include <doctest.h>

#include <random>

#include "mcb/mcb_check.hpp"
#include "mcb/reference.hpp"
#include "oracles.hpp"

using namespace mcb;
using mcb::testing::small_corpus;

TEST_CASE("set-theoretic search matches the naive route on random families") {
  // Random proper-subset families stress the memoized pruned search where
  // duplicate members and padding interact; the unpruned reference is the
  // ground truth for verdict and witness alike.
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);  // 2..7
    const Subset full = full_set(n);
    std::uniform_int_distribution<int> members(1, 7);
    std::uniform_int_distribution<Subset> subset(0, full - 1);
    std::vector<Subset> family;
    const int count = members(rng);
    for (int i = 0; i < count; ++i) {
      Subset s = subset(rng);
      if (s == full) s = 0;
      family.push_back(s);
    }
    const int degree = 1 + static_cast<int>(rng() % 5);  // 1..5
    CAPTURE(n);
    CAPTURE(degree);

    const McbVerdict pruned =
        check_smcb(n, SetFamily(n, family), degree);
    const auto naive =
        reference::mcb_search_naive(n, family, degree, kDefaultSearchBudget);
    REQUIRE(pruned.holds == !naive.has_value());
    if (naive) {
      CHECK(pruned.witness->flats.members == naive->tuple);
      CHECK(pruned.witness->omitted == naive->omitted);
    }
  }
}

TEST_CASE("dual rank identity holds exhaustively") {
  for (const auto& [name, m] : small_corpus()) {
    CAPTURE(name);
    const Matroid star = dual(m);
    const Subset full = full_set(m.size());
    for (Subset s = 0; s <= full; ++s)
      CHECK(star.rank_of(s) ==
            set_size(s) + m.rank_of(full & ~s) - m.rank());
  }
}

TEST_CASE("paving predicate agrees with the circuit enumeration") {
  for (const auto& [name, m] : small_corpus()) {
    CAPTURE(name);
    int smallest = m.size() + 1;
    for (Subset c : m.circuits().members)
      smallest = std::min(smallest, set_size(c));
    CHECK(m.is_paving() == (smallest >= m.rank()));
  }
}

TEST_CASE("spanning tree counts of standard graphs") {
  CHECK(cycle_matroid(Graph::cycle(5)).bases().size() == 5);
  CHECK(cycle_matroid(Graph::complete(4)).bases().size() == 16);
  // Complete bipartite 2x3: edges in row-major order.
  const Graph k23(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(cycle_matroid(k23).bases().size() == 12);
  // A loop never enters a basis; a bridge enters every one.
  const Graph looped(2, {{1, 1}, {1, 2}});
  const Matroid lm = cycle_matroid(looped);
  CHECK(lm.rank() == 1);
  CHECK(lm.bases() == std::vector<Subset>{singleton(2)});
}

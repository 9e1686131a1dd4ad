#include <doctest.h>

#include <algorithm>

#include "mcb/constructions.hpp"
#include "mcb/error.hpp"
#include "mcb/mcb_check.hpp"
#include "mcb/reference.hpp"
#include "oracles.hpp"

using namespace mcb;
using mcb::testing::small_corpus;

namespace {

Subset sub(const std::vector<int>& elements, int n) {
  return subset_from_elements(elements, n);
}

void check_witness_valid(const Matroid& m, const McbVerdict& verdict) {
  REQUIRE(verdict.witness.has_value());
  const McbWitness& w = *verdict.witness;
  Subset covered = 0;
  for (Subset f : w.flats.members) {
    CHECK(m.is_flat(f));
    covered |= f;
  }
  CHECK(covered == (full_set(m.size()) & ~singleton(w.omitted)));
}

}  // namespace

TEST_CASE("check_mcb on the uniform examples") {
  CHECK(check_mcb(uniform(2, 3), 1).holds);

  const McbVerdict free3 = check_mcb(uniform(3, 3), 1);
  CHECK_FALSE(free3.holds);
  REQUIRE(free3.witness.has_value());
  CHECK(free3.witness->flats.members == std::vector<Subset>{sub({1, 2}, 3)});
  CHECK(free3.witness->omitted == 3);

  CHECK(check_mcb(nobd_paving({12, 6, 2}), 2).holds);
  CHECK_THROWS_AS(check_mcb(uniform(2, 3), 0), InputError);
}

TEST_CASE("check_mcb flags the rank-1 assumption") {
  CHECK(check_mcb(uniform(2, 3), 1).simple_rank1);
  CHECK_FALSE(check_mcb(uniform(1, 2), 1).simple_rank1);
}

TEST_CASE("allowing the improper flat trivializes the check") {
  const Matroid u33 = uniform(3, 3);
  CHECK_FALSE(check_mcb(u33, 1, /*proper_only=*/true).holds);
  // E itself can never produce a one-point-short union, but it is in the
  // candidate pool now.
  const McbVerdict with_e = check_mcb(u33, 1, /*proper_only=*/false);
  CHECK(with_e.candidates == 8);
  CHECK_FALSE(with_e.holds);
}

TEST_CASE("hyperplane bound arithmetic") {
  CHECK(hyperplane_bound_applies(12, 6, 2, 3));
  CHECK_FALSE(hyperplane_bound_applies(12, 6, 3, 3));
  CHECK(hyperplane_bound_applies(4, 3, 1, 3));   // degree 1: n-1 >= r
  CHECK_THROWS_AS(hyperplane_bound_applies(0, 1, 1, 1), InputError);
}

TEST_CASE("check_smcb examples") {
  const McbVerdict all_proper =
      check_smcb(3,
                 SetFamily(3, {sub({1}, 3), sub({2}, 3), sub({3}, 3),
                               sub({1, 2}, 3), sub({1, 3}, 3), sub({2, 3}, 3),
                               0}),
                 1);
  CHECK_FALSE(all_proper.holds);
  CHECK(all_proper.witness->flats.members ==
        std::vector<Subset>{sub({1, 2}, 3)});
  CHECK(all_proper.witness->omitted == 3);

  CHECK(check_smcb(4, SetFamily(4, {sub({1, 2}, 4), sub({3, 4}, 4)}), 2)
            .holds);

  const McbVerdict two = check_smcb(
      6, SetFamily(6, {sub({1, 2, 3}, 6), sub({4, 5}, 6), sub({5, 6}, 6)}),
      2);
  CHECK_FALSE(two.holds);
  CHECK(two.witness->flats.members ==
        std::vector<Subset>{sub({1, 2, 3}, 6), sub({4, 5}, 6)});
  CHECK(two.witness->omitted == 6);

  CHECK_THROWS_AS(check_smcb(3, SetFamily(3, {full_set(3)}), 1), InputError);
}

TEST_CASE("failure is monotone in the degree") {
  for (const auto& [name, m] : small_corpus()) {
    if (m.size() > 8) continue;
    CAPTURE(name);
    bool failed = false;
    for (int degree = 1; degree <= 4; ++degree) {
      const McbVerdict v = check_mcb(m, degree);
      if (failed) CHECK_FALSE(v.holds);
      if (!v.holds) {
        failed = true;
        check_witness_valid(m, v);
      }
    }
  }
}

TEST_CASE("check_smcb over the proper flats agrees with check_mcb") {
  for (const auto& [name, m] : small_corpus()) {
    if (m.size() > 8) continue;
    CAPTURE(name);
    for (int degree = 1; degree <= 3; ++degree) {
      const McbVerdict direct = check_mcb(m, degree);
      const McbVerdict via_sets =
          check_smcb(m.size(), m.proper_flats(), degree);
      CHECK(direct.holds == via_sets.holds);
      if (!direct.holds) {
        CHECK(direct.witness->flats.members ==
              via_sets.witness->flats.members);
        CHECK(direct.witness->omitted == via_sets.witness->omitted);
      }
    }
  }
}

TEST_CASE("pruned search equals the naive reference") {
  for (const auto& [name, m] : small_corpus()) {
    if (m.size() > 7) continue;
    CAPTURE(name);
    for (int degree = 1; degree <= 3; ++degree) {
      const McbVerdict pruned = check_mcb(m, degree);
      const auto naive = reference::mcb_search_naive(
          m.size(), m.proper_flats().members, degree, kDefaultSearchBudget);
      CHECK(pruned.holds == !naive.has_value());
      if (naive) {
        CHECK(pruned.witness->flats.members == naive->tuple);
        CHECK(pruned.witness->omitted == naive->omitted);
      }
    }
  }
}

TEST_CASE("near-covers under the size bound use hyperplanes only") {
  // Paving matroids from the generators, desk scale.
  std::vector<Matroid> pavings = {
      nobd_paving({12, 6, 2}),
      nobd_paving({8, 4, 1}),
      nobd_paving({12, 4, 1}),
      nobd_paving({12, 6, 1}),
      pavexmp_paving(8, 4),
  };
  {
    NegPavingParams params;
    params.n = 8;
    params.m = 3;
    params.a = sub({1, 2, 3}, 8);
    pavings.push_back(neg_paving(params).matroid);
  }
  for (const Matroid& m : pavings) {
    REQUIRE(m.is_paving());
    int size_bound = 0;
    for (Subset f : m.proper_flats().members)
      size_bound = std::max(size_bound, set_size(f));
    for (int degree = 1; degree <= 4; ++degree) {
      if (!hyperplane_bound_applies(m.size(), size_bound, degree, m.rank()))
        continue;
      CAPTURE(m.size());
      CAPTURE(degree);
      CHECK_FALSE(non_hyperplane_in_near_cover(m, degree).has_value());
    }
  }
}

TEST_CASE("witnesses of failing paving checks are hyperplanes when bounded") {
  // End-to-end reading of the reduction: any witness found under the bound
  // consists of hyperplanes.
  const Matroid m = nobd_paving({12, 6, 2});
  int size_bound = 0;
  for (Subset f : m.proper_flats().members)
    size_bound = std::max(size_bound, set_size(f));
  for (int degree = 1; degree <= 3; ++degree) {
    if (!hyperplane_bound_applies(m.size(), size_bound, degree, m.rank()))
      continue;
    const McbVerdict v = check_mcb(m, degree);
    if (v.holds) continue;
    for (Subset f : v.witness->flats.members)
      CHECK(m.rank_of(f) == m.rank() - 1);
  }
}

TEST_CASE("cover profiles") {
  const Matroid u23 = uniform(2, 3);
  const auto singleton_cover = cover_profiles(u23, 3, true);
  REQUIRE(singleton_cover.size() == 1);
  CHECK(singleton_cover[0].ranks == std::vector<int>{1, 1, 1});
  CHECK(singleton_cover[0].total_rank == 3);

  const auto improper = cover_profiles(u23, 1, false);
  REQUIRE(improper.size() == 1);
  CHECK(improper[0].flats.members == std::vector<Subset>{full_set(3)});
  CHECK(improper[0].total_rank == 2);

  const auto nobd_profiles = cover_profiles(nobd_paving({12, 6, 2}), 2, true);
  REQUIRE(nobd_profiles.size() == 1);
  CHECK(nobd_profiles[0].ranks == std::vector<int>{2, 2});
}

TEST_CASE("cover profile members always keep a private element") {
  for (const auto& [name, m] : small_corpus()) {
    if (m.size() > 6) continue;
    CAPTURE(name);
    for (const CoverProfile& p : cover_profiles(m, 3, true)) {
      CHECK(p.flats.union_of_members() == full_set(m.size()));
      for (std::size_t i = 0; i < p.flats.members.size(); ++i) {
        Subset others = 0;
        for (std::size_t j = 0; j < p.flats.members.size(); ++j)
          if (j != i) others |= p.flats.members[j];
        CHECK((p.flats.members[i] & ~others) != 0);
      }
    }
  }
}

TEST_CASE("minimum total rank of proper covers") {
  const Matroid u23 = uniform(2, 3);
  CHECK(min_total_rank_cover(u23, 3) == 3);
  CHECK_FALSE(min_total_rank_cover(u23, 2).has_value());
  CHECK(min_total_rank_cover(nobd_paving({12, 6, 2}), 2) == 4);
}

TEST_CASE("search budget aborts with a scope error") {
  const Matroid big = uniform(4, 8);
  CHECK_THROWS_AS(check_mcb(big, 4, true, /*budget=*/100), ScopeError);
}

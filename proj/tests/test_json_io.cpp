#include <doctest.h>

#include <json.hpp>

#include "mcb/error.hpp"
#include "mcb/json_io.hpp"

using namespace mcb;
using nlohmann::json;

TEST_CASE("matroid kinds parse to the same object") {
  const json uniform_doc = {{"n", 3}, {"repr", {{"kind", "uniform"}, {"r", 2}}}};
  const json bases_doc = {
      {"n", 3},
      {"repr",
       {{"kind", "bases"}, {"bases", {{1, 2}, {1, 3}, {2, 3}}}}}};
  CHECK(matroid_from_json(uniform_doc) == matroid_from_json(bases_doc));

  const json paving_doc = {
      {"n", 3},
      {"repr",
       {{"kind", "hyperplanes_paving"},
        {"m", 1},
        {"blocks", {{1}, {2}, {3}}}}}};
  CHECK(matroid_from_json(paving_doc) == uniform(2, 3));

  const json graph_doc = {
      {"n", 3},
      {"repr",
       {{"kind", "graph"},
        {"V", 3},
        {"edges", {{1, 2}, {2, 3}, {1, 3}}}}}};
  CHECK(matroid_from_json(graph_doc) == cycle_matroid(Graph::cycle(3)));

  const json sum_doc = {
      {"n", 4},
      {"repr",
       {{"kind", "direct_sum"},
        {"parts",
         {{{"n", 2}, {"repr", {{"kind", "uniform"}, {"r", 1}}}},
          {{"n", 2}, {"repr", {{"kind", "uniform"}, {"r", 1}}}}}}}}};
  CHECK(matroid_from_json(sum_doc) ==
        direct_sum({uniform(1, 2), uniform(1, 2)}));
}

TEST_CASE("serialization is canonical and byte-stable") {
  const json doc = {{"n", 3}, {"repr", {{"kind", "uniform"}, {"r", 2}}}};
  const Matroid m = matroid_from_json(doc);
  const std::string once = matroid_to_json(m).dump();
  const std::string twice =
      matroid_to_json(matroid_from_json(json::parse(once))).dump();
  CHECK(once == twice);
  // Members sorted lexicographically by element sequence.
  CHECK(once ==
        R"({"n":3,"repr":{"bases":[[1,2],[1,3],[2,3]],"kind":"bases"}})");
}

TEST_CASE("set families and graphs round-trip") {
  const SetFamily family(4, {subset_from_elements({3, 1}, 4),
                             subset_from_elements({2}, 4)});
  const json j = set_family_to_json(family);
  CHECK(j.dump() == R"({"members":[[1,3],[2]],"n":4})");
  CHECK(set_family_from_json(j).members ==
        std::vector<Subset>{subset_from_elements({1, 3}, 4),
                            subset_from_elements({2}, 4)});

  const Graph g(3, {{1, 2}, {2, 3}});
  const json gj = graph_to_json(g);
  const Graph back = graph_from_json(gj);
  CHECK(back.vertex_count == 3);
  CHECK(back.edges == g.edges);
}

TEST_CASE("malformed documents raise input errors") {
  CHECK_THROWS_AS(matroid_from_json(json::parse("[]")), InputError);
  CHECK_THROWS_AS(matroid_from_json(json::parse(R"({"n": 3})")), InputError);
  CHECK_THROWS_AS(
      matroid_from_json(json::parse(
          R"({"n": 3, "repr": {"kind": "nonsense"}})")),
      InputError);
  CHECK_THROWS_AS(
      matroid_from_json(json::parse(
          R"({"n": 2, "repr": {"kind": "bases", "bases": [[1, 5]]}})")),
      InputError);
  CHECK_THROWS_AS(
      matroid_from_json(json::parse(
          R"({"n": 17, "repr": {"kind": "uniform", "r": 1}})")),
      InputError);
}

#pragma once

#include <string>

#include <json.hpp>

#include "mcb/graph.hpp"
#include "mcb/matroid.hpp"
#include "mcb/set_family.hpp"

namespace mcb {

// Matroid wire format:
//   {"n": int, "repr": {"kind": "bases", "bases": [[1,2],...]}}
// with alternative kinds "hyperplanes_paving" {"m", "blocks"},
// "graph" {"V", "edges"}, "uniform" {"r"} and "direct_sum" {"parts":
// [matroid, ...]}. Subsets are sorted 1-based arrays. Serialization is
// canonical: always the "bases" kind, members sorted lexicographically, so
// parse -> serialize is byte-stable.
Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json matroid_to_json(const Matroid& m);

// {"n": int, "members": [[...], ...]}
SetFamily set_family_from_json(const nlohmann::json& j);
nlohmann::json set_family_to_json(const SetFamily& family);

// {"V": int, "edges": [[u,v], ...]}; edge labels are list positions, 1-based.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

nlohmann::json subset_to_json(Subset s);
Subset subset_from_json(const nlohmann::json& j, int n);

}  // namespace mcb

#include "mcb/json_io.hpp"

#include <algorithm>

#include "mcb/error.hpp"

namespace mcb {
namespace {

using nlohmann::json;

int require_int(const json& j, const char* key, int lo, int hi) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw InputError(std::string("missing integer field \"") + key + "\"");
  const int v = j[key].get<int>();
  if (v < lo || v > hi)
    throw InputError(std::string("field \"") + key + "\" = " +
                     std::to_string(v) + " outside [" + std::to_string(lo) +
                     ", " + std::to_string(hi) + "]");
  return v;
}

std::vector<Subset> subsets_from_json(const json& j, const char* key, int n) {
  if (!j.contains(key) || !j[key].is_array())
    throw InputError(std::string("missing array field \"") + key + "\"");
  std::vector<Subset> out;
  for (const json& item : j[key]) out.push_back(subset_from_json(item, n));
  return out;
}

}  // namespace

json subset_to_json(Subset s) {
  json out = json::array();
  for (int e : elements_of(s)) out.push_back(e);
  return out;
}

Subset subset_from_json(const json& j, int n) {
  if (!j.is_array()) throw InputError("subset must be an array of labels");
  std::vector<int> elements;
  for (const json& item : j) {
    if (!item.is_number_integer())
      throw InputError("subset entries must be integers");
    elements.push_back(item.get<int>());
  }
  return subset_from_elements(elements, n);
}

Matroid matroid_from_json(const json& j) {
  if (!j.is_object()) throw InputError("matroid document must be an object");
  const json& repr = j.contains("repr") ? j["repr"] : json();
  if (!repr.is_object())
    throw InputError("matroid document needs a \"repr\" object");
  if (!repr.contains("kind") || !repr["kind"].is_string())
    throw InputError("matroid repr needs a string \"kind\"");
  const std::string kind = repr["kind"].get<std::string>();

  if (kind == "direct_sum") {
    if (!repr.contains("parts") || !repr["parts"].is_array() ||
        repr["parts"].empty())
      throw InputError("direct_sum repr needs a nonempty \"parts\" array");
    std::vector<Matroid> parts;
    for (const json& part : repr["parts"])
      parts.push_back(matroid_from_json(part));
    return direct_sum(parts);
  }

  const int n = require_int(j, "n", 1, kMaxGroundSize);
  if (kind == "bases")
    return Matroid::from_bases(n, subsets_from_json(repr, "bases", n));
  if (kind == "hyperplanes_paving") {
    const int m = require_int(repr, "m", 1, kMaxGroundSize);
    return from_m_partition(
        n, SetFamily(n, subsets_from_json(repr, "blocks", n)), m);
  }
  if (kind == "uniform") return uniform(require_int(repr, "r", 0, n), n);
  if (kind == "graph") {
    const int vertices = require_int(repr, "V", 1, 64);
    if (!repr.contains("edges") || !repr["edges"].is_array())
      throw InputError("graph repr needs an \"edges\" array");
    std::vector<std::pair<int, int>> edges;
    for (const json& e : repr["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw InputError("each edge must be a [u, v] pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(vertices, std::move(edges));
    if (static_cast<int>(g.edges.size()) != n)
      throw InputError("edge count does not match n");
    return cycle_matroid(g);
  }
  throw InputError("unknown matroid kind \"" + kind + "\"");
}

json matroid_to_json(const Matroid& m) {
  std::vector<Subset> sorted = m.bases();
  std::sort(sorted.begin(), sorted.end(), SubsetLexLess{});
  json bases = json::array();
  for (Subset b : sorted) bases.push_back(subset_to_json(b));
  return json{{"n", m.size()},
              {"repr", json{{"kind", "bases"}, {"bases", std::move(bases)}}}};
}

SetFamily set_family_from_json(const json& j) {
  if (!j.is_object()) throw InputError("set family must be an object");
  const int n = require_int(j, "n", 1, kMaxGroundSize);
  return SetFamily(n, subsets_from_json(j, "members", n));
}

json set_family_to_json(const SetFamily& family) {
  SetFamily sorted = family;
  sorted.sort_lex();
  json members = json::array();
  for (Subset s : sorted.members) members.push_back(subset_to_json(s));
  return json{{"n", family.n}, {"members", std::move(members)}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph must be an object");
  const int vertices = require_int(j, "V", 1, 64);
  if (!j.contains("edges") || !j["edges"].is_array())
    throw InputError("graph needs an \"edges\" array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("each edge must be a [u, v] pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(vertices, std::move(edges));
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  return json{{"V", g.vertex_count}, {"edges", std::move(edges)}};
}

}  // namespace mcb

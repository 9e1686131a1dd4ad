// Command-line front end: exact matroidal Cayley-Bacharach checks,
// counterexample generators, polytope decompositions, cover counting and
// the graph machinery, all with deterministic JSON output.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcb/constructions.hpp"
#include "mcb/covers.hpp"
#include "mcb/error.hpp"
#include "mcb/graphs_ops.hpp"
#include "mcb/json_io.hpp"
#include "mcb/matroid.hpp"
#include "mcb/mcb_check.hpp"
#include "mcb/polytope.hpp"
#include "mcb/version.hpp"

namespace {

using nlohmann::json;
using namespace mcb;

struct Options {
  std::string format = "json";
  std::uint64_t budget = kDefaultSearchBudget;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

json load_json(Options& options, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  options.inputs.emplace_back(path, "fnv1a64:" + fnv1a64(bytes));
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

json rational_to_json(const Rational& value) {
  return json{{"numerator", value.num()}, {"denominator", value.den()}};
}

json verdict_to_json(const McbVerdict& verdict, std::uint64_t budget) {
  json out{{"holds", verdict.holds},
           {"stats",
            {{"candidates", verdict.candidates},
             {"nodes", verdict.nodes},
             {"budget", budget}}}};
  if (verdict.witness) {
    json flats = json::array();
    for (Subset f : verdict.witness->flats.members)
      flats.push_back(subset_to_json(f));
    out["witness"] = {{"flats", std::move(flats)},
                      {"omitted", verdict.witness->omitted}};
  }
  json warnings = json::array();
  if (!verdict.simple_rank1)
    warnings.push_back("matroid has a rank-1 flat larger than a singleton");
  out["warnings"] = std::move(warnings);
  return out;
}

json profiles_to_json(const std::vector<CoverProfile>& profiles) {
  json out = json::array();
  for (const CoverProfile& p : profiles) {
    json flats = json::array();
    for (Subset f : p.flats.members) flats.push_back(subset_to_json(f));
    out.push_back(json{{"flats", std::move(flats)},
                       {"ranks", p.ranks},
                       {"total_rank", p.total_rank}});
  }
  return out;
}

json decomp_to_json(const MinkDecomp& decomp) {
  json terms = json::array();
  for (Subset i = 1; i < (Subset{1} << decomp.n); ++i)
    if (!decomp.y[i].is_zero())
      terms.push_back(json{{"subset", subset_to_json(i)},
                           {"numerator", decomp.y[i].num()},
                           {"denominator", decomp.y[i].den()}});
  return json{{"convention", decomp.convention == ZConvention::kSpanAsStated
                                 ? "span_as_stated"
                                 : "complement_span"},
              {"generic", is_generic(decomp)},
              {"y", std::move(terms)}};
}

Subset parse_labels(const std::string& csv, int n) {
  std::vector<int> labels;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    try {
      labels.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("cannot parse label '" + item + "'");
    }
  }
  return subset_from_elements(labels, n);
}

void flatten(const json& value, const std::string& prefix,
             std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items())
      flatten(child, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array()) {
    std::size_t index = 0;
    for (const json& child : value)
      flatten(child, prefix + "[" + std::to_string(index++) + "]", out);
    if (value.empty()) out << prefix << " = []\n";
  } else {
    out << prefix << " = " << value.dump() << "\n";
  }
}

void emit(const Options& options, const std::string& command, json payload,
          const std::optional<std::string>& out_path = std::nullopt) {
  payload["schema"] = std::string(kSchemaPrefix) + "-" + command + "/1";
  payload["version"] = kVersion;
  payload["command"] = command;
  json inputs = json::array();
  for (const auto& [path, digest] : options.inputs)
    inputs.push_back(json{{"path", path}, {"digest", digest}});
  payload["inputs"] = std::move(inputs);

  std::string text;
  if (options.format == "table") {
    std::ostringstream table;
    flatten(payload, "", table);
    text = table.str();
  } else {
    text = payload.dump() + "\n";
  }
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + *out_path);
    out << text;
  } else {
    std::cout << text;
  }
}

json matroid_with_provenance(const Matroid& m, const std::string& generator,
                             json params, json claims) {
  json doc = matroid_to_json(m);
  doc["provenance"] = json{{"generator", generator},
                           {"params", std::move(params)},
                           {"claims", std::move(claims)}};
  return doc;
}

int dispatch(int argc, char** argv) {
  Options options;

  CLI::App app{"Exact matroid toolkit for Cayley-Bacharach style checks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.require_subcommand(1);

  if (const char* env = std::getenv("MCB_BUDGET")) {
    try {
      options.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("MCB_BUDGET must be an unsigned integer");
    }
  }

  // check
  std::string matroid_path, other_path, graph_path, family_path, out_path;
  int degree = 1, k_max = 1, k_param = 1, r_param = 1;
  bool allow_improper = false;
  auto* check = app.add_subcommand("check", "Decide the degree-a check");
  check->add_option("--matroid", matroid_path, "Matroid JSON file")
      ->required();
  check->add_option("--degree", degree, "Number of flats in a tuple")
      ->required();
  check->add_flag("--allow-improper", allow_improper,
                  "Let the ground set itself join the tuples");
  check->callback([&] {
    const Matroid m = matroid_from_json(load_json(options, matroid_path));
    emit(options, "check",
         verdict_to_json(check_mcb(m, degree, !allow_improper,
                                   options.budget),
                         options.budget));
  });

  // profile
  auto* profile =
      app.add_subcommand("profile", "Minimal covers by at most k flats");
  profile->add_option("--matroid", matroid_path, "Matroid JSON file")
      ->required();
  profile->add_option("--k", k_max, "Maximum number of flats")->required();
  profile->add_flag("--allow-improper", allow_improper,
                    "Let the ground set itself join the covers");
  profile->callback([&] {
    const Matroid m = matroid_from_json(load_json(options, matroid_path));
    const auto profiles = cover_profiles(m, k_max, !allow_improper);
    emit(options, "profile",
         json{{"profiles", profiles_to_json(profiles)},
              {"count", profiles.size()}});
  });

  // construct
  auto* construct =
      app.add_subcommand("construct", "Generate the named matroid families");
  construct->require_subcommand(1);
  int param_n = 0, param_b = 0, param_m = 0;
  std::string labels_a, type2_csv;
  auto* nobd = construct->add_subcommand(
      "nobd", "Blocks plus crossing m-subsets, rank m+1");
  nobd->add_option("--n", param_n)->required();
  nobd->add_option("--B", param_b)->required();
  nobd->add_option("--m", param_m)->required();
  nobd->add_option("-o,--out", out_path, "Write the matroid here");
  nobd->callback([&] {
    const NobdParams params{param_n, param_b, param_m};
    const Matroid m = nobd_paving(params);
    emit(options, "construct",
         matroid_with_provenance(
             m, "nobd",
             json{{"n", param_n}, {"B", param_b}, {"m", param_m}},
             json{{"degree_bound", params.degree_bound()},
                  {"holds_up_to_degree_bound", true},
                  {"covers_up_to_bound_use_hyperplanes_only", true}}),
         out_path.empty() ? std::nullopt
                          : std::optional<std::string>(out_path));
  });
  auto* pavexmp = construct->add_subcommand(
      "pavexmp", "Rank-3 blocks-plus-pairs family");
  pavexmp->add_option("--n", param_n)->required();
  pavexmp->add_option("--B", param_b)->required();
  pavexmp->add_option("-o,--out", out_path, "Write the matroid here");
  pavexmp->callback([&] {
    const Matroid m = pavexmp_paving(param_n, param_b);
    const Rational bound = pavexmp_degree_bound(param_n, param_b);
    emit(options, "construct",
         matroid_with_provenance(
             m, "pavexmp", json{{"n", param_n}, {"B", param_b}},
             json{{"degree_bound", bound.to_string()},
                  {"holds_up_to_degree_bound", true}}),
         out_path.empty() ? std::nullopt
                          : std::optional<std::string>(out_path));
  });
  auto* negpaving = construct->add_subcommand(
      "negpaving", "Family that fails the check at a known degree");
  negpaving->add_option("--n", param_n)->required();
  negpaving->add_option("--m", param_m)->required();
  negpaving->add_option("--A", labels_a, "Distinguished hyperplane, labels")
      ->required();
  negpaving->add_option("--type2", type2_csv,
                        "Optional ';'-separated blocks outside A");
  negpaving->add_option("-o,--out", out_path, "Write the matroid here");
  negpaving->callback([&] {
    NegPavingParams params;
    params.n = param_n;
    params.m = param_m;
    params.a = parse_labels(labels_a, param_n);
    if (!type2_csv.empty()) {
      std::vector<Subset> blocks;
      std::stringstream stream(type2_csv);
      std::string block;
      while (std::getline(stream, block, ';'))
        blocks.push_back(parse_labels(block, param_n));
      params.type2_blocks = SetFamily(param_n, std::move(blocks));
    }
    const NegPaving neg = neg_paving(params);
    json witness = json::array();
    for (Subset s : neg.witness_family.members)
      witness.push_back(subset_to_json(s));
    emit(options, "construct",
         matroid_with_provenance(
             neg.matroid, "negpaving",
             json{{"n", param_n},
                  {"m", param_m},
                  {"A", subset_to_json(params.a)}},
             json{{"fails_at_degree", neg.witness_size},
                  {"witness_family", std::move(witness)},
                  {"omitted", neg.omitted}}),
         out_path.empty() ? std::nullopt
                          : std::optional<std::string>(out_path));
  });

  // polytope
  auto* polytope = app.add_subcommand("polytope", "Matroid polytope tools");
  polytope->require_subcommand(1);
  auto* decompose_cmd = polytope->add_subcommand(
      "decompose", "Signed simplex decomposition, oracle-certified");
  decompose_cmd->add_option("--matroid", matroid_path)->required();
  decompose_cmd->callback([&] {
    const Matroid m = matroid_from_json(load_json(options, matroid_path));
    emit(options, "polytope-decompose", decomp_to_json(decompose(m)));
  });
  auto* flacets_cmd =
      polytope->add_subcommand("flacets", "Facet-defining flats");
  flacets_cmd->add_option("--matroid", matroid_path)->required();
  flacets_cmd->callback([&] {
    const Matroid m = matroid_from_json(load_json(options, matroid_path));
    json out = json::array();
    for (Subset f : flacets(m).members) out.push_back(subset_to_json(f));
    emit(options, "polytope-flacets", json{{"flacets", std::move(out)}});
  });
  auto* facets_cmd = polytope->add_subcommand(
      "facets", "Facet inequalities of a generic decomposition");
  facets_cmd->add_option("--matroid", matroid_path)->required();
  facets_cmd->callback([&] {
    const Matroid m = matroid_from_json(load_json(options, matroid_path));
    json out = json::array();
    for (const FacetInequality& f : facet_inequalities(decompose(m)))
      out.push_back(json{{"subset", subset_to_json(f.support)},
                         {"bound", rational_to_json(f.bound)}});
    emit(options, "polytope-facets", json{{"inequalities", std::move(out)}});
  });
  auto* fan_eq = polytope->add_subcommand(
      "fan-eq", "Whether two matroid polytopes share their normal fan");
  fan_eq->add_option("--matroid", matroid_path)->required();
  fan_eq->add_option("--other", other_path)->required();
  fan_eq->callback([&] {
    const Matroid m = matroid_from_json(load_json(options, matroid_path));
    const Matroid other = matroid_from_json(load_json(options, other_path));
    emit(options, "polytope-fan-eq",
         json{{"equivalent", normal_fan_equivalent(m, other)}});
  });

  // covers
  auto* covers = app.add_subcommand("covers", "Minimal cover counting");
  covers->require_subcommand(1);
  int cover_a = 1, cover_b = 1;
  std::string mode = "both";
  std::optional<int> ambient_n;
  auto* count = covers->add_subcommand("count", "Count minimal covers");
  count->add_option("--a", cover_a, "Size of the covered set")->required();
  count->add_option("--b", cover_b, "Number of covering subsets")->required();
  count->add_option("--mode", mode, "oracle, recursion or both")
      ->check(CLI::IsMember({"oracle", "recursion", "both"}))
      ->capture_default_str();
  count->add_option("--ambient-n", ambient_n,
                    "Evaluate the recursion exponent with this ambient size");
  count->callback([&] {
    json out{{"a", cover_a}, {"b", cover_b}};
    if (mode != "oracle")
      out["recursion"] =
          count_covers_recursion(cover_a, cover_b, ambient_n).to_string();
    if (mode != "recursion")
      out["oracle"] =
          count_minimal_covers_oracle(cover_a, cover_b, options.budget)
              .to_string();
    if (mode == "both") out["agree"] = out["recursion"] == out["oracle"];
    emit(options, "covers-count", std::move(out));
  });
  auto* disjoint =
      covers->add_subcommand("disjoint", "Ordered partitions into r blocks");
  disjoint->add_option("--a", cover_a)->required();
  disjoint->add_option("--r", r_param)->required();
  disjoint->callback([&] {
    emit(options, "covers-disjoint",
         json{{"a", cover_a},
              {"r", r_param},
              {"count", count_disjoint_covers(cover_a, r_param).to_string()}});
  });

  // graph
  auto* graph = app.add_subcommand("graph", "Graphic matroid machinery");
  graph->require_subcommand(1);
  std::string edges_csv, reading = "strict";
  auto* kcirc = graph->add_subcommand("kcircuits", "k-circuits of the cycle "
                                                   "matroid");
  kcirc->add_option("--graph", graph_path)->required();
  kcirc->add_option("--k", k_param)->required();
  kcirc->add_option("--reading", reading)
      ->check(CLI::IsMember({"strict", "relaxed"}))
      ->capture_default_str();
  kcirc->callback([&] {
    const Matroid m =
        cycle_matroid(graph_from_json(load_json(options, graph_path)));
    json out = json::array();
    for (Subset s : k_circuits(m, k_param,
                               reading == "strict"
                                   ? CircuitReading::kStrict
                                   : CircuitReading::kRelaxed)
                        .members)
      out.push_back(subset_to_json(s));
    emit(options, "graph-kcircuits", json{{"circuits", std::move(out)}});
  });
  auto* sumgraphic = graph->add_subcommand(
      "sumgraphic", "Disjointness of k-circuits under both readings");
  sumgraphic->add_option("--graph", graph_path)->required();
  sumgraphic->add_option("--k", k_param)->required();
  sumgraphic->callback([&] {
    const Matroid m =
        cycle_matroid(graph_from_json(load_json(options, graph_path)));
    json out;
    for (const auto& [name, circuit_reading] :
         {std::pair<const char*, CircuitReading>{"strict",
                                                 CircuitReading::kStrict},
          {"relaxed", CircuitReading::kRelaxed}}) {
      const DisjointnessVerdict v =
          direct_sum_graphic(m, k_param, circuit_reading);
      json entry{{"disjoint", v.disjoint}};
      if (v.overlap)
        entry["overlap"] = json::array({subset_to_json(v.overlap->first),
                                        subset_to_json(v.overlap->second)});
      out[name] = std::move(entry);
    }
    emit(options, "graph-sumgraphic", std::move(out));
  });
  auto* twoconn = graph->add_subcommand(
      "twoconn", "Edge-wise 2-connectivity of an edge subset");
  twoconn->add_option("--graph", graph_path)->required();
  twoconn->add_option("--edges", edges_csv, "Edge labels, comma separated")
      ->required();
  twoconn->callback([&] {
    const Graph g = graph_from_json(load_json(options, graph_path));
    const Subset edges =
        parse_labels(edges_csv, static_cast<int>(g.edges.size()));
    emit(options, "graph-twoconn",
         json{{"two_connected", induced_two_connected(g, edges)}});
  });
  auto* dirgraph = graph->add_subcommand(
      "dirgraph-check", "Degree-r check vs 2-connectivity over partitions");
  dirgraph->add_option("--graph", graph_path)->required();
  dirgraph->add_option("--r", r_param)->required();
  dirgraph->callback([&] {
    const Graph g = graph_from_json(load_json(options, graph_path));
    const DirgraphReport rep = check_dirgraph_equivalence(g, r_param);
    emit(options, "graph-dirgraph-check",
         json{{"r_circuits_disjoint",
               {{"strict", rep.r_circuits_disjoint_strict},
                {"relaxed", rep.r_circuits_disjoint_relaxed}}},
              {"minimal_tuples",
               {{"internally_disjoint",
                 rep.minimal_tuples_internally_disjoint},
                {"share_no_flat", rep.minimal_tuples_share_no_flat}}},
              {"mcb_holds", rep.mcb_holds},
              {"all_assignments_two_connected",
               rep.all_assignments_two_connected},
              {"sides_equal", rep.sides_equal},
              {"asserted", rep.asserted}});
  });
  auto* digraph_cmd = graph->add_subcommand(
      "digraph", "Implication digraph of a set family");
  int ground_size = 0;
  digraph_cmd->add_option("--n", ground_size)->required();
  digraph_cmd->add_option("--family", family_path)->required();
  digraph_cmd->callback([&] {
    const SetFamily family =
        set_family_from_json(load_json(options, family_path));
    if (family.n != ground_size)
      throw InputError("family ground size does not match --n");
    const Digraph d = mcb_digraph(ground_size, family);
    json edges = json::array();
    for (int v = 1; v <= d.vertex_count; ++v)
      for (int w : d.out[v - 1]) edges.push_back(json::array({v, w}));
    emit(options, "graph-digraph",
         json{{"V", d.vertex_count}, {"edges", std::move(edges)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = dispatch(argc, argv);
  } catch (const InputError& e) {
    std::cout << json{{"schema", std::string(kSchemaPrefix) + "-error/1"},
                      {"error", {{"kind", "input"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    code = 2;
  } catch (const ConventionMismatch& e) {
    json error{{"kind", "convention-mismatch"}, {"message", e.what()}};
    error["span_as_stated"] = decomp_to_json(e.stated_candidate);
    error["complement_span"] = decomp_to_json(e.complement_candidate);
    std::cout << json{{"schema", std::string(kSchemaPrefix) + "-error/1"},
                      {"error", std::move(error)}}
                     .dump()
              << "\n";
    code = 3;
  } catch (const ScopeError& e) {
    std::cout << json{{"schema", std::string(kSchemaPrefix) + "-error/1"},
                      {"error", {{"kind", "scope"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    code = 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    code = 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  // Timing stays on stderr so stdout is byte-stable run to run.
  std::cerr << "wall_time_ms=" << elapsed.count() << "\n";
  return code;
}

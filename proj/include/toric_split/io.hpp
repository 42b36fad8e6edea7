#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toric_split/decomposition.hpp"
#include "toric_split/errors.hpp"
#include "toric_split/f2_lambda.hpp"
#include "toric_split/graph_assoc.hpp"
#include "toric_split/simplicial.hpp"

// JSON formats. Vertices and nodes are 1-based on the wire.
//   complex: {"m": int, "facets": [[int, ...], ...]}
//   lambda:  {"n": int, "m": int, "rows": [[0|1, ...], ...]}
//   graph:   {"nodes": int, "edges": [[int, int], ...], "distinguished": int?}
//   Betti:   {"first_degree": int, "values": [int, ...]}

namespace toric_split::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

namespace detail {

template <class T>
T require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + " JSON needs a \"" + key + "\" field");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + " field \"" + key + "\" has the wrong type: " + e.what());
  }
}

inline json subset_to_json(VertexSubset s) {
  json a = json::array();
  for (int v : s.elements()) a.push_back(v + 1);
  return a;
}

inline VertexSubset subset_from_json(const json& j, int bound, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " entries must be arrays");
  VertexSubset s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " labels must be integers");
    int label = v.get<int>();
    if (label < 1 || label > bound) {
      throw InputError(std::string(what) + " label " + std::to_string(label) + " outside [1, " +
                       std::to_string(bound) + "]");
    }
    s = s.with(label - 1);
  }
  return s;
}

}  // namespace detail

inline SimplicialComplex complex_from_json(const json& j) {
  const int m = detail::require<int>(j, "m", "complex");
  if (m < 0 || m > SimplicialComplex::kMaxVertices) {
    throw InputError("complex vertex count " + std::to_string(m) + " out of range");
  }
  const auto facets_json = detail::require<json>(j, "facets", "complex");
  if (!facets_json.is_array()) throw InputError("complex \"facets\" must be an array");
  std::vector<VertexSubset> facets;
  for (const auto& f : facets_json) facets.push_back(detail::subset_from_json(f, m, "facet"));
  return SimplicialComplex::from_facets(m, facets);
}

inline json complex_to_json(const SimplicialComplex& k) {
  json facets = json::array();
  for (auto f : k.facets()) {
    if (!f.empty()) facets.push_back(detail::subset_to_json(f));
  }
  return {{"m", k.vertex_count()}, {"facets", facets}};
}

inline LambdaMap lambda_from_json(const json& j) {
  const int n = detail::require<int>(j, "n", "lambda");
  const int m = detail::require<int>(j, "m", "lambda");
  const auto rows = detail::require<std::vector<std::vector<int>>>(j, "rows", "lambda");
  if (static_cast<int>(rows.size()) != n) {
    throw InputError("lambda declares n = " + std::to_string(n) + " but lists " +
                     std::to_string(rows.size()) + " rows");
  }
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m) {
      throw InputError("lambda row has " + std::to_string(r.size()) + " entries, expected m = " +
                       std::to_string(m));
    }
  }
  if (n == 0) return LambdaMap(0, m, {});
  return LambdaMap::from_matrix(rows);
}

inline json lambda_to_json(const LambdaMap& l) {
  json rows = json::array();
  for (auto r : l.rows()) {
    json row = json::array();
    for (int i = 0; i < l.vertex_count(); ++i) row.push_back(r.contains(i) ? 1 : 0);
    rows.push_back(row);
  }
  return {{"n", l.target_rank()}, {"m", l.vertex_count()}, {"rows", rows}};
}

inline SimpleGraph graph_from_json(const json& j) {
  const int nodes = detail::require<int>(j, "nodes", "graph");
  const auto edges_json = detail::require<std::vector<std::vector<int>>>(j, "edges", "graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : edges_json) {
    if (e.size() != 2) throw InputError("graph edges must have exactly two endpoints");
    edges.emplace_back(e[0] - 1, e[1] - 1);
  }
  std::optional<int> distinguished;
  if (j.contains("distinguished") && !j.at("distinguished").is_null()) {
    distinguished = detail::require<int>(j, "distinguished", "graph") - 1;
  }
  return SimpleGraph(nodes, edges, distinguished);
}

inline json graph_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return {{"nodes", g.node_count()}, {"edges", edges}, {"distinguished", g.distinguished() + 1}};
}

inline json betti_to_json(const BettiNumbers& b, int first_degree = 0) {
  const int lo = std::min(first_degree, b.min_degree());
  const int hi = std::max(lo, b.max_degree());
  return {{"first_degree", lo}, {"values", b.to_vector(lo, hi)}};
}

inline BettiNumbers betti_from_json(const json& j) {
  const int first = detail::require<int>(j, "first_degree", "Betti table");
  const auto values = detail::require<std::vector<std::size_t>>(j, "values", "Betti table");
  return BettiNumbers::from_vector(values, first);
}

inline json report_to_json(const MainReport& r) {
  json j = {{"kind", "verify"},
            {"m", r.m},
            {"n", r.n},
            {"p", r.p},
            {"kernel_order", r.kernel_order},
            {"row_space_size", r.row_space_size},
            {"characteristic", r.characteristic},
            {"cells", r.cells},
            {"orbit_cells", r.orbit_cells},
            {"quotient_betti", betti_to_json(r.quotient)},
            {"invariant_betti", r.invariant ? betti_to_json(*r.invariant) : json(nullptr)},
            {"rhs_betti", betti_to_json(r.rhs)},
            {"verdict", to_string(r.verdict)},
            {"seconds", r.seconds}};
  return j;
}

inline MainReport main_report_from_json(const json& j) {
  MainReport r;
  r.m = detail::require<int>(j, "m", "report");
  r.n = detail::require<int>(j, "n", "report");
  r.p = detail::require<std::uint32_t>(j, "p", "report");
  r.kernel_order = detail::require<std::size_t>(j, "kernel_order", "report");
  r.row_space_size = detail::require<std::size_t>(j, "row_space_size", "report");
  r.characteristic = detail::require<bool>(j, "characteristic", "report");
  r.cells = detail::require<std::size_t>(j, "cells", "report");
  r.orbit_cells = detail::require<std::size_t>(j, "orbit_cells", "report");
  r.quotient = betti_from_json(j.at("quotient_betti"));
  if (!j.at("invariant_betti").is_null()) r.invariant = betti_from_json(j.at("invariant_betti"));
  r.rhs = betti_from_json(j.at("rhs_betti"));
  r.verdict = verdict_from_string(detail::require<std::string>(j, "verdict", "report"));
  r.seconds = detail::require<double>(j, "seconds", "report");
  return r;
}

inline json report_to_json(const BbcgReport& r) {
  return {{"kind", "bbcg"},
          {"p", r.p},
          {"rzk_betti", betti_to_json(r.lhs)},
          {"splitting_betti", betti_to_json(r.rhs)},
          {"verdict", to_string(r.verdict)}};
}

inline BbcgReport bbcg_report_from_json(const json& j) {
  BbcgReport r;
  r.p = detail::require<std::uint32_t>(j, "p", "report");
  r.lhs = betti_from_json(j.at("rzk_betti"));
  r.rhs = betti_from_json(j.at("splitting_betti"));
  r.verdict = verdict_from_string(detail::require<std::string>(j, "verdict", "report"));
  return r;
}

inline json report_to_json(const GraphReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) {
    summands.push_back({{"coordinates", detail::subset_to_json(s.coordinate_nodes)},
                        {"row_element", detail::subset_to_json(s.row_element)},
                        {"phi", detail::subset_to_json(s.even_subgraph)},
                        {"a_number", s.a_number},
                        {"expected_degree", s.expected_degree},
                        {"reduced_betti", betti_to_json(s.reduced, -1)},
                        {"ok", s.ok}});
  }
  return {{"kind", "graph-verify"},
          {"p", r.p},
          {"nodes", r.nodes},
          {"tubes", r.tube_count},
          {"f_vector", r.f_vector},
          {"characteristic", r.characteristic},
          {"row_space_bijective", r.row_space_bijective},
          {"kernel_order", r.kernel_order},
          {"cells", r.cells},
          {"orbit_cells", r.orbit_cells},
          {"a_numbers", r.a_numbers},
          {"summands", summands},
          {"quotient_betti", betti_to_json(r.quotient)},
          {"rhs_betti", betti_to_json(r.rhs)},
          {"summands_ok", r.summands_ok},
          {"betti_matches_a", r.betti_matches_a},
          {"rhs_matches_quotient", r.rhs_matches_quotient},
          {"verdict", to_string(r.verdict)},
          {"seconds", r.seconds}};
}

inline json comparison_to_json(const GraphComparison& c) {
  auto spheres = [](const std::map<int, std::size_t>& s) {
    json j = json::object();
    for (const auto& [d, n] : s) j["S" + std::to_string(d)] = n;
    return j;
  };
  return {{"kind", "graph-compare"},
          {"first_a_numbers", c.first_a},
          {"second_a_numbers", c.second_a},
          {"first_summands", spheres(c.first_spheres)},
          {"second_summands", spheres(c.second_spheres)},
          {"verdict", c.equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT"}};
}

}  // namespace toric_split::io

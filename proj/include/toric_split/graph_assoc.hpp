#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric_split/decomposition.hpp"
#include "toric_split/errors.hpp"
#include "toric_split/f2_lambda.hpp"
#include "toric_split/rzk.hpp"
#include "toric_split/simplicial.hpp"

// Graph associahedra: the boundary complex of P_G is the flag complex of
// pairwise compatible tubes, and lambda_G is a characteristic map on it.

namespace toric_split {

/// Connected simple graph on nodes 0..N-1 with one distinguished node that
/// plays the role of n+1 in lambda_G (by default the highest label).
class SimpleGraph {
 public:
  static constexpr int kMaxNodes = 16;

  SimpleGraph(int nodes, const std::vector<std::pair<int, int>>& edges,
              std::optional<int> distinguished = std::nullopt)
      : nodes_(nodes), adjacency_(static_cast<std::size_t>(std::max(nodes, 0))) {
    if (nodes < 1 || nodes > kMaxNodes) {
      throw InputError("graph must have between 1 and " + std::to_string(kMaxNodes) + " nodes");
    }
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= nodes || b >= nodes) {
        throw InputError("edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                         "} has a node outside [" + std::to_string(nodes) + "]");
      }
      if (a == b) throw InputError("loop at node " + std::to_string(a + 1));
      if (adjacency_[a].contains(b)) {
        throw InputError("repeated edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
      }
      adjacency_[a] = adjacency_[a].with(b);
      adjacency_[b] = adjacency_[b].with(a);
    }
    distinguished_ = distinguished.value_or(nodes - 1);
    if (distinguished_ < 0 || distinguished_ >= nodes) {
      throw InputError("distinguished node outside the node set");
    }
    if (!is_connected(all_nodes())) throw InputError("graph is disconnected");
  }

  static SimpleGraph path(int nodes) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < nodes; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(nodes, e);
  }

  /// Star K_{1,leaves}; the center is node 0.
  static SimpleGraph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return SimpleGraph(leaves + 1, e);
  }

  static SimpleGraph complete(int nodes) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < nodes; ++i) {
      for (int j = i + 1; j < nodes; ++j) e.emplace_back(i, j);
    }
    return SimpleGraph(nodes, e);
  }

  int node_count() const { return nodes_; }
  int distinguished() const { return distinguished_; }
  VertexSubset all_nodes() const { return VertexSubset::full(nodes_); }
  VertexSubset neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < nodes_; ++a) {
      for (int b : neighbours(a).elements()) {
        if (a < b) e.emplace_back(a, b);
      }
    }
    return e;
  }

  /// Node sets of the connected components of G|_subset.
  std::vector<VertexSubset> components(VertexSubset subset) const {
    std::vector<VertexSubset> out;
    VertexSubset left = subset;
    while (!left.empty()) {
      VertexSubset comp = VertexSubset::of({left.lowest()});
      VertexSubset frontier = comp;
      while (!frontier.empty()) {
        VertexSubset next;
        for (int v : frontier.elements()) next = next | (neighbours(v) & subset);
        frontier = next - comp;
        comp = comp | next;
      }
      out.push_back(comp);
      left = left - comp;
    }
    return out;
  }

  bool is_connected(VertexSubset subset) const { return components(subset).size() <= 1; }

  bool adjacent(VertexSubset a, VertexSubset b) const {
    for (int v : a.elements()) {
      if (neighbours(v).intersects(b)) return true;
    }
    return false;
  }

 private:
  int nodes_;
  int distinguished_ = 0;
  std::vector<VertexSubset> adjacency_;
};

/// Proper nonempty node set inducing a connected subgraph.
struct Tube {
  VertexSubset nodes;

  friend bool operator==(const Tube&, const Tube&) = default;
};

/// All tubes, ordered by size and then by node bitmask.
inline std::vector<Tube> tubes(const SimpleGraph& g) {
  std::vector<Tube> out;
  const std::uint32_t all = g.all_nodes().bits();
  for (std::uint32_t s = 1; s < all; ++s) {
    if (g.is_connected(VertexSubset(s))) out.push_back({VertexSubset(s)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Tube& a, const Tube& b) {
    return a.nodes.size() != b.nodes.size() ? a.nodes.size() < b.nodes.size()
                                            : a.nodes < b.nodes;
  });
  return out;
}

/// Distinct tubes are compatible when nested, or disjoint with no edge
/// between them.
inline bool compatible(const SimpleGraph& g, const Tube& a, const Tube& b) {
  if (a.nodes.is_subset_of(b.nodes) || b.nodes.is_subset_of(a.nodes)) return true;
  return !a.nodes.intersects(b.nodes) && !g.adjacent(a.nodes, b.nodes);
}

namespace detail {

inline void maximal_cliques(const std::vector<VertexSubset>& adj, VertexSubset r, VertexSubset p,
                            VertexSubset x, std::vector<VertexSubset>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const int pivot = (p | x).lowest();
  for (int v : (p - adj[static_cast<std::size_t>(pivot)]).elements()) {
    maximal_cliques(adj, r.with(v), p & adj[static_cast<std::size_t>(v)],
                    x & adj[static_cast<std::size_t>(v)], out);
    p = p.without(v);
    x = x.with(v);
  }
}

}  // namespace detail

/// Boundary complex of P_G on the vertex set tubes(g): faces are tubings.
inline SimplicialComplex build_tubing_complex(const SimpleGraph& g) {
  const auto ts = tubes(g);
  const int m = static_cast<int>(ts.size());
  if (m > SimplicialComplex::kMaxVertices) {
    throw CapacityError("graph has " + std::to_string(m) + " tubes; at most " +
                        std::to_string(SimplicialComplex::kMaxVertices) + " are supported");
  }
  std::vector<VertexSubset> adj(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && compatible(g, ts[i], ts[j])) adj[i] = adj[i].with(j);
    }
  }
  std::vector<VertexSubset> facets;
  detail::maximal_cliques(adj, VertexSubset(), VertexSubset::full(m), VertexSubset(), facets);
  return SimplicialComplex::from_facets(m, facets);
}

/// Coordinate index of each node in F_2^n; the distinguished node has none.
inline std::vector<int> lambda_coordinates(const SimpleGraph& g) {
  std::vector<int> coord(static_cast<std::size_t>(g.node_count()), -1);
  int next = 0;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v != g.distinguished()) coord[static_cast<std::size_t>(v)] = next++;
  }
  return coord;
}

/// lambda_G(T) = sum_{t in T} e_t if T avoids the distinguished node,
/// otherwise sum_{t not in T} e_t.
inline LambdaMap lambda_g(const SimpleGraph& g) {
  const auto ts = tubes(g);
  const auto coord = lambda_coordinates(g);
  const int n = g.node_count() - 1;
  std::vector<VertexSubset> rows(static_cast<std::size_t>(n));
  for (int j = 0; j < static_cast<int>(ts.size()); ++j) {
    const VertexSubset support =
        ts[j].nodes.contains(g.distinguished()) ? g.all_nodes() - ts[j].nodes : ts[j].nodes;
    for (int v : support.elements()) {
      const auto r = static_cast<std::size_t>(coord[static_cast<std::size_t>(v)]);
      rows[r] = rows[r].with(j);
    }
  }
  return LambdaMap(n, static_cast<int>(ts.size()), std::move(rows));
}

/// Memoized signed a-numbers sa(G|_T) over the subset lattice of one graph.
class ANumberTable {
 public:
  explicit ANumberTable(const SimpleGraph& g)
      : g_(g), memo_(std::size_t{1} << g.node_count()) {}

  long long sa(VertexSubset nodes) const {
    auto& slot = memo_[nodes.bits()];
    if (slot) return *slot;
    long long value;
    if (nodes.empty()) {
      value = 1;
    } else if (has_odd_component(nodes)) {
      value = 0;
    } else {
      long long sum = 0;
      // Every proper subset, including the empty one.
      for (std::uint32_t t = (nodes.bits() - 1) & nodes.bits();; t = (t - 1) & nodes.bits()) {
        sum += sa(VertexSubset(t));
        if (t == 0) break;
      }
      value = -sum;
    }
    slot = value;
    return value;
  }

  long long a(VertexSubset nodes) const { return std::llabs(sa(nodes)); }

  const SimpleGraph& graph() const { return g_; }

 private:
  bool has_odd_component(VertexSubset nodes) const {
    for (auto c : g_.components(nodes)) {
      if (c.size() % 2 == 1) return true;
    }
    return false;
  }

  SimpleGraph g_;
  mutable std::vector<std::optional<long long>> memo_;
};

inline long long sa(const SimpleGraph& g, VertexSubset nodes) { return ANumberTable(g).sa(nodes); }

/// a_i(G) = sum over |T| = 2i of a(G|_T), for 0 <= i <= |V|/2.
inline std::vector<long long> a_numbers(const SimpleGraph& g) {
  ANumberTable table(g);
  std::vector<long long> out(static_cast<std::size_t>(g.node_count() / 2 + 1), 0);
  const std::uint32_t all = g.all_nodes().bits();
  for (std::uint32_t t = 0; t <= all; ++t) {
    const VertexSubset s(t);
    if (s.size() % 2 == 0) out[static_cast<std::size_t>(s.size() / 2)] += table.a(s);
  }
  return out;
}

/// Parity completion: a set S of coordinate nodes goes to S when |S| is even
/// and to S plus the distinguished node otherwise.
inline VertexSubset phi_map(const SimpleGraph& g, VertexSubset coordinate_nodes) {
  if (coordinate_nodes.contains(g.distinguished())) {
    throw InputError("phi_map takes a subset of the non-distinguished nodes");
  }
  return coordinate_nodes.size() % 2 == 0 ? coordinate_nodes
                                          : coordinate_nodes.with(g.distinguished());
}

/// Sum of the lambda_G rows indexed by the coordinate nodes in S, as a set of
/// tube indices.
inline VertexSubset row_combination(const SimpleGraph& g, const LambdaMap& l,
                                    VertexSubset coordinate_nodes) {
  const auto coord = lambda_coordinates(g);
  VertexSubset out;
  for (int v : coordinate_nodes.elements()) {
    out = out ^ l.rows()[static_cast<std::size_t>(coord[static_cast<std::size_t>(v)])];
  }
  return out;
}

struct SummandCheck {
  VertexSubset coordinate_nodes;  // S
  VertexSubset row_element;       // I, a set of tube indices
  VertexSubset even_subgraph;     // phi(I)
  long long a_number = 0;
  int expected_degree = 0;        // |phi(I)|/2 - 1
  BettiNumbers reduced;           // b~(K_I)
  bool ok = false;
};

struct GraphReport {
  std::uint32_t p = 0;
  int nodes = 0;
  std::size_t tube_count = 0;
  std::vector<std::size_t> f_vector;
  bool characteristic = false;
  bool row_space_bijective = false;
  std::size_t kernel_order = 0;
  std::size_t cells = 0;
  std::size_t orbit_cells = 0;
  std::vector<long long> a_numbers;
  std::vector<SummandCheck> summands;
  BettiNumbers quotient;
  BettiNumbers rhs;
  bool summands_ok = false;
  bool betti_matches_a = false;
  bool rhs_matches_quotient = false;
  Verdict verdict = Verdict::Fail;
  double seconds = 0;
};

/// Multiset of sphere dimensions in the splitting of the suspension:
/// each b~_q(K_I) contributes that many copies of S^{q+2}.
inline std::map<int, std::size_t> summand_spheres(const std::vector<SummandCheck>& summands) {
  std::map<int, std::size_t> spheres;
  for (const auto& s : summands) {
    for (const auto& [q, b] : s.reduced.table()) spheres[q + 2] += b;
  }
  return spheres;
}

/// Per-summand homology of K_I for every Row(lambda_G) element, phi
/// bijectivity, and the Betti table of M(G) over F_p.
inline std::vector<SummandCheck> graph_summands(const SimpleGraph& g, const SimplicialComplex& k,
                                                const LambdaMap& l, const Field& field) {
  ANumberTable table(g);
  std::vector<SummandCheck> out;
  const VertexSubset coordinate_nodes = g.all_nodes().without(g.distinguished());
  for (std::uint32_t s = coordinate_nodes.bits();; s = (s - 1) & coordinate_nodes.bits()) {
    SummandCheck c;
    c.coordinate_nodes = VertexSubset(s);
    c.row_element = row_combination(g, l, c.coordinate_nodes);
    c.even_subgraph = phi_map(g, c.coordinate_nodes);
    c.a_number = table.a(c.even_subgraph);
    c.expected_degree = c.even_subgraph.size() / 2 - 1;
    c.reduced = reduced_betti(k.full_subcomplex(c.row_element), field);
    BettiNumbers expected;
    expected.set(c.expected_degree, static_cast<std::size_t>(c.a_number));
    c.ok = c.reduced == expected;
    out.push_back(std::move(c));
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline GraphReport verify_graph_splitting(const SimpleGraph& g, std::uint32_t p,
                                          const CellLimits& limits = CellLimits::from_environment()) {
  const auto start = std::chrono::steady_clock::now();
  const Field field = Field::from_characteristic(p);
  GraphReport r;
  r.p = p;
  r.nodes = g.node_count();
  const auto k = build_tubing_complex(g);
  const auto l = lambda_g(g);
  r.tube_count = static_cast<std::size_t>(k.vertex_count());
  r.f_vector = k.f_vector();
  r.characteristic = is_characteristic(l, k);
  r.a_numbers = a_numbers(g);

  r.summands = graph_summands(g, k, l, field);
  std::vector<VertexSubset> rows_seen, even_seen;
  for (const auto& s : r.summands) {
    rows_seen.push_back(s.row_element);
    even_seen.push_back(s.even_subgraph);
  }
  std::sort(rows_seen.begin(), rows_seen.end());
  std::sort(even_seen.begin(), even_seen.end());
  r.row_space_bijective = rows_seen == row_space(l) &&
                          std::adjacent_find(even_seen.begin(), even_seen.end()) == even_seen.end();
  r.summands_ok = std::all_of(r.summands.begin(), r.summands.end(),
                              [](const SummandCheck& s) { return s.ok; });

  const auto kernel = kernel_elements(l);
  r.kernel_order = kernel.size();
  QuotientComplex quotient(k, kernel, limits);
  r.cells = quotient.cell_count();
  r.orbit_cells = quotient.orbit_count();
  r.quotient = quotient.betti(field);
  r.rhs = rhs_betti(k, l, field);

  BettiNumbers from_a;
  for (std::size_t i = 0; i < r.a_numbers.size(); ++i) {
    from_a.set(static_cast<int>(i), static_cast<std::size_t>(r.a_numbers[i]));
  }
  r.betti_matches_a = r.quotient == from_a;
  r.rhs_matches_quotient = r.rhs == r.quotient;
  const bool pass = r.characteristic && r.row_space_bijective && r.summands_ok &&
                    r.betti_matches_a && r.rhs_matches_quotient;
  r.verdict = pass ? Verdict::Pass : Verdict::Fail;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct GraphComparison {
  std::vector<long long> first_a, second_a;
  std::map<int, std::size_t> first_spheres, second_spheres;
  bool equivalent = false;
};

/// Equal a_i tables and equal multisets of wedge summands imply
/// Sigma M(G1) and Sigma M(G2) agree after inverting 2.
inline GraphComparison compare_graphs(const SimpleGraph& a, const SimpleGraph& b, std::uint32_t p) {
  const Field field = Field::from_characteristic(p);
  GraphComparison c;
  c.first_a = a_numbers(a);
  c.second_a = a_numbers(b);
  c.first_spheres = summand_spheres(graph_summands(a, build_tubing_complex(a), lambda_g(a), field));
  c.second_spheres = summand_spheres(graph_summands(b, build_tubing_complex(b), lambda_g(b), field));
  c.equivalent = c.first_a == c.second_a && c.first_spheres == c.second_spheres;
  return c;
}

}  // namespace toric_split

#pragma once

// Deterministic generators for property tests. Everything is driven by an
// explicit seed so failures replay exactly.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "toric_split/toric_split.hpp"

namespace testgen {

using namespace toric_split;

/// Seed for randomized suites; TORIC_SPLIT_SEED overrides the default.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("TORIC_SPLIT_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240611;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::uint32_t bits(int width) {
    return width == 0 ? 0u
                      : static_cast<std::uint32_t>(engine_()) & ((width >= 32) ? ~0u : ((1u << width) - 1u));
  }
  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

/// Every simplicial complex on the vertex set [m] (ghost vertices allowed):
/// the nonempty down-closed families of subsets. Counts 2, 5, 19, 167 for
/// m = 1..4.
inline std::vector<SimplicialComplex> all_complexes(int m) {
  const std::uint32_t n = 1u << m;
  std::vector<std::uint32_t> order;
  for (std::uint32_t s = 1; s < n; ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<SimplicialComplex> out;
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<VertexSubset> chosen;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      out.push_back(SimplicialComplex::from_facets(m, chosen));
      return;
    }
    const std::uint32_t s = order[pos];
    self(self, pos + 1);
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const std::uint32_t face = s & ~(rest & -rest);
      if (!in[face]) return;
    }
    in[s] = true;
    chosen.emplace_back(s);
    self(self, pos + 1);
    chosen.pop_back();
    in[s] = false;
  };
  rec(rec, 0);
  return out;
}

/// Random complex generated by a handful of random facets.
inline SimplicialComplex random_complex(Rng& rng, int m) {
  std::vector<VertexSubset> facets;
  const int count = rng.uniform(0, m + 2);
  for (int i = 0; i < count; ++i) {
    VertexSubset f(rng.bits(m));
    while (f.size() > 3) f = f.without(f.lowest());
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(m, facets);
}

inline LambdaMap random_lambda(Rng& rng, int n, int m) {
  std::vector<VertexSubset> rows;
  for (int i = 0; i < n; ++i) rows.emplace_back(rng.bits(m));
  return LambdaMap(n, m, rows);
}

/// One lambda per subspace of F_2^m, given by the echelon basis as rows.
/// Every pipeline depends on lambda only through Row(lambda).
inline std::vector<LambdaMap> lambdas_by_row_space(int m) {
  std::vector<std::vector<std::uint32_t>> seen;
  std::vector<LambdaMap> out;
  // Reduced echelon bases are canonical, so enumerate subsets of vectors
  // greedily: every subspace is spanned by at most m vectors.
  std::vector<std::uint32_t> all;
  for (std::uint32_t v = 1; v < (1u << m); ++v) all.push_back(v);
  auto rec = [&](auto&& self, std::size_t start, std::vector<std::uint32_t>& picked) -> void {
    auto basis = f2::echelon_basis(picked);
    if (std::find(seen.begin(), seen.end(), basis) == seen.end()) {
      seen.push_back(basis);
      std::vector<VertexSubset> rows;
      for (auto b : basis) rows.emplace_back(b);
      out.emplace_back(static_cast<int>(rows.size()), m, rows);
    }
    if (static_cast<int>(picked.size()) == m) return;
    for (std::size_t i = start; i < all.size(); ++i) {
      if (f2::rank(picked) == f2::rank([&] {
            auto t = picked;
            t.push_back(all[i]);
            return t;
          }())) {
        continue;
      }
      picked.push_back(all[i]);
      self(self, i + 1, picked);
      picked.pop_back();
    }
  };
  std::vector<std::uint32_t> picked;
  rec(rec, 0, picked);
  return out;
}

/// Random element of R_K with small integer coefficients.
inline DgaElement random_dga_element(Rng& rng, const CaiAlgebra& alg, int max_terms = 4) {
  std::vector<Monomial> pool;
  for (int q = 0; q <= alg.top_degree(); ++q) {
    auto b = alg.basis(q);
    pool.insert(pool.end(), b.begin(), b.end());
  }
  DgaElement x;
  const int terms = rng.uniform(1, max_terms);
  for (int i = 0; i < terms; ++i) {
    const auto& m = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))];
    x.add_term(m, Rational(static_cast<long>(rng.integer(-3, 3))));
  }
  return x;
}

/// Random connected graph: a random spanning tree plus extra edges.
inline SimpleGraph random_connected_graph(Rng& rng, int nodes) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> used(nodes, std::vector<bool>(nodes, false));
  for (int v = 1; v < nodes; ++v) {
    const int u = rng.uniform(0, v - 1);
    edges.emplace_back(u, v);
    used[u][v] = used[v][u] = true;
  }
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      if (!used[a][b] && rng.coin(0.25)) edges.emplace_back(a, b);
    }
  }
  return SimpleGraph(nodes, edges);
}

}  // namespace testgen

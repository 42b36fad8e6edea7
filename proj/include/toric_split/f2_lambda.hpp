#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "toric_split/errors.hpp"
#include "toric_split/simplicial.hpp"

namespace toric_split {

namespace f2 {

/// Echelon basis of the F_2-span of `vectors` (distinct lowest set bits).
inline std::vector<std::uint32_t> echelon_basis(const std::vector<std::uint32_t>& vectors) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t v : vectors) {
    for (std::uint32_t b : basis) {
      if (v & (b & -b)) v ^= b;
    }
    if (v == 0) continue;
    // Keep every stored vector free of the new pivot.
    const std::uint32_t pivot = v & -v;
    for (auto& b : basis) {
      if (b & pivot) b ^= v;
    }
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return basis;
}

inline int rank(const std::vector<std::uint32_t>& vectors) {
  return static_cast<int>(echelon_basis(vectors).size());
}

/// All 2^k combinations of a basis, ascending.
inline std::vector<std::uint32_t> span(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t b : basis) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool dot(std::uint32_t a, std::uint32_t b) { return std::popcount(a & b) & 1; }

}  // namespace f2

/// A linear map F_2^m -> F_2^n given by its n x m matrix. Row r is stored as
/// the subset of [m] where it is 1; column i is lambda(i).
class LambdaMap {
 public:
  LambdaMap(int n, int m, std::vector<VertexSubset> rows) : n_(n), m_(m), rows_(std::move(rows)) {
    if (n < 0 || m < 0 || m > VertexSubset::kMaxBits || n > VertexSubset::kMaxBits) {
      throw InputError("lambda dimensions out of range: n=" + std::to_string(n) +
                       " m=" + std::to_string(m));
    }
    if (static_cast<int>(rows_.size()) != n) {
      throw InputError("lambda has " + std::to_string(rows_.size()) + " rows, expected " +
                       std::to_string(n));
    }
    for (auto r : rows_) {
      if (!r.is_subset_of(VertexSubset::full(m))) throw InputError("lambda row exceeds m columns");
    }
  }

  /// Dense 0/1 rows.
  static LambdaMap from_matrix(const std::vector<std::vector<int>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    const int m = n == 0 ? 0 : static_cast<int>(matrix.front().size());
    std::vector<VertexSubset> rows;
    for (const auto& row : matrix) {
      if (static_cast<int>(row.size()) != m) throw InputError("ragged lambda matrix");
      VertexSubset r;
      for (int i = 0; i < m; ++i) {
        if (row[i] != 0 && row[i] != 1) throw InputError("lambda entries must be 0 or 1");
        if (row[i]) r = r.with(i);
      }
      rows.push_back(r);
    }
    return LambdaMap(n, m, std::move(rows));
  }

  static LambdaMap identity(int m) {
    std::vector<VertexSubset> rows;
    for (int i = 0; i < m; ++i) rows.push_back(VertexSubset::of({i}));
    return LambdaMap(m, m, std::move(rows));
  }

  static LambdaMap zero(int n, int m) { return LambdaMap(n, m, std::vector<VertexSubset>(n)); }

  int target_rank() const { return n_; }
  int vertex_count() const { return m_; }
  const std::vector<VertexSubset>& rows() const { return rows_; }

  /// lambda(i) as an n-bit mask.
  std::uint32_t column(int i) const {
    std::uint32_t c = 0;
    for (int r = 0; r < n_; ++r) {
      if (rows_[r].contains(i)) c |= 1u << r;
    }
    return c;
  }

  int rank() const { return f2::rank(row_bits()); }

  std::vector<std::uint32_t> row_bits() const {
    std::vector<std::uint32_t> v;
    for (auto r : rows_) v.push_back(r.bits());
    return v;
  }

  friend bool operator==(const LambdaMap&, const LambdaMap&) = default;

 private:
  int n_;
  int m_;
  std::vector<VertexSubset> rows_;
};

/// Every g with lambda g = 0, as supp(g), ascending; 2^(m - rank) of them.
inline std::vector<VertexSubset> kernel_elements(const LambdaMap& l) {
  // Row-reduce, then one kernel vector per free column.
  auto basis = f2::echelon_basis(l.row_bits());
  std::uint32_t pivots = 0;
  for (auto b : basis) pivots |= b & -b;
  std::vector<std::uint32_t> kernel_basis;
  for (int f = 0; f < l.vertex_count(); ++f) {
    if (pivots >> f & 1u) continue;
    std::uint32_t g = 1u << f;
    for (auto b : basis) {
      if (b >> f & 1u) g |= b & -b;
    }
    kernel_basis.push_back(g);
  }
  std::vector<VertexSubset> out;
  for (auto g : f2::span(kernel_basis)) out.emplace_back(g);
  return out;
}

/// Row(lambda): the F_2-span of the rows as subsets of [m], ascending.
inline std::vector<VertexSubset> row_space(const LambdaMap& l) {
  std::vector<VertexSubset> out;
  for (auto v : f2::span(f2::echelon_basis(l.row_bits()))) out.emplace_back(v);
  return out;
}

/// Columns lambda(i), i in sigma, are linearly independent for every face
/// sigma; checking facets suffices.
inline bool is_characteristic(const LambdaMap& l, const SimplicialComplex& k) {
  for (auto facet : k.facets()) {
    std::vector<std::uint32_t> cols;
    for (int i : facet.elements()) {
      if (i >= l.vertex_count()) throw InputError("complex has more vertices than lambda columns");
      cols.push_back(l.column(i));
    }
    if (f2::rank(cols) != facet.size()) return false;
  }
  return true;
}

/// Nonzero kernel elements whose support is a face: exactly the group
/// elements with a fixed point on the real moment-angle complex.
inline std::vector<VertexSubset> free_action_violations(const LambdaMap& l,
                                                        const SimplicialComplex& k) {
  std::vector<VertexSubset> out;
  for (auto g : kernel_elements(l)) {
    if (!g.empty() && k.contains(g)) out.push_back(g);
  }
  return out;
}

}  // namespace toric_split

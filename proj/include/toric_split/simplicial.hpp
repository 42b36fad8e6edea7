#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric_split/errors.hpp"
#include "toric_split/exact_linalg.hpp"

namespace toric_split {

/// A subset of the vertex set [m], stored as a bitmask. Vertex indices are
/// 0-based in the library; the JSON formats and printed output are 1-based.
class VertexSubset {
 public:
  static constexpr int kMaxBits = 32;

  constexpr VertexSubset() = default;
  constexpr explicit VertexSubset(std::uint32_t bits) : bits_(bits) {}

  static VertexSubset of(std::initializer_list<int> vertices) {
    VertexSubset s;
    for (int v : vertices) s = s.with(v);
    return s;
  }
  static constexpr VertexSubset full(int m) {
    return VertexSubset(m >= 32 ? ~0u : ((1u << m) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(VertexSubset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSubset o) const { return (bits_ & o.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr VertexSubset with(int v) const { return VertexSubset(bits_ | (1u << v)); }
  constexpr VertexSubset without(int v) const { return VertexSubset(bits_ & ~(1u << v)); }

  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ | b.bits_);
  }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ & b.bits_);
  }
  friend constexpr VertexSubset operator^(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ ^ b.bits_);
  }
  friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) {
    return VertexSubset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSubset, VertexSubset) = default;
  friend constexpr auto operator<=>(VertexSubset a, VertexSubset b) { return a.bits_ <=> b.bits_; }

  /// Ascending 0-based members.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Number of members strictly below `v`.
  constexpr int count_below(int v) const { return std::popcount(bits_ & ((1u << v) - 1u)); }

  /// "{1,3}" with 1-based labels.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : elements()) {
      if (!first) s += ",";
      s += std::to_string(v + 1);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

struct VertexSubsetHash {
  std::size_t operator()(VertexSubset s) const { return std::hash<std::uint32_t>{}(s.bits()); }
};

/// Downward-closed family of subsets of [m] containing the empty face.
/// Indices i with {i} not a face are ghost vertices.
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 24;

  /// The complex {∅} on m (ghost) vertices.
  explicit SimplicialComplex(int m = 0) : m_(m) {
    check_vertex_count(m);
    membership_.assign(std::size_t{1} << m, false);
    membership_[0] = true;
    rebuild_lists();
  }

  static SimplicialComplex from_facets(int m, const std::vector<VertexSubset>& facets) {
    SimplicialComplex k(m);
    const VertexSubset all = VertexSubset::full(m);
    for (auto f : facets) {
      if (!f.is_subset_of(all)) {
        throw InputError("facet " + f.to_string() + " is not a subset of [" + std::to_string(m) +
                         "]");
      }
      if (k.membership_[f.bits()]) continue;
      for (std::uint32_t sub = f.bits();; sub = (sub - 1) & f.bits()) {
        k.membership_[sub] = true;
        if (sub == 0) break;
      }
    }
    k.rebuild_lists();
    return k;
  }

  int vertex_count() const { return m_; }

  bool contains(VertexSubset s) const {
    return s.is_subset_of(VertexSubset::full(m_)) && membership_[s.bits()];
  }

  /// All faces ordered by size, then by bitmask.
  const std::vector<VertexSubset>& faces() const { return faces_; }
  const std::vector<VertexSubset>& facets() const { return facets_; }

  /// Faces with exactly `size` vertices, i.e. of dimension size - 1.
  std::vector<VertexSubset> faces_of_size(int size) const {
    std::vector<VertexSubset> out;
    for (auto f : faces_) {
      if (f.size() == size) out.push_back(f);
    }
    return out;
  }

  /// -1 for {∅}.
  int dimension() const { return faces_.back().size() - 1; }

  /// f[k] = number of faces with k vertices, k = 0..dim+1 (f[0] = 1 for ∅).
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 2), 0);
    for (auto s : faces_) ++f[static_cast<std::size_t>(s.size())];
    return f;
  }

  VertexSubset vertices() const {
    VertexSubset v;
    for (int i = 0; i < m_; ++i) {
      if (membership_[1u << i]) v = v.with(i);
    }
    return v;
  }

  std::vector<int> ghost_vertices() const {
    std::vector<int> g;
    for (int i = 0; i < m_; ++i) {
      if (!membership_[1u << i]) g.push_back(i);
    }
    return g;
  }

  /// K_I: the faces of K contained in I, on the same ambient index set.
  SimplicialComplex full_subcomplex(VertexSubset subset) const {
    SimplicialComplex k(m_);
    for (auto f : faces_) {
      if (f.is_subset_of(subset)) k.membership_[f.bits()] = true;
    }
    k.rebuild_lists();
    return k;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.membership_ == b.membership_;
  }

 private:
  static void check_vertex_count(int m) {
    if (m < 0 || m > kMaxVertices) {
      throw CapacityError("vertex count " + std::to_string(m) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
    }
  }

  void rebuild_lists() {
    faces_.clear();
    facets_.clear();
    for (std::uint32_t b = 0; b < membership_.size(); ++b) {
      if (membership_[b]) faces_.emplace_back(b);
    }
    std::sort(faces_.begin(), faces_.end(), [](VertexSubset a, VertexSubset b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto f : faces_) {
      bool maximal = true;
      for (int i = 0; i < m_ && maximal; ++i) {
        if (!f.contains(i) && membership_[f.with(i).bits()]) maximal = false;
      }
      if (maximal) facets_.push_back(f);
    }
  }

  int m_ = 0;
  std::vector<bool> membership_;
  std::vector<VertexSubset> faces_;
  std::vector<VertexSubset> facets_;
};

/// Augmented simplicial chain complex in degrees -1..dim with
/// d[v_0..v_q] = sum_k (-1)^k [v_0..^v_k..v_q] on sorted vertex lists.
inline GradedChainComplex reduced_chain_complex(const SimplicialComplex& k) {
  const int top = k.dimension();
  std::vector<std::vector<VertexSubset>> basis(static_cast<std::size_t>(top + 2));
  for (auto f : k.faces()) basis[static_cast<std::size_t>(f.size())].push_back(f);

  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> index(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    for (std::uint32_t i = 0; i < basis[s].size(); ++i) index[s][basis[s][i].bits()] = i;
  }

  std::vector<std::size_t> dims;
  for (const auto& b : basis) dims.push_back(b.size());

  std::map<int, SparseMatrix> boundaries;
  for (std::size_t s = 1; s < basis.size(); ++s) {
    std::vector<MatrixEntry> e;
    for (std::uint32_t col = 0; col < basis[s].size(); ++col) {
      auto verts = basis[s][col].elements();
      for (std::size_t pos = 0; pos < verts.size(); ++pos) {
        auto face = basis[s][col].without(verts[pos]);
        e.push_back({index[s - 1].at(face.bits()), col, pos % 2 == 0 ? 1 : -1});
      }
    }
    const int q = static_cast<int>(s) - 1;
    boundaries.emplace(q, SparseMatrix(dims[s - 1], dims[s], std::move(e)));
  }
  return GradedChainComplex(-1, std::move(dims), std::move(boundaries));
}

/// Reduced Betti numbers of |K|; {∅} gives b~_{-1} = 1.
inline BettiNumbers reduced_betti(const SimplicialComplex& k, const Field& field) {
  return betti_numbers(reduced_chain_complex(k), field);
}

}  // namespace toric_split

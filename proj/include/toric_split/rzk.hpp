#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toric_split/errors.hpp"
#include "toric_split/exact_linalg.hpp"
#include "toric_split/f2_lambda.hpp"
#include "toric_split/simplicial.hpp"

// Cellular model of the real moment-angle complex (D^1, S^0)^K with every
// interval factor subdivided at 1/2, so that a group element fixing a cell
// setwise fixes it pointwise and orbit cells form a CW structure on the
// quotient.

namespace toric_split {

/// One factor of a product cell: {0}, {1}, {1/2}, [0,1/2] or [1/2,1].
enum class Factor : std::uint8_t { P0 = 0, P1 = 1, PH = 2, L = 3, U = 4 };

inline char factor_symbol(Factor f) {
  switch (f) {
    case Factor::P0: return '0';
    case Factor::P1: return '1';
    case Factor::PH: return 'h';
    case Factor::L: return 'L';
    case Factor::U: return 'U';
  }
  return '?';
}

/// Product cell in [0,1]^m. Coordinates absent from every mask carry P0.
class CubeCell {
 public:
  static constexpr int kMaxCoordinates = 20;

  CubeCell() = default;

  static CubeCell from_factors(const std::vector<Factor>& factors) {
    CubeCell c;
    for (int i = 0; i < static_cast<int>(factors.size()); ++i) c = c.with(i, factors[i]);
    return c;
  }

  Factor factor(int i) const {
    if (one_.contains(i)) return Factor::P1;
    if (half_.contains(i)) return Factor::PH;
    if (lower_.contains(i)) return Factor::L;
    if (upper_.contains(i)) return Factor::U;
    return Factor::P0;
  }

  CubeCell with(int i, Factor f) const {
    CubeCell c = *this;
    c.one_ = c.one_.without(i);
    c.half_ = c.half_.without(i);
    c.lower_ = c.lower_.without(i);
    c.upper_ = c.upper_.without(i);
    switch (f) {
      case Factor::P0: break;
      case Factor::P1: c.one_ = c.one_.with(i); break;
      case Factor::PH: c.half_ = c.half_.with(i); break;
      case Factor::L: c.lower_ = c.lower_.with(i); break;
      case Factor::U: c.upper_ = c.upper_.with(i); break;
    }
    return c;
  }

  int dim() const { return intervals().size(); }
  /// Coordinates not pinned to S^0; the cell lies in RZ_K iff this is a face.
  VertexSubset support() const { return half_ | lower_ | upper_; }
  VertexSubset intervals() const { return lower_ | upper_; }
  VertexSubset midpoints() const { return half_; }
  /// Coordinates whose factor a flip changes, given the ambient dimension.
  VertexSubset movable(int m) const { return VertexSubset::full(m) - half_; }
  /// 1 where the factor is the upper member of its flip pair (P1 or U).
  VertexSubset upper_bits() const { return one_ | upper_; }

  /// Base-8 code with coordinate 0 most significant: integer order is the
  /// lexicographic order of factor lists.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    auto put = [&k](VertexSubset s, std::uint64_t code) {
      for (int i : s.elements()) k |= code << (3 * (kMaxCoordinates - 1 - i));
    };
    put(one_, 1);
    put(half_, 2);
    put(lower_, 3);
    put(upper_, 4);
    return k;
  }

  std::string to_string(int m) const {
    std::string s;
    for (int i = 0; i < m; ++i) s += factor_symbol(factor(i));
    return s;
  }

  friend bool operator==(const CubeCell&, const CubeCell&) = default;
  friend bool operator<(const CubeCell& a, const CubeCell& b) { return a.key() < b.key(); }

 private:
  friend std::pair<CubeCell, int> act(VertexSubset g, const CubeCell& c);

  VertexSubset one_, half_, lower_, upper_;
};

/// Flips every coordinate in g: P0<->P1, L<->U, PH fixed. The sign is the
/// orientation change, -1 per flipped interval factor.
inline std::pair<CubeCell, int> act(VertexSubset g, const CubeCell& c) {
  CubeCell r = c;
  const VertexSubset points = g - c.support();
  r.one_ = c.one_ ^ points;
  const VertexSubset flipped = g & c.intervals();
  r.lower_ = (c.lower_ - flipped) | (c.upper_ & flipped);
  r.upper_ = (c.upper_ - flipped) | (c.lower_ & flipped);
  return {r, flipped.size() % 2 == 0 ? 1 : -1};
}

/// Cellular boundary with the product orientation:
/// d c = sum_k (-1)^(k-1) (c[i_k -> upper end] - c[i_k -> lower end]).
inline std::vector<std::pair<CubeCell, int>> cell_boundary(const CubeCell& c) {
  std::vector<std::pair<CubeCell, int>> out;
  int k = 0;
  for (int i : c.intervals().elements()) {
    const int sign = k % 2 == 0 ? 1 : -1;
    if (c.factor(i) == Factor::L) {
      out.emplace_back(c.with(i, Factor::PH), sign);
      out.emplace_back(c.with(i, Factor::P0), -sign);
    } else {
      out.emplace_back(c.with(i, Factor::P1), sign);
      out.emplace_back(c.with(i, Factor::PH), -sign);
    }
    ++k;
  }
  return out;
}

/// Size bounds for the cube model. TORIC_SPLIT_MAX_CELLS overrides the cell cap.
struct CellLimits {
  int max_vertices = 12;
  std::size_t max_cells = 2'000'000;

  static CellLimits from_environment() {
    CellLimits l;
    if (const char* env = std::getenv("TORIC_SPLIT_MAX_CELLS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.max_cells = static_cast<std::size_t>(v);
    }
    return l;
  }
};

/// sum over faces tau of 3^|tau| 2^(m - |tau|).
inline std::size_t rzk_cell_count(const SimplicialComplex& k) {
  std::size_t total = 0;
  const int m = k.vertex_count();
  for (auto f : k.faces()) {
    std::size_t c = std::size_t{1} << (m - f.size());
    for (int i = 0; i < f.size(); ++i) c *= 3;
    total += c;
  }
  return total;
}

inline void check_capacity(const SimplicialComplex& k, const CellLimits& limits) {
  if (k.vertex_count() > limits.max_vertices || k.vertex_count() > CubeCell::kMaxCoordinates) {
    throw CapacityError("cube model supports at most " + std::to_string(limits.max_vertices) +
                        " vertices, got " + std::to_string(k.vertex_count()));
  }
  const std::size_t cells = rzk_cell_count(k);
  if (cells > limits.max_cells) {
    throw CapacityError("cube model needs " + std::to_string(cells) + " cells, cap is " +
                        std::to_string(limits.max_cells));
  }
}

/// Calls visit(cell) for every cell of the subdivided RZ_K.
template <class Visit>
void for_each_rzk_cell(const SimplicialComplex& k, Visit&& visit) {
  const int m = k.vertex_count();
  for (auto tau : k.faces()) {
    const auto inside = tau.elements();
    const auto outside = (VertexSubset::full(m) - tau).elements();
    std::size_t inside_count = 1;
    for (std::size_t i = 0; i < inside.size(); ++i) inside_count *= 3;
    for (std::uint32_t pts = 0; pts < (1u << outside.size()); ++pts) {
      CubeCell base;
      for (std::size_t j = 0; j < outside.size(); ++j) {
        if (pts >> j & 1u) base = base.with(outside[j], Factor::P1);
      }
      for (std::size_t code = 0; code < inside_count; ++code) {
        CubeCell c = base;
        std::size_t rest = code;
        for (int v : inside) {
          static constexpr Factor kInterior[3] = {Factor::PH, Factor::L, Factor::U};
          c = c.with(v, kInterior[rest % 3]);
          rest /= 3;
        }
        visit(c);
      }
    }
  }
}

/// Cells of RZ_K graded by dimension, with the acting group.
class GCWComplex {
 public:
  GCWComplex(int m, std::vector<std::vector<CubeCell>> cells, std::vector<VertexSubset> group)
      : m_(m), cells_(std::move(cells)), group_(std::move(group)) {
    index_.resize(cells_.size());
    for (std::size_t d = 0; d < cells_.size(); ++d) {
      std::sort(cells_[d].begin(), cells_[d].end());
      for (std::uint32_t i = 0; i < cells_[d].size(); ++i) index_[d][cells_[d][i].key()] = i;
    }
  }

  int vertex_count() const { return m_; }
  int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<CubeCell>& cells(int d) const { return cells_.at(static_cast<std::size_t>(d)); }
  const std::vector<VertexSubset>& group() const { return group_; }

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& c : cells_) n += c.size();
    return n;
  }

  bool contains(const CubeCell& c) const {
    const auto d = static_cast<std::size_t>(c.dim());
    return d < index_.size() && index_[d].count(c.key()) != 0;
  }

  std::uint32_t index_of(const CubeCell& c) const {
    return index_.at(static_cast<std::size_t>(c.dim())).at(c.key());
  }

  GradedChainComplex chain_complex() const {
    std::vector<std::size_t> dims;
    for (const auto& c : cells_) dims.push_back(c.size());
    std::map<int, SparseMatrix> boundaries;
    for (std::size_t d = 1; d < cells_.size(); ++d) {
      std::vector<MatrixEntry> e;
      for (std::uint32_t col = 0; col < cells_[d].size(); ++col) {
        for (const auto& [face, sign] : cell_boundary(cells_[d][col])) {
          e.push_back({index_[d - 1].at(face.key()), col, sign});
        }
      }
      boundaries.emplace(static_cast<int>(d), SparseMatrix(dims[d - 1], dims[d], std::move(e)));
    }
    return GradedChainComplex(0, std::move(dims), std::move(boundaries));
  }

  BettiNumbers betti(const Field& field) const { return betti_numbers(chain_complex(), field); }

 private:
  int m_;
  std::vector<std::vector<CubeCell>> cells_;
  std::vector<VertexSubset> group_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index_;
};

inline GCWComplex build_rzk(const SimplicialComplex& k,
                            std::vector<VertexSubset> group = {VertexSubset()},
                            const CellLimits& limits = CellLimits::from_environment()) {
  check_capacity(k, limits);
  std::vector<std::vector<CubeCell>> cells(static_cast<std::size_t>(k.dimension() + 2));
  for_each_rzk_cell(k, [&](const CubeCell& c) { cells[static_cast<std::size_t>(c.dim())].push_back(c); });
  return GCWComplex(k.vertex_count(), std::move(cells), std::move(group));
}

/// Canonical orbit representatives under a subgroup of F_2^m: the
/// lexicographically least cell of each orbit, found by clearing upper bits
/// greedily with an echelon basis of the group restricted to the movable
/// coordinates.
class OrbitCanonicalizer {
 public:
  struct Result {
    CubeCell representative;
    VertexSubset transport;  // g with g.cell = representative
    int sign;                // orientation sign of g on the cell
    std::size_t orbit_size;
  };

  OrbitCanonicalizer(int m, const std::vector<VertexSubset>& group) : m_(m) {
    std::vector<std::uint32_t> bits;
    for (auto g : group) bits.push_back(g.bits());
    generators_ = f2::echelon_basis(bits);
  }

  Result canonicalize(const CubeCell& c) const {
    const VertexSubset movable = c.movable(m_);
    const auto& basis = restricted_basis(movable);
    std::uint32_t state = c.upper_bits().bits();
    std::uint32_t flips = 0;
    for (std::uint32_t b : basis) {
      if (state & (b & -b)) {
        state ^= b;
        flips ^= b;
      }
    }
    auto [rep, sign] = act(VertexSubset(flips), c);
    return {rep, VertexSubset(flips), sign, std::size_t{1} << basis.size()};
  }

 private:
  const std::vector<std::uint32_t>& restricted_basis(VertexSubset movable) const {
    auto it = cache_.find(movable.bits());
    if (it != cache_.end()) return it->second;
    std::vector<std::uint32_t> projected;
    for (auto g : generators_) projected.push_back(g & movable.bits());
    return cache_.emplace(movable.bits(), f2::echelon_basis(projected)).first->second;
  }

  int m_;
  std::vector<std::uint32_t> generators_;
  mutable std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> cache_;
};

/// Orbit cells of RZ_K / G with boundary computed on representatives and
/// transported into each face's orbit with the action sign.
class QuotientComplex {
 public:
  QuotientComplex(const SimplicialComplex& k, std::vector<VertexSubset> group,
                  const CellLimits& limits = CellLimits::from_environment())
      : m_(k.vertex_count()), group_order_(group.size()), canon_(k.vertex_count(), group) {
    check_capacity(k, limits);
    reps_.resize(static_cast<std::size_t>(k.dimension() + 2));
    orbit_sizes_.resize(reps_.size());
    for_each_rzk_cell(k, [&](const CubeCell& c) {
      ++cell_count_;
      auto r = canon_.canonicalize(c);
      if (r.representative == c) reps_[static_cast<std::size_t>(c.dim())].push_back(c);
    });
    index_.resize(reps_.size());
    for (std::size_t d = 0; d < reps_.size(); ++d) {
      std::sort(reps_[d].begin(), reps_[d].end());
      for (std::uint32_t i = 0; i < reps_[d].size(); ++i) {
        index_[d][reps_[d][i].key()] = i;
        orbit_sizes_[d].push_back(canon_.canonicalize(reps_[d][i]).orbit_size);
      }
    }
  }

  int top_dimension() const { return static_cast<int>(reps_.size()) - 1; }
  const std::vector<CubeCell>& representatives(int d) const {
    return reps_.at(static_cast<std::size_t>(d));
  }
  const std::vector<std::size_t>& orbit_sizes(int d) const {
    return orbit_sizes_.at(static_cast<std::size_t>(d));
  }
  std::size_t group_order() const { return group_order_; }

  std::size_t orbit_count() const {
    std::size_t n = 0;
    for (const auto& r : reps_) n += r.size();
    return n;
  }
  /// Cells of RZ_K before the quotient.
  std::size_t cell_count() const { return cell_count_; }

  GradedChainComplex chain_complex() const {
    std::vector<std::size_t> dims;
    for (const auto& r : reps_) dims.push_back(r.size());
    std::map<int, SparseMatrix> boundaries;
    for (std::size_t d = 1; d < reps_.size(); ++d) {
      std::vector<MatrixEntry> e;
      for (std::uint32_t col = 0; col < reps_[d].size(); ++col) {
        for (const auto& [face, sign] : cell_boundary(reps_[d][col])) {
          auto r = canon_.canonicalize(face);
          // [face] = sign(g) [g.face] in the coinvariants.
          e.push_back({index_[d - 1].at(r.representative.key()), col, sign * r.sign});
        }
      }
      boundaries.emplace(static_cast<int>(d), SparseMatrix(dims[d - 1], dims[d], std::move(e)));
    }
    return GradedChainComplex(0, std::move(dims), std::move(boundaries));
  }

  BettiNumbers betti(const Field& field) const { return betti_numbers(chain_complex(), field); }

 private:
  int m_;
  std::size_t group_order_;
  std::size_t cell_count_ = 0;
  OrbitCanonicalizer canon_;
  std::vector<std::vector<CubeCell>> reps_;
  std::vector<std::vector<std::size_t>> orbit_sizes_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index_;
};

/// Betti numbers of M(K, lambda) = RZ_K / ker(lambda), for any lambda.
inline BettiNumbers quotient_betti(const SimplicialComplex& k, const LambdaMap& l,
                                   const Field& field,
                                   const CellLimits& limits = CellLimits::from_environment()) {
  if (l.vertex_count() != k.vertex_count()) {
    throw InputError("lambda has " + std::to_string(l.vertex_count()) +
                     " columns but the complex has " + std::to_string(k.vertex_count()) +
                     " vertices");
  }
  return QuotientComplex(k, kernel_elements(l), limits).betti(field);
}

}  // namespace toric_split

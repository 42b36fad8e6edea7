#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric_split/errors.hpp"
#include "toric_split/field.hpp"
#include "toric_split/sparse_matrix.hpp"

namespace toric_split {

namespace detail {

template <class V>
using SparseRow = std::vector<std::pair<std::uint32_t, V>>;

template <class Arith>
std::vector<SparseRow<typename Arith::value_type>> load_rows(const SparseMatrix& m,
                                                             const Arith& ar) {
  std::vector<SparseRow<typename Arith::value_type>> rows(m.rows());
  for (const auto& e : m.entries()) {
    auto v = ar.from_rational(e.value);
    if (!ar.is_zero(v)) rows[e.row].emplace_back(e.col, std::move(v));
  }
  return rows;
}

// Gaussian elimination choosing, at every step, the sparsest remaining row
// and within it the column touching the fewest rows (Markowitz-style).
template <class Arith>
std::size_t markowitz_rank(std::vector<SparseRow<typename Arith::value_type>> rows,
                           std::size_t ncols, const Arith& ar) {
  using V = typename Arith::value_type;
  const std::size_t n = rows.size();
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<char> active(n, 0);
  std::set<std::pair<std::size_t, std::uint32_t>> queue;
  for (std::uint32_t r = 0; r < n; ++r) {
    if (rows[r].empty()) continue;
    active[r] = 1;
    queue.emplace(rows[r].size(), r);
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }

  std::size_t rank = 0;
  SparseRow<V> merged;
  while (!queue.empty()) {
    const std::uint32_t r = queue.begin()->second;
    queue.erase(queue.begin());
    active[r] = 0;
    ++rank;

    const SparseRow<V>& prow = rows[r];
    std::size_t best = 0;
    for (std::size_t k = 1; k < prow.size(); ++k) {
      if (col_rows[prow[k].first].size() < col_rows[prow[best].first].size()) best = k;
    }
    const std::uint32_t pc = prow[best].first;
    const V pv = prow[best].second;

    for (std::uint32_t s : col_rows[pc]) {
      if (!active[s]) continue;
      SparseRow<V>& srow = rows[s];
      auto hit = std::lower_bound(srow.begin(), srow.end(), pc,
                                  [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (hit == srow.end() || hit->first != pc) continue;
      const V factor = ar.div(hit->second, pv);
      queue.erase({srow.size(), s});

      merged.clear();
      merged.reserve(srow.size() + prow.size());
      std::size_t i = 0, j = 0;
      while (i < srow.size() || j < prow.size()) {
        if (j == prow.size() || (i < srow.size() && srow[i].first < prow[j].first)) {
          merged.push_back(std::move(srow[i++]));
        } else if (i == srow.size() || prow[j].first < srow[i].first) {
          merged.emplace_back(prow[j].first, ar.neg(ar.mul(factor, prow[j].second)));
          col_rows[prow[j].first].push_back(s);
          ++j;
        } else {
          V v = ar.sub(srow[i].second, ar.mul(factor, prow[j].second));
          if (!ar.is_zero(v)) merged.emplace_back(srow[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      srow.swap(merged);
      if (srow.empty()) {
        active[s] = 0;
      } else {
        queue.emplace(srow.size(), s);
      }
    }
    col_rows[pc].clear();
    col_rows[pc].shrink_to_fit();
    rows[r].clear();
    rows[r].shrink_to_fit();
  }
  return rank;
}

}  // namespace detail

/// Rank over `field`. Throws CoefficientDomainError when an entry has no
/// image in F_p.
inline std::size_t rank(const SparseMatrix& m, const Field& field) {
  if (m.nnz() == 0) return 0;
  if (field.is_rational()) {
    RationalArithmetic ar;
    return detail::markowitz_rank(detail::load_rows(m, ar), m.cols(), ar);
  }
  PrimeArithmetic ar(field.characteristic());
  return detail::markowitz_rank(detail::load_rows(m, ar), m.cols(), ar);
}

/// True when every entry of `m` reduces to zero in `field`.
inline bool is_zero_over(const SparseMatrix& m, const Field& field) {
  if (field.is_rational()) return m.is_zero();
  PrimeArithmetic ar(field.characteristic());
  for (const auto& e : m.entries()) {
    if (!ar.is_zero(ar.from_rational(e.value))) return false;
  }
  return true;
}

/// Basis of the right null space over Q (dense elimination; small inputs).
inline std::vector<std::vector<Rational>> nullspace(const SparseMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, 0));
  for (const auto& e : m.entries()) a[e.row][e.col] = e.value;

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Per-degree Betti numbers; absent degrees read as zero and zeros are never
/// stored, so equality is equality of the whole table.
class BettiNumbers {
 public:
  BettiNumbers() = default;
  BettiNumbers(std::initializer_list<std::size_t> from_degree_zero) {
    int q = 0;
    for (auto b : from_degree_zero) set(q++, b);
  }

  static BettiNumbers from_vector(const std::vector<std::size_t>& v, int first_degree = 0) {
    BettiNumbers b;
    for (std::size_t i = 0; i < v.size(); ++i) b.set(first_degree + static_cast<int>(i), v[i]);
    return b;
  }

  std::size_t operator[](int q) const {
    auto it = table_.find(q);
    return it == table_.end() ? 0 : it->second;
  }

  void set(int q, std::size_t value) {
    if (value == 0) {
      table_.erase(q);
    } else {
      table_[q] = value;
    }
  }
  void add(int q, std::size_t value) { set(q, (*this)[q] + value); }

  bool empty() const { return table_.empty(); }
  int min_degree() const { return table_.empty() ? 0 : table_.begin()->first; }
  int max_degree() const { return table_.empty() ? 0 : table_.rbegin()->first; }

  /// Dense listing over [lo, hi].
  std::vector<std::size_t> to_vector(int lo, int hi) const {
    std::vector<std::size_t> v;
    for (int q = lo; q <= hi; ++q) v.push_back((*this)[q]);
    return v;
  }

  std::size_t total() const {
    std::size_t s = 0;
    for (const auto& [q, b] : table_) s += b;
    return s;
  }

  long long euler_characteristic() const {
    long long chi = 0;
    for (const auto& [q, b] : table_) chi += (q % 2 == 0 ? 1 : -1) * static_cast<long long>(b);
    return chi;
  }

  const std::map<int, std::size_t>& table() const& { return table_; }
  std::map<int, std::size_t> table() && { return std::move(table_); }

  /// "(1,0,1)" over [min(0, lowest), highest] degrees.
  std::string to_string() const {
    int lo = std::min(0, min_degree());
    int hi = std::max(0, max_degree());
    std::string s = "(";
    for (int q = lo; q <= hi; ++q) {
      if (q != lo) s += ",";
      s += std::to_string((*this)[q]);
    }
    return s + ")";
  }

  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;

 private:
  std::map<int, std::size_t> table_;
};

/// Chain complex with boundary maps d_q : C_q -> C_{q-1} over a finite
/// degree window [min_degree, min_degree + dims.size()).
class GradedChainComplex {
 public:
  GradedChainComplex() = default;

  GradedChainComplex(int min_degree, std::vector<std::size_t> dims,
                     std::map<int, SparseMatrix> boundaries)
      : min_degree_(min_degree), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    for (const auto& [q, d] : boundaries_) {
      if (d.cols() != dim(q) || d.rows() != dim(q - 1)) {
        throw ComplexIntegrityError("boundary in degree " + std::to_string(q) + " has shape " +
                                    std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                    ", expected " + std::to_string(dim(q - 1)) + "x" +
                                    std::to_string(dim(q)));
      }
    }
  }

  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(dims_.size()) - 1; }

  std::size_t dim(int q) const {
    if (q < min_degree_ || q > max_degree()) return 0;
    return dims_[static_cast<std::size_t>(q - min_degree_)];
  }

  /// d_q, or the zero map when none is stored.
  SparseMatrix boundary(int q) const {
    auto it = boundaries_.find(q);
    if (it != boundaries_.end()) return it->second;
    return SparseMatrix(dim(q - 1), dim(q));
  }

  bool has_boundary(int q) const { return boundaries_.count(q) != 0; }

  long long euler_characteristic() const {
    long long chi = 0;
    for (int q = min_degree_; q <= max_degree(); ++q) {
      chi += ((q % 2 + 2) % 2 == 0 ? 1 : -1) * static_cast<long long>(dim(q));
    }
    return chi;
  }

  /// d_{q-1} d_q == 0 in every degree, over `field`.
  bool boundaries_compose_to_zero(const Field& field) const {
    for (const auto& [q, d] : boundaries_) {
      auto below = boundaries_.find(q - 1);
      if (below == boundaries_.end()) continue;
      if (!is_zero_over(below->second * d, field)) return false;
    }
    return true;
  }

 private:
  int min_degree_ = 0;
  std::vector<std::size_t> dims_;
  std::map<int, SparseMatrix> boundaries_;
};

/// b_q = dim C_q - rank d_q - rank d_{q+1}. Throws ComplexIntegrityError
/// when d∘d != 0 over the field.
inline BettiNumbers betti_numbers(const GradedChainComplex& c, const Field& field) {
  if (!c.boundaries_compose_to_zero(field)) {
    throw ComplexIntegrityError("boundary maps do not compose to zero over " + field.name());
  }
  std::map<int, std::size_t> ranks;
  for (int q = c.min_degree(); q <= c.max_degree() + 1; ++q) {
    ranks[q] = c.has_boundary(q) ? rank(c.boundary(q), field) : 0;
  }
  BettiNumbers b;
  for (int q = c.min_degree(); q <= c.max_degree(); ++q) {
    std::size_t out = ranks[q];
    std::size_t in = ranks[q + 1];
    b.set(q, c.dim(q) - out - in);
  }
  return b;
}

}  // namespace toric_split

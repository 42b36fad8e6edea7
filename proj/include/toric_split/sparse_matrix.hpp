#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "toric_split/errors.hpp"
#include "toric_split/field.hpp"

namespace toric_split {

struct MatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  Rational value;
};

/// Sparse matrix of exact rationals in coordinate form. Entries are kept
/// sorted by (row, col) with distinct positions and no stored zeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Duplicate positions are summed; zero sums are dropped.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
      : rows_(rows), cols_(cols) {
    for (auto& e : entries) {
      e.value.canonicalize();
      if (e.row >= rows || e.col >= cols) {
        throw InputError("matrix entry (" + std::to_string(e.row) + ", " +
                         std::to_string(e.col) + ") outside " + std::to_string(rows) + "x" +
                         std::to_string(cols));
      }
    }
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
      return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    for (auto& e : entries) {
      if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
        entries_.back().value += e.value;
      } else {
        if (!entries_.empty() && sgn(entries_.back().value) == 0) entries_.pop_back();
        entries_.push_back(std::move(e));
      }
    }
    if (!entries_.empty() && sgn(entries_.back().value) == 0) entries_.pop_back();
  }

  static SparseMatrix identity(std::size_t n) {
    std::vector<MatrixEntry> e;
    e.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) e.push_back({i, i, 1});
    return SparseMatrix(n, n, std::move(e));
  }

  /// Dense row-major input, mostly for tests.
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<MatrixEntry> e;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("ragged dense matrix");
      for (std::uint32_t c = 0; c < cols; ++c) {
        if (sgn(rows[r][c]) != 0) e.push_back({r, c, rows[r][c]});
      }
    }
    return SparseMatrix(rows.size(), cols, std::move(e));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }

  Rational at(std::uint32_t r, std::uint32_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                               [](const MatrixEntry& e, const std::pair<std::uint32_t, std::uint32_t>& key) {
                                 return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                               });
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return 0;
  }

  SparseMatrix transpose() const {
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
  }

  /// Exact product over Q.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    std::vector<std::size_t> row_start(b.rows_ + 1, 0);
    for (const auto& e : b.entries_) ++row_start[e.row + 1];
    for (std::size_t i = 0; i < b.rows_; ++i) row_start[i + 1] += row_start[i];
    std::vector<MatrixEntry> out;
    for (const auto& e : a.entries_) {
      for (std::size_t k = row_start[e.col]; k < row_start[e.col + 1]; ++k) {
        const auto& f = b.entries_[k];
        out.push_back({e.row, f.col, e.value * f.value});
      }
    }
    return SparseMatrix(a.rows_, b.cols_, std::move(out));
  }

  /// Horizontal concatenation [a | b].
  static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_) throw InputError("hstack row mismatch");
    std::vector<MatrixEntry> e = a.entries_;
    for (const auto& x : b.entries_) {
      e.push_back({x.row, static_cast<std::uint32_t>(x.col + a.cols_), x.value});
    }
    return SparseMatrix(a.rows_, a.cols_ + b.cols_, std::move(e));
  }

  /// Vertical concatenation.
  static SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.cols_) throw InputError("vstack column mismatch");
    std::vector<MatrixEntry> e = a.entries_;
    for (const auto& x : b.entries_) {
      e.push_back({static_cast<std::uint32_t>(x.row + a.rows_), x.col, x.value});
    }
    return SparseMatrix(a.rows_ + b.rows_, a.cols_, std::move(e));
  }

  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      const auto& x = a.entries_[i];
      const auto& y = b.entries_[i];
      if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

}  // namespace toric_split

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric_split/errors.hpp"
#include "toric_split/exact_linalg.hpp"
#include "toric_split/f2_lambda.hpp"
#include "toric_split/simplicial.hpp"

// The differential graded algebra R_K on generators u_i (degree 1) and t_i
// (degree 0), d t_i = u_i, whose cohomology is H^*(RZ_K). Every element has a
// unique normal form as a combination of monomials u_sigma t_S with
// sigma in K and sigma ∩ S = ∅.

namespace toric_split {

struct Monomial {
  VertexSubset sigma;  // u part
  VertexSubset rest;   // t part, disjoint from sigma

  int degree() const { return sigma.size(); }
  VertexSubset index_set() const { return sigma | rest; }

  std::string to_string() const {
    if (sigma.empty() && rest.empty()) return "1";
    auto digits = [](VertexSubset s) {
      std::string out;
      for (int v : s.elements()) {
        if (!out.empty() && v + 1 >= 10) out += ",";
        out += std::to_string(v + 1);
      }
      return out;
    };
    std::string s;
    if (!sigma.empty()) s += "u" + digits(sigma);
    if (!rest.empty()) s += "t" + digits(rest);
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Rational combination of normal-form monomials; zero coefficients are
/// never stored, so equality of elements is equality of term maps.
class DgaElement {
 public:
  DgaElement() = default;

  static DgaElement scalar(const Rational& c) { return monomial({}, c); }
  static DgaElement monomial(Monomial m, const Rational& c = 1) {
    DgaElement e;
    e.add_term(m, c);
    return e;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  const std::map<Monomial, Rational>& terms() const& { return terms_; }
  std::map<Monomial, Rational> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  DgaElement& operator+=(const DgaElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  DgaElement& operator-=(const DgaElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  DgaElement& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
  friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a -= b; }
  friend DgaElement operator-(DgaElement a) { return a *= -1; }
  friend DgaElement operator*(const Rational& s, DgaElement a) { return a *= s; }

  friend bool operator==(const DgaElement& a, const DgaElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) s += "-";
      Rational a = abs(c);
      if (a != 1 || (m.sigma.empty() && m.rest.empty())) {
        s += a.get_str();
        if (!(m.sigma.empty() && m.rest.empty())) s += "*";
      }
      if (!(m.sigma.empty() && m.rest.empty())) s += m.to_string();
    }
    return s;
  }

 private:
  std::map<Monomial, Rational> terms_;
};

/// (-1)^(number of pairs a in first, b in second with a > b): the sign of
/// sorting the concatenated u-words.
inline int koszul_sign(VertexSubset first, VertexSubset second) {
  int inversions = 0;
  for (int b : second.elements()) inversions += (first - VertexSubset::full(b + 1)).size();
  return inversions % 2 == 0 ? 1 : -1;
}

class CaiAlgebra {
 public:
  explicit CaiAlgebra(SimplicialComplex k) : k_(std::move(k)) {}

  const SimplicialComplex& complex() const { return k_; }
  int vertex_count() const { return k_.vertex_count(); }
  /// Highest degree carrying monomials.
  int top_degree() const { return k_.dimension() + 1; }

  DgaElement one() const { return DgaElement::scalar(1); }
  DgaElement t(int i) const { return DgaElement::monomial({VertexSubset(), VertexSubset::of({i})}); }
  /// Zero when {i} is not a face.
  DgaElement u(int i) const {
    if (!k_.contains(VertexSubset::of({i}))) return {};
    return DgaElement::monomial({VertexSubset::of({i}), VertexSubset()});
  }
  /// The element u_sigma, zero if sigma is not a face.
  DgaElement u_set(VertexSubset sigma) const {
    if (!k_.contains(sigma)) return {};
    return DgaElement::monomial({sigma, VertexSubset()});
  }

  /// (u_a t_S)(u_b t_T) = sign u_{a∪b} t_{(S∪T) \ (a∪b)}, or nothing when
  /// S meets b (t_i u_i = 0), a meets b (u_i^2 = 0) or a∪b is not a face.
  std::optional<std::pair<Monomial, int>> multiply(const Monomial& x, const Monomial& y) const {
    if (x.rest.intersects(y.sigma) || x.sigma.intersects(y.sigma)) return std::nullopt;
    const VertexSubset sigma = x.sigma | y.sigma;
    if (!k_.contains(sigma)) return std::nullopt;
    return std::make_pair(Monomial{sigma, (x.rest | y.rest) - sigma}, koszul_sign(x.sigma, y.sigma));
  }

  DgaElement multiply(const DgaElement& x, const DgaElement& y) const {
    DgaElement out;
    for (const auto& [mx, cx] : x.terms()) {
      for (const auto& [my, cy] : y.terms()) {
        if (auto p = multiply(mx, my)) out.add_term(p->first, p->second * cx * cy);
      }
    }
    return out;
  }

  /// d(u_sigma t_S) = (-1)^|sigma| sum_{i in S, sigma+i in K}
  ///                  (-1)^#{j in sigma : j > i} u_{sigma+i} t_{S-i},
  /// the unique derivation with d t_i = u_i.
  DgaElement differential(const Monomial& x) const {
    DgaElement out;
    const int outer = x.degree() % 2 == 0 ? 1 : -1;
    for (int i : x.rest.elements()) {
      const VertexSubset grown = x.sigma.with(i);
      if (!k_.contains(grown)) continue;
      const int above = x.sigma.size() - x.sigma.count_below(i);
      const int inner = above % 2 == 0 ? 1 : -1;
      out.add_term({grown, x.rest.without(i)}, outer * inner);
    }
    return out;
  }

  DgaElement differential(const DgaElement& x) const {
    DgaElement out;
    for (const auto& [m, c] : x.terms()) out += c * differential(m);
    return out;
  }

  /// All normal-form monomials of the given degree, ordered.
  std::vector<Monomial> basis(int degree) const {
    std::vector<Monomial> out;
    const VertexSubset all = VertexSubset::full(k_.vertex_count());
    for (auto sigma : k_.faces()) {
      if (sigma.size() != degree) continue;
      const VertexSubset free = all - sigma;
      for (std::uint32_t s = free.bits();; s = (s - 1) & free.bits()) {
        out.push_back({sigma, VertexSubset(s)});
        if (s == 0) break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Basis of the summand R_{K_I}: u_sigma t_{I \ sigma}, sigma in K_I.
  std::vector<Monomial> submodule_basis(VertexSubset index_set) const {
    std::vector<Monomial> out;
    for (auto sigma : k_.faces()) {
      if (sigma.is_subset_of(index_set)) out.push_back({sigma, index_set - sigma});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  SimplicialComplex k_;
};

/// Linear action of g in F_2^m: substitutes t_i -> 1 - t_i and u_i -> -u_i
/// for i in g into the normal form. This is the flip action on cellular
/// cochains; it commutes with d but is multiplicative only in cohomology.
inline DgaElement act_dga(VertexSubset g, const DgaElement& x) {
  DgaElement out;
  for (const auto& [m, c] : x.terms()) {
    const int usign = (g & m.sigma).size() % 2 == 0 ? 1 : -1;
    const VertexSubset flipped = g & m.rest;
    const VertexSubset kept = m.rest - flipped;
    // prod_{i in flipped} (1 - t_i) = sum_{A ⊆ flipped} (-1)^|A| t_A
    for (std::uint32_t a = flipped.bits();; a = (a - 1) & flipped.bits()) {
      const int tsign = std::popcount(a) % 2 == 0 ? 1 : -1;
      out.add_term({m.sigma, kept | VertexSubset(a)}, c * (usign * tsign));
      if (a == 0) break;
    }
  }
  return out;
}

/// N(x) = (1/|G|) sum_g g.x. The field must invert |G|.
inline DgaElement reynolds(const DgaElement& x, const std::vector<VertexSubset>& group,
                           const Field& field = Field::rationals()) {
  if (!field.inverts(group.size())) {
    throw CoefficientDomainError("averaging over a group of order " +
                                 std::to_string(group.size()) + " is undefined over " +
                                 field.name());
  }
  DgaElement out;
  for (auto g : group) out += act_dga(g, x);
  Rational weight(1);
  weight /= static_cast<unsigned long>(group.size());
  return weight * out;
}

/// Drops every monomial whose index set is not in `row_space`.
inline DgaElement project_to_rows(const DgaElement& x, const std::vector<VertexSubset>& row_space) {
  DgaElement out;
  for (const auto& [m, c] : x.terms()) {
    if (std::binary_search(row_space.begin(), row_space.end(), m.index_set())) out.add_term(m, c);
  }
  return out;
}

inline bool is_invariant(const DgaElement& x, const std::vector<VertexSubset>& group) {
  for (auto g : group) {
    if (!(act_dga(g, x) == x)) return false;
  }
  return true;
}

/// Restriction of an invariant element to the Row(lambda) summands.
inline DgaElement phi(const DgaElement& x, const LambdaMap& l) {
  if (!is_invariant(x, kernel_elements(l))) {
    throw DomainError("phi expects a ker(lambda)-invariant element, got " + x.to_string());
  }
  return project_to_rows(x, row_space(l));
}

/// Multiplication on the Row(lambda) summands: product followed by deletion
/// of index sets outside Row(lambda).
inline DgaElement multiply_projected(const CaiAlgebra& alg, const DgaElement& x,
                                     const DgaElement& y,
                                     const std::vector<VertexSubset>& row_space) {
  return project_to_rows(alg.multiply(x, y), row_space);
}

/// {N(u_sigma t_{I \ sigma}) : I in Row(lambda), sigma in K_I}.
inline std::vector<DgaElement> invariant_basis(const CaiAlgebra& alg, const LambdaMap& l) {
  const auto group = kernel_elements(l);
  std::vector<DgaElement> out;
  for (auto index_set : row_space(l)) {
    for (const auto& m : alg.submodule_basis(index_set)) {
      out.push_back(reynolds(DgaElement::monomial(m), group));
    }
  }
  return out;
}

/// Image of u_sigma t_{I \ sigma} in the augmented simplicial cochains of
/// K_I: sigma^* in degree |sigma| - 1. The map intertwines d with the
/// simplicial coboundary.
struct SimplicialCochain {
  VertexSubset index_set;
  VertexSubset face;
  int degree;
};

inline SimplicialCochain to_simplicial_cochain(const Monomial& x) {
  return {x.index_set(), x.sigma, x.degree() - 1};
}

namespace detail {

inline std::map<Monomial, std::uint32_t> index_basis(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::uint32_t> idx;
  for (std::uint32_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

/// Matrix whose column j holds the coordinates of columns[j].
inline SparseMatrix columns_matrix(const std::vector<DgaElement>& columns,
                                   const std::map<Monomial, std::uint32_t>& rows) {
  std::vector<MatrixEntry> e;
  for (std::uint32_t j = 0; j < columns.size(); ++j) {
    for (const auto& [m, c] : columns[j].terms()) e.push_back({rows.at(m), j, c});
  }
  return SparseMatrix(rows.size(), columns.size(), std::move(e));
}

}  // namespace detail

/// Matrix of d : R^q -> R^{q+1} in the monomial bases.
inline SparseMatrix differential_matrix(const CaiAlgebra& alg, int degree) {
  const auto src = alg.basis(degree);
  const auto dst = detail::index_basis(alg.basis(degree + 1));
  std::vector<DgaElement> cols;
  cols.reserve(src.size());
  for (const auto& m : src) cols.push_back(alg.differential(m));
  return detail::columns_matrix(cols, dst);
}

/// dim H^q(R_K) over the field, q = 0..top.
inline BettiNumbers dga_betti(const SimplicialComplex& k, const Field& field) {
  CaiAlgebra alg(k);
  BettiNumbers b;
  std::size_t incoming = 0;
  for (int q = 0; q <= alg.top_degree(); ++q) {
    const std::size_t dim = alg.basis(q).size();
    const std::size_t outgoing = rank(differential_matrix(alg, q), field);
    b.set(q, dim - outgoing - incoming);
    incoming = outgoing;
  }
  return b;
}

/// Cohomology of the ker(lambda)-invariant subcomplex. With N the Reynolds
/// projection, the invariant cochains in degree q are im N_q and the
/// restricted differential has rank rank(d_q N_q).
inline BettiNumbers invariant_betti(const SimplicialComplex& k, const LambdaMap& l,
                                    const Field& field) {
  const auto group = kernel_elements(l);
  if (!field.inverts(group.size())) {
    throw CoefficientDomainError("|ker lambda| = " + std::to_string(group.size()) +
                                 " is not invertible over " + field.name());
  }
  CaiAlgebra alg(k);
  BettiNumbers b;
  std::size_t incoming = 0;
  for (int q = 0; q <= alg.top_degree(); ++q) {
    const auto src = alg.basis(q);
    const auto here = detail::index_basis(src);
    const auto next = detail::index_basis(alg.basis(q + 1));
    std::vector<DgaElement> averaged, differentiated;
    averaged.reserve(src.size());
    differentiated.reserve(src.size());
    for (const auto& m : src) {
      averaged.push_back(reynolds(DgaElement::monomial(m), group, field));
      differentiated.push_back(alg.differential(averaged.back()));
    }
    const std::size_t dim = rank(detail::columns_matrix(averaged, here), field);
    const std::size_t outgoing = rank(detail::columns_matrix(differentiated, next), field);
    b.set(q, dim - outgoing - incoming);
    incoming = outgoing;
  }
  return b;
}

}  // namespace toric_split

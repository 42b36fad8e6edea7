#pragma once

// Cohomological helpers for R_K tests: cocycle sampling and coboundary
// membership by rank comparison.

#include <vector>

#include "support/generators.hpp"

namespace testgen {

/// True when z lies in the span of `columns` over Q.
inline bool in_span(const std::vector<DgaElement>& columns, const DgaElement& z) {
  std::map<Monomial, std::uint32_t> rows;
  auto index = [&](const DgaElement& x) {
    for (const auto& [m, c] : x.terms()) rows.emplace(m, 0);
  };
  for (const auto& c : columns) index(c);
  index(z);
  std::uint32_t i = 0;
  for (auto& [m, idx] : rows) idx = i++;
  auto with_z = columns;
  with_z.push_back(z);
  const Field q = Field::rationals();
  return rank(detail::columns_matrix(columns, rows), q) == rank(detail::columns_matrix(with_z, rows), q);
}

/// z = d(w) for some w in the span of `sources`.
inline bool is_coboundary(const CaiAlgebra& alg, const std::vector<Monomial>& sources,
                          const DgaElement& z) {
  std::vector<DgaElement> images;
  for (const auto& m : sources) images.push_back(alg.differential(m));
  return in_span(images, z);
}

inline bool is_coboundary(const CaiAlgebra& alg, int degree, const DgaElement& z) {
  return degree == 0 ? z.is_zero() : is_coboundary(alg, alg.basis(degree - 1), z);
}

/// Random Q-combination of a basis of the degree-q cocycles.
inline DgaElement random_cocycle(Rng& rng, const CaiAlgebra& alg, int degree) {
  const auto basis = alg.basis(degree);
  const auto cocycles = nullspace(differential_matrix(alg, degree));
  DgaElement z;
  for (const auto& v : cocycles) {
    const Rational c(static_cast<long>(rng.integer(-2, 2)));
    if (c == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) z.add_term(basis[i], c * v[i]);
  }
  return z;
}

}  // namespace testgen

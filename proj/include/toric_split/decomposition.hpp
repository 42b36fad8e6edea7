#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "toric_split/cai_dga.hpp"
#include "toric_split/exact_linalg.hpp"
#include "toric_split/f2_lambda.hpp"
#include "toric_split/rzk.hpp"
#include "toric_split/simplicial.hpp"

namespace toric_split {

enum class Verdict { Pass, ExpectedFail, Fail };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::ExpectedFail: return "EXPECTED-FAIL";
    case Verdict::Fail: return "FAIL";
  }
  return "FAIL";
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "EXPECTED-FAIL") return Verdict::ExpectedFail;
  if (s == "FAIL") return Verdict::Fail;
  throw InputError("unknown verdict '" + s + "'");
}

/// b_q = [q = 0] + sum over nonempty I in Row(lambda) of b~_{q-1}(K_I).
/// Summands with I in K vanish since K_I is then a simplex.
inline BettiNumbers rhs_betti(const SimplicialComplex& k, const LambdaMap& l, const Field& field) {
  if (l.vertex_count() != k.vertex_count()) {
    throw InputError("lambda and complex disagree on the vertex count");
  }
  BettiNumbers b;
  b.add(0, 1);
  for (auto index_set : row_space(l)) {
    if (index_set.empty() || k.contains(index_set)) continue;
    const auto reduced = reduced_betti(k.full_subcomplex(index_set), field);
    for (const auto& [q, value] : reduced.table()) {
      b.add(q + 1, value);
    }
  }
  return b;
}

struct MainReport {
  int m = 0;
  int n = 0;
  std::uint32_t p = 0;
  std::size_t kernel_order = 0;
  std::size_t row_space_size = 0;
  bool characteristic = false;
  std::size_t cells = 0;
  std::size_t orbit_cells = 0;
  BettiNumbers quotient;
  std::optional<BettiNumbers> invariant;  // absent when p divides |ker lambda|
  BettiNumbers rhs;
  Verdict verdict = Verdict::Fail;
  double seconds = 0;

  friend bool operator==(const MainReport& a, const MainReport& b) {
    return a.m == b.m && a.n == b.n && a.p == b.p && a.kernel_order == b.kernel_order &&
           a.row_space_size == b.row_space_size && a.characteristic == b.characteristic &&
           a.cells == b.cells && a.orbit_cells == b.orbit_cells && a.quotient == b.quotient &&
           a.invariant == b.invariant && a.rhs == b.rhs && a.verdict == b.verdict;
  }
};

/// Compares Betti numbers of M(K, lambda) from the cube model, from the
/// invariant cochains of R_K, and from the Row(lambda) splitting. p = 0 means
/// Q. At p = 2 a mismatch is the expected outcome, not a failure.
inline MainReport verify_main(const SimplicialComplex& k, const LambdaMap& l, std::uint32_t p,
                              const CellLimits& limits = CellLimits::from_environment()) {
  const auto start = std::chrono::steady_clock::now();
  const Field field = Field::from_characteristic(p);
  if (l.vertex_count() != k.vertex_count()) {
    throw InputError("lambda has " + std::to_string(l.vertex_count()) +
                     " columns but the complex has " + std::to_string(k.vertex_count()) +
                     " vertices");
  }
  MainReport r;
  r.m = k.vertex_count();
  r.n = l.target_rank();
  r.p = p;
  const auto kernel = kernel_elements(l);
  r.kernel_order = kernel.size();
  r.row_space_size = row_space(l).size();
  r.characteristic = is_characteristic(l, k);

  QuotientComplex quotient(k, kernel, limits);
  r.cells = quotient.cell_count();
  r.orbit_cells = quotient.orbit_count();
  r.quotient = quotient.betti(field);
  if (field.inverts(kernel.size())) r.invariant = invariant_betti(k, l, field);
  r.rhs = rhs_betti(k, l, field);

  const bool agree = r.quotient == r.rhs && (!r.invariant || *r.invariant == r.rhs);
  if (agree) {
    r.verdict = Verdict::Pass;
  } else {
    r.verdict = p == 2 ? Verdict::ExpectedFail : Verdict::Fail;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct BbcgReport {
  std::uint32_t p = 0;
  BettiNumbers lhs;  // Betti numbers of RZ_K
  BettiNumbers rhs;  // [q = 0] + sum over nonempty I of b~_{q-1}(K_I)
  Verdict verdict = Verdict::Fail;

  friend bool operator==(const BbcgReport&, const BbcgReport&) = default;
};

/// The identity-lambda splitting of RZ_K, which holds over every field.
inline BbcgReport bbcg_check(const SimplicialComplex& k, const Field& field,
                             const CellLimits& limits = CellLimits::from_environment()) {
  BbcgReport r;
  r.p = field.characteristic();
  r.lhs = build_rzk(k, {VertexSubset()}, limits).betti(field);
  r.rhs.add(0, 1);
  const std::uint32_t all = VertexSubset::full(k.vertex_count()).bits();
  for (std::uint32_t bits = 1; bits <= all && all != 0; ++bits) {
    const VertexSubset index_set(bits);
    if (k.contains(index_set)) continue;
    const auto reduced = reduced_betti(k.full_subcomplex(index_set), field);
    for (const auto& [q, value] : reduced.table()) {
      r.rhs.add(q + 1, value);
    }
  }
  r.verdict = r.lhs == r.rhs ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace toric_split

// Minimal library usage: the real projective plane as a real toric space over
// the triangle boundary, then the P_4 graph associahedron.

#include <iostream>

#include "toric_split/toric_split.hpp"

using namespace toric_split;

int main() {
  const auto k = SimplicialComplex::from_facets(
      3, {VertexSubset::of({0, 1}), VertexSubset::of({1, 2}), VertexSubset::of({0, 2})});
  const auto l = LambdaMap::from_matrix({{1, 0, 1}, {0, 1, 1}});

  for (std::uint32_t p : {0u, 3u, 2u}) {
    const auto r = verify_main(k, l, p);
    std::cout << "RP^2 over " << Field::from_characteristic(p).name() << ": quotient "
              << r.quotient.to_string() << ", rhs " << r.rhs.to_string() << ", " << to_string(r.verdict)
              << "\n";
  }

  const auto g = SimpleGraph::path(4);
  std::cout << "P_4: " << tubes(g).size() << " tubes, a-numbers";
  for (auto a : a_numbers(g)) std::cout << ' ' << a;
  const auto report = verify_graph_splitting(g, 3);
  std::cout << ", " << to_string(report.verdict) << "\n";
  return report.verdict == Verdict::Pass ? 0 : 1;
}

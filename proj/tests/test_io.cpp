#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace toric_split;
using nlohmann::json;

TEST(ComplexJson, RoundTrip) {
  testgen::Rng rng(testgen::default_seed());
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = testgen::random_complex(rng, rng.uniform(0, 8));
    EXPECT_EQ(io::complex_from_json(io::complex_to_json(k)), k);
  }
}

TEST(ComplexJson, OneBasedLabels) {
  const auto k = io::complex_from_json(json::parse(R"({"m": 3, "facets": [[1, 2], [3]]})"));
  EXPECT_TRUE(k.contains(VertexSubset::of({0, 1})));
  EXPECT_TRUE(k.contains(VertexSubset::of({2})));
  EXPECT_EQ(io::complex_to_json(k)["facets"], json::parse("[[3], [1, 2]]"));
}

TEST(ComplexJson, Diagnostics) {
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"facets": []})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"m": 2, "facets": [[0]]})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"m": 2, "facets": [[3]]})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"m": "x", "facets": []})")), InputError);
  EXPECT_THROW(io::complex_from_json(json::parse(R"({"m": 2, "facets": [["a"]]})")), InputError);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), InputError);
}

TEST(LambdaJson, RoundTripAndValidation) {
  const auto l = LambdaMap::from_matrix({{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(io::lambda_from_json(io::lambda_to_json(l)), l);
  EXPECT_THROW(io::lambda_from_json(json::parse(R"({"n": 2, "m": 2, "rows": [[1, 0]]})")), InputError);
  EXPECT_THROW(io::lambda_from_json(json::parse(R"({"n": 1, "m": 3, "rows": [[1, 0]]})")), InputError);
  EXPECT_THROW(io::lambda_from_json(json::parse(R"({"n": 1, "m": 2, "rows": [[1, 2]]})")), InputError);
}

TEST(GraphJson, RoundTripAndValidation) {
  const auto g = io::graph_from_json(json::parse(R"({"nodes": 4, "edges": [[1,2],[1,3],[1,4]]})"));
  EXPECT_EQ(g.distinguished(), 3);
  EXPECT_EQ(io::graph_to_json(g)["distinguished"], 4);
  const auto again = io::graph_from_json(io::graph_to_json(g));
  EXPECT_EQ(again.edges(), g.edges());
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"nodes": 4, "edges": [[1,2],[3,4]]})")), InputError);
  EXPECT_THROW(io::graph_from_json(json::parse(R"({"nodes": 2, "edges": [[1,2,3]]})")), InputError);
}

TEST(BettiJson, KeepsNegativeDegrees) {
  const auto b = BettiNumbers::from_vector({1}, -1);
  const auto j = io::betti_to_json(b, -1);
  EXPECT_EQ(j["first_degree"], -1);
  EXPECT_EQ(io::betti_from_json(j), b);
  EXPECT_EQ(io::betti_to_json(BettiNumbers{1, 0, 2})["values"], json::parse("[1, 0, 2]"));
}

TEST(Reports, MainReportRoundTrip) {
  const auto k = SimplicialComplex::from_facets(
      3, {VertexSubset::of({0, 1}), VertexSubset::of({1, 2}), VertexSubset::of({0, 2})});
  const auto l = LambdaMap::from_matrix({{1, 0, 1}, {0, 1, 1}});
  for (std::uint32_t p : {0u, 2u, 3u}) {
    const auto r = verify_main(k, l, p);
    const auto text = io::report_to_json(r).dump();
    EXPECT_EQ(io::main_report_from_json(json::parse(text)), r);
  }
  const auto b = bbcg_check(k, Field::prime(2));
  EXPECT_EQ(io::bbcg_report_from_json(json::parse(io::report_to_json(b).dump())), b);
}

TEST(Reports, GraphReportFields) {
  const auto r = verify_graph_splitting(SimpleGraph::path(3), 3);
  const auto j = io::report_to_json(r);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["tubes"], 5);
  EXPECT_EQ(j["summands"].size(), 4u);
  const auto c = io::comparison_to_json(compare_graphs(SimpleGraph::path(4), SimpleGraph::star(3), 3));
  EXPECT_EQ(c["verdict"], "EQUIVALENT");
}

// Command-line front end: Betti tables of complexes, the Row(lambda)
// splitting check for M(K, lambda), graph associahedra, and bundled demos.
//
// Exit codes: 0 success (including EXPECTED-FAIL at p = 2), 1 a check
// failed, 2 bad input, 3 capacity exceeded.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric_split/toric_split.hpp"

namespace ts = toric_split;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

ts::Field parse_field(std::string spec) {
  for (auto& ch : spec) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (spec == "q" || spec == "0") return ts::Field::rationals();
  if (spec.size() >= 2 && spec[0] == 'f') {
    try {
      std::size_t used = 0;
      unsigned long long p = std::stoull(spec.substr(1), &used);
      if (used == spec.size() - 1) return ts::Field::prime(p);
    } catch (const std::logic_error&) {
    }
  }
  throw ts::InputError("unknown field '" + spec + "' (use q, f2, f3, f5, or f<prime>)");
}

std::uint32_t parse_prime_or_zero(long long p) {
  if (p < 0) throw ts::InputError("--p must be 0 or a prime");
  ts::Field::from_characteristic(static_cast<std::uint64_t>(p));
  return static_cast<std::uint32_t>(p);
}

void emit_json(const json& j, const std::string& target) {
  if (target.empty()) return;
  if (target == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(target);
  if (!out) throw ts::InputError("cannot write '" + target + "'");
  out << j.dump(2) << "\n";
}

/// Aligned table with one row per degree and one column per named series.
void print_betti_table(std::ostream& os, const std::vector<std::string>& names,
                       const std::vector<const ts::BettiNumbers*>& series) {
  int lo = 0, hi = 0;
  for (const auto* s : series) {
    if (!s || s->empty()) continue;
    lo = std::min(lo, s->min_degree());
    hi = std::max(hi, s->max_degree());
  }
  os << "  " << std::left << std::setw(8) << "degree";
  for (const auto& n : names) os << std::setw(12) << n;
  os << "\n";
  for (int q = lo; q <= hi; ++q) {
    os << "  " << std::setw(8) << q;
    for (const auto* s : series) {
      os << std::setw(12) << (s ? std::to_string((*s)[q]) : std::string("-"));
    }
    os << "\n";
  }
  os << std::right;
}

std::string vector_string(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Nonzero reduced Betti numbers as "b@q" pairs, or "0" when acyclic.
std::string reduced_string(const ts::BettiNumbers& b) {
  std::string s;
  for (const auto& [q, value] : b.table()) {
    s += (s.empty() ? "" : " ") + std::to_string(value) + "@" + std::to_string(q);
  }
  return s.empty() ? "0" : s;
}

std::string field_label(std::uint32_t p) { return p == 0 ? "Q (p = 0)" : "F_" + std::to_string(p); }

void print_main_report(std::ostream& os, const ts::MainReport& r) {
  os << "M(K, lambda): m = " << r.m << ", n = " << r.n << ", |ker lambda| = " << r.kernel_order
     << ", |Row(lambda)| = " << r.row_space_size
     << ", characteristic = " << (r.characteristic ? "yes" : "no") << "\n";
  os << "cube model: " << r.cells << " cells, " << r.orbit_cells << " orbit cells\n";
  os << "coefficients: " << field_label(r.p) << "\n";
  print_betti_table(os, {"quotient", "invariant", "rhs"},
                    {&r.quotient, r.invariant ? &*r.invariant : nullptr, &r.rhs});
  os << "verdict: " << ts::to_string(r.verdict) << "\n";
}

int verdict_exit(ts::Verdict v) { return v == ts::Verdict::Fail ? kExitCheckFailed : kExitOk; }

void print_bbcg_report(std::ostream& os, const ts::BbcgReport& r) {
  os << "RZ_K splitting over " << field_label(r.p) << "\n";
  print_betti_table(os, {"RZ_K", "splitting"}, {&r.lhs, &r.rhs});
  os << "verdict: " << ts::to_string(r.verdict) << "\n";
}

void print_graph_report(std::ostream& os, const ts::GraphReport& r) {
  os << "graph with " << r.nodes << " nodes: " << r.tube_count << " tubes, f-vector (";
  for (std::size_t i = 1; i < r.f_vector.size(); ++i) os << (i > 1 ? "," : "") << r.f_vector[i];
  os << "), |ker lambda_G| = " << r.kernel_order << ", " << r.cells << " cells, "
     << r.orbit_cells << " orbit cells\n";
  os << "a-numbers: " << vector_string(r.a_numbers) << "\n";
  os << "summands over " << field_label(r.p) << ":\n";
  os << "  " << std::left << std::setw(14) << "S" << std::setw(14) << "phi(I)" << std::setw(6)
     << "a" << std::setw(8) << "degree" << std::setw(14) << "b~(K_I)@deg"
     << "ok\n";
  for (const auto& s : r.summands) {
    os << "  " << std::setw(14) << s.coordinate_nodes.to_string() << std::setw(14)
       << s.even_subgraph.to_string() << std::setw(6) << s.a_number << std::setw(8)
       << s.expected_degree << std::setw(14)
       << reduced_string(s.reduced)
       << (s.ok ? "yes" : "NO") << "\n";
  }
  os << std::right;
  ts::BettiNumbers from_a;
  for (std::size_t i = 0; i < r.a_numbers.size(); ++i) {
    from_a.set(static_cast<int>(i), static_cast<std::size_t>(r.a_numbers[i]));
  }
  print_betti_table(os, {"quotient", "rhs", "a_i"}, {&r.quotient, &r.rhs, &from_a});
  os << "verdict: " << ts::to_string(r.verdict) << "\n";
}

void print_comparison(std::ostream& os, const ts::GraphComparison& c) {
  os << "a-numbers: " << vector_string(c.first_a) << " vs " << vector_string(c.second_a) << "\n";
  auto spheres = [](const std::map<int, std::size_t>& s) {
    std::string out;
    for (const auto& [d, n] : s) out += (out.empty() ? "" : " v ") + std::to_string(n) + "xS^" + std::to_string(d);
    return out.empty() ? std::string("*") : out;
  };
  os << "summands:  " << spheres(c.first_spheres) << "  vs  " << spheres(c.second_spheres) << "\n";
  os << "verdict: " << (c.equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT") << "\n";
}

// Bundled inputs for the demos.
ts::SimplicialComplex triangle_boundary() {
  return ts::SimplicialComplex::from_facets(
      3, {ts::VertexSubset::of({0, 1}), ts::VertexSubset::of({1, 2}), ts::VertexSubset::of({0, 2})});
}

int run_demo(const std::string& which) {
  std::ostream& os = std::cout;
  if (which == "rp2") {
    auto k = triangle_boundary();
    auto l = ts::LambdaMap::from_matrix({{1, 0, 1}, {0, 1, 1}});
    os << "K = boundary of a triangle, lambda = [[1,0,1],[0,1,1]]: M(K, lambda) = RP^2.\n"
       << "Every nonempty I in Row(lambda) is an edge of K, so the splitting side is a point.\n\n";
    int code = kExitOk;
    for (std::uint32_t p : {0u, 3u, 5u, 2u}) {
      auto r = ts::verify_main(k, l, p);
      print_main_report(os, r);
      os << "\n";
      if (r.verdict == ts::Verdict::Fail) code = kExitCheckFailed;
      if (p == 2 && r.verdict != ts::Verdict::ExpectedFail) code = kExitCheckFailed;
    }
    return code;
  }
  if (which == "p4-vs-claw") {
    auto p4 = ts::SimpleGraph::path(4);
    auto claw = ts::SimpleGraph::star(3);
    int code = kExitOk;
    for (const auto& [name, g] : {std::pair{"P_4", p4}, std::pair{"K_{1,3}", claw}}) {
      os << name << ":\n";
      auto r = ts::verify_graph_splitting(g, 3);
      print_graph_report(os, r);
      os << "\n";
      if (r.verdict != ts::Verdict::Pass) code = kExitCheckFailed;
    }
    auto c = ts::compare_graphs(p4, claw, 3);
    os << "P_4 vs K_{1,3} at p = 3:\n";
    print_comparison(os, c);
    os << "mod 2 Betti numbers: P_4 " << ts::quotient_betti(ts::build_tubing_complex(p4), ts::lambda_g(p4), ts::Field::prime(2)).to_string()
       << ", K_{1,3} " << ts::quotient_betti(ts::build_tubing_complex(claw), ts::lambda_g(claw), ts::Field::prime(2)).to_string() << "\n";
    if (!c.equivalent) code = kExitCheckFailed;
    return code;
  }
  if (which == "bbcg") {
    auto k = triangle_boundary();
    os << "lambda = identity on the boundary of a triangle: M(K, lambda) = RZ_K = S^2.\n\n";
    int code = kExitOk;
    for (std::uint32_t p : {2u, 0u}) {
      auto r = ts::bbcg_check(k, ts::Field::from_characteristic(p));
      print_bbcg_report(os, r);
      os << "\n";
      if (r.verdict != ts::Verdict::Pass) code = kExitCheckFailed;
    }
    auto r = ts::verify_main(k, ts::LambdaMap::identity(3), 0);
    print_main_report(os, r);
    if (r.verdict != ts::Verdict::Pass) code = kExitCheckFailed;
    return code;
  }
  throw ts::InputError("unknown demo '" + which + "' (rp2, p4-vs-claw, bbcg)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of odd-primary splittings of real toric spaces"};
  app.require_subcommand(1);

  std::string in_path, in2_path, k_path, lambda_path, json_target, field_spec = "q", out_path;
  long long p = 3;

  auto* complex_cmd = app.add_subcommand("complex", "Simplicial complex utilities");
  complex_cmd->require_subcommand(1);
  auto* complex_betti = complex_cmd->add_subcommand("betti", "Reduced Betti numbers of |K|");
  complex_betti->add_option("--in", in_path, "complex JSON")->required();
  complex_betti->add_option("--field", field_spec, "q, f2, f3, f5 or f<prime>");
  complex_betti->add_option("--json", json_target, "write the JSON report to a file, or - for stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Compare the three Betti pipelines for M(K, lambda)");
  verify_cmd->add_option("--k", k_path, "complex JSON")->required();
  verify_cmd->add_option("--lambda", lambda_path, "lambda JSON")->required();
  verify_cmd->add_option("--p", p, "0 for Q, else a prime")->required();
  verify_cmd->add_option("--json", json_target, "write the JSON report to a file, or - for stdout");

  auto* bbcg_cmd = app.add_subcommand("bbcg", "Check the identity-lambda splitting of RZ_K");
  bbcg_cmd->add_option("--k", k_path, "complex JSON")->required();
  bbcg_cmd->add_option("--field", field_spec, "q, f2, f3, f5 or f<prime>");
  bbcg_cmd->add_option("--json", json_target, "write the JSON report to a file, or - for stdout");

  auto* graph_cmd = app.add_subcommand("graph", "Graph associahedra and M(G)");
  graph_cmd->require_subcommand(1);
  auto* g_tubes = graph_cmd->add_subcommand("tubes", "List the tubes");
  g_tubes->add_option("--in", in_path, "graph JSON")->required();
  auto* g_complex = graph_cmd->add_subcommand("complex", "Emit the tubing complex and lambda_G as JSON");
  g_complex->add_option("--in", in_path, "graph JSON")->required();
  g_complex->add_option("--out", out_path, "complex JSON output (default stdout)");
  g_complex->add_option("--lambda-out", lambda_path, "lambda_G JSON output");
  auto* g_anum = graph_cmd->add_subcommand("a-numbers", "Signed and unsigned a-numbers");
  g_anum->add_option("--in", in_path, "graph JSON")->required();
  auto* g_verify = graph_cmd->add_subcommand("verify", "Check the splitting of Sigma M(G)");
  g_verify->add_option("--in", in_path, "graph JSON")->required();
  g_verify->add_option("--p", p, "0 for Q, else an odd prime")->required();
  g_verify->add_option("--json", json_target, "write the JSON report to a file, or - for stdout");
  auto* g_compare = graph_cmd->add_subcommand("compare", "Compare the splittings of two graphs");
  g_compare->add_option("--in", in_path, "first graph JSON")->required();
  g_compare->add_option("--in2", in2_path, "second graph JSON")->required();
  g_compare->add_option("--p", p, "0 for Q, else an odd prime")->required();
  g_compare->add_option("--json", json_target, "write the JSON report to a file, or - for stdout");

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "Bundled scenarios");
  demo_cmd->add_option("name", demo_name, "rp2, p4-vs-claw or bbcg")
      ->required()
      ->check(CLI::IsMember({"rp2", "p4-vs-claw", "bbcg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const bool quiet = json_target == "-";
  std::ostream& os = std::cout;
  try {
    if (*complex_betti) {
      const auto k = ts::io::complex_from_json(ts::io::read_json_file(in_path));
      const auto field = parse_field(field_spec);
      const auto b = ts::reduced_betti(k, field);
      if (!quiet) {
        os << "reduced Betti numbers of |K| over " << field.name() << " (m = " << k.vertex_count()
           << ", " << k.faces().size() << " faces)\n";
        print_betti_table(os, {"b~"}, {&b});
      }
      emit_json({{"kind", "complex-betti"}, {"field", field.name()},
                 {"reduced_betti", ts::io::betti_to_json(b, -1)}},
                json_target);
      return kExitOk;
    }
    if (*verify_cmd) {
      const auto k = ts::io::complex_from_json(ts::io::read_json_file(k_path));
      const auto l = ts::io::lambda_from_json(ts::io::read_json_file(lambda_path));
      const auto r = ts::verify_main(k, l, parse_prime_or_zero(p));
      if (!quiet) print_main_report(os, r);
      emit_json(ts::io::report_to_json(r), json_target);
      return verdict_exit(r.verdict);
    }
    if (*bbcg_cmd) {
      const auto k = ts::io::complex_from_json(ts::io::read_json_file(k_path));
      const auto r = ts::bbcg_check(k, parse_field(field_spec));
      if (!quiet) print_bbcg_report(os, r);
      emit_json(ts::io::report_to_json(r), json_target);
      return verdict_exit(r.verdict);
    }
    if (*g_tubes) {
      const auto g = ts::io::graph_from_json(ts::io::read_json_file(in_path));
      const auto list = ts::tubes(g);
      os << list.size() << " tubes\n";
      for (std::size_t i = 0; i < list.size(); ++i) {
        os << "  " << std::setw(3) << i + 1 << "  " << list[i].nodes.to_string() << "\n";
      }
      return kExitOk;
    }
    if (*g_complex) {
      const auto g = ts::io::graph_from_json(ts::io::read_json_file(in_path));
      const auto k = ts::build_tubing_complex(g);
      emit_json(ts::io::complex_to_json(k), out_path.empty() ? "-" : out_path);
      if (!lambda_path.empty()) emit_json(ts::io::lambda_to_json(ts::lambda_g(g)), lambda_path);
      return kExitOk;
    }
    if (*g_anum) {
      const auto g = ts::io::graph_from_json(ts::io::read_json_file(in_path));
      ts::ANumberTable table(g);
      os << "sa(G) = " << table.sa(g.all_nodes()) << "\n";
      os << "a-numbers: " << vector_string(ts::a_numbers(g)) << "\n";
      return kExitOk;
    }
    if (*g_verify) {
      const auto g = ts::io::graph_from_json(ts::io::read_json_file(in_path));
      const auto prime = parse_prime_or_zero(p);
      if (prime == 2) throw ts::InputError("graph verify needs an odd prime or 0");
      const auto r = ts::verify_graph_splitting(g, prime);
      if (!quiet) print_graph_report(os, r);
      emit_json(ts::io::report_to_json(r), json_target);
      return verdict_exit(r.verdict);
    }
    if (*g_compare) {
      const auto a = ts::io::graph_from_json(ts::io::read_json_file(in_path));
      const auto b = ts::io::graph_from_json(ts::io::read_json_file(in2_path));
      const auto prime = parse_prime_or_zero(p);
      if (prime == 2) throw ts::InputError("graph compare needs an odd prime or 0");
      const auto c = ts::compare_graphs(a, b, prime);
      if (!quiet) print_comparison(os, c);
      emit_json(ts::io::comparison_to_json(c), json_target);
      return kExitOk;
    }
    if (*demo_cmd) return run_demo(demo_name);
  } catch (const ts::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ts::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ts::CoefficientDomainError& e) {
    std::cerr << "coefficient error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ts::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

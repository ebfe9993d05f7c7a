// qcheck: command-line verification runs over the quaternionic constructions.
//
//   qcheck {algebra|tree|witness|fingerprint} -p <prime> [-r <radius>]
//          [-l <levels>] [--mode division|split] [--json] [--dot <path>]
//          [--precision N] [--budget V] [--seed S]
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/config error
// (including exhausted budgets or precision, which are remedied by flags).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qv/fingerprint.hpp"
#include "qv/gamma.hpp"
#include "qv/hilbert.hpp"
#include "qv/lattice.hpp"
#include "qv/order.hpp"
#include "qv/tree.hpp"

using json = nlohmann::ordered_json;
using namespace qv;

namespace {

// ---------------------------------------------------------------- formatting

json rat_array(const std::array<Rat, 4>& c) {
  json out = json::array();
  for (const Rat& x : c) out.push_back(to_string(x));
  return out;
}

json order_json(const Order& O, const Int& p) {
  json basis = json::array();
  for (const Quat& b : O.basis) basis.push_back(rat_array(b.c));
  return json{{"prime", p.str()},
              {"basis", std::move(basis)},
              {"discriminant", reduced_discriminant(O).str()}};
}

json mat2mod_json(const Mat2Mod& M) {
  return json::array({json::array({M.a[0].str(), M.a[1].str()}),
                      json::array({M.a[2].str(), M.a[3].str()})});
}

json splitting_json(const SplittingData& S) {
  json images = json::array();
  for (const Mat2Mod& M : S.unit_images) images.push_back(mat2mod_json(M));
  return json{{"prime", S.l.str()},
              {"modulus", S.modulus.str()},
              {"images", std::move(images)}};
}

json ball_json(const TreeBall& ball) {
  json spheres = json::array();
  for (const auto& sphere : ball.spheres) {
    json layer = json::array();
    for (const VertexForm& v : sphere) layer.push_back(v.str());
    spheres.push_back(std::move(layer));
  }
  json edges = json::array();
  for (const auto& [a, b] : ball.edges) edges.push_back(json::array({a, b}));
  json sizes = json::array();
  for (const auto& sphere : ball.spheres)
    sizes.push_back(static_cast<long long>(sphere.size()));
  return json{{"center", ball.center.str()},
              {"radius", ball.radius},
              {"degree", ball.degree},
              {"vertex_count", ball.vertex_count},
              {"sphere_sizes", std::move(sizes)},
              {"spheres", std::move(spheres)},
              {"edges", std::move(edges)}};
}

void write_dot(const TreeBall& ball, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("--dot", "cannot open " + path);
  out << "graph lattice_tree {\n";
  out << "  \"" << ball.center.str() << "\";\n";
  std::vector<const VertexForm*> flat = ball.flat();
  for (const auto& [a, b] : ball.edges)
    out << "  \"" << flat[static_cast<std::size_t>(a)]->str() << "\" -- \""
        << flat[static_cast<std::size_t>(b)]->str() << "\";\n";
  out << "}\n";
}

void emit(const json& doc, bool as_json) {
  if (as_json) std::cout << doc.dump(2) << "\n";
}

// ------------------------------------------------------------------ commands

int cmd_algebra(long long p_in, bool as_json, long long seed) {
  Int p(p_in);
  QuaternionAlgebra A = choose_algebra(p);
  RamificationReport ram = ramification(A.a, A.b);
  Order O = maximal_order(A, p);
  Int disc = reduced_discriminant(O);

  // Sampled norm checks: positive definiteness and multiplicativity of nrd.
  std::mt19937_64 rng(static_cast<unsigned long long>(seed));
  std::uniform_int_distribution<int> coeff(-9, 9);
  const int samples = 20;
  bool definite = true, multiplicative = true;
  auto draw = [&] {
    Quat x;
    for (int i = 0; i < 4; ++i) x.c[i] = Rat(coeff(rng));
    return x;
  };
  for (int s = 0; s < samples; ++s) {
    Quat x = draw(), y = draw();
    if (!x.is_zero() && nrd(A, x) <= 0) definite = false;
    if (nrd(A, qmul(A, x, y)) != nrd(A, x) * nrd(A, y)) multiplicative = false;
  }

  std::vector<Place> expected{Place::at_prime(p), Place::at_infinity()};
  bool ram_ok = ram.ramified == expected;
  bool pass = ram_ok && ram.product_is_one && disc == p && definite && multiplicative;

  if (as_json) {
    json symbols = json::array();
    for (const auto& [place, val] : ram.symbols)
      symbols.push_back(json{{"place", place.str()}, {"symbol", val}});
    json ramified = json::array();
    for (const Place& v : ram.ramified) ramified.push_back(v.str());
    emit(json{{"command", "algebra"},
              {"p", p_in},
              {"a", to_string(A.a)},
              {"b", to_string(A.b)},
              {"symbols", std::move(symbols)},
              {"ramified", std::move(ramified)},
              {"product_is_one", ram.product_is_one},
              {"order", order_json(O, p)},
              {"discriminant", disc.str()},
              {"norm_checks",
               json{{"samples", samples},
                    {"seed", seed},
                    {"definite", definite},
                    {"multiplicative", multiplicative}}},
              {"pass", pass}},
         true);
  } else {
    std::cout << "algebra p=" << p_in << ": (a, b) = (" << to_string(A.a) << ", "
              << to_string(A.b) << ")\n";
    std::cout << "hilbert symbols:\n";
    for (const auto& [place, val] : ram.symbols)
      std::cout << "  place " << place.str() << ": " << (val > 0 ? "+1" : "-1") << "\n";
    std::cout << "ramified places: {";
    for (std::size_t i = 0; i < ram.ramified.size(); ++i)
      std::cout << (i ? ", " : "") << ram.ramified[i].str();
    std::cout << "}\n";
    std::cout << "product formula: " << (ram.product_is_one ? "ok" : "VIOLATED") << "\n";
    std::cout << "maximal order basis:";
    for (const Quat& b : O.basis) std::cout << "  " << b.str();
    std::cout << "\nreduced discriminant: " << disc.str() << "\n";
    std::cout << "norm checks (" << samples << " samples, seed " << seed
              << "): definite " << (definite ? "ok" : "FAILED") << ", multiplicative "
              << (multiplicative ? "ok" : "FAILED") << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_tree(long long p_in, long long radius, const std::string& mode, bool as_json,
             const std::string& dot_path, int precision, long long budget) {
  Int p(p_in);
  VertexForm origin;
  TreeBall ball;
  if (mode == "division") {
    QuaternionAlgebra A = choose_algebra(p);
    DivisionContext ctx(A, p, precision);
    ball = tree_ball(ctx, origin, radius, budget);
  } else {
    SplitContext ctx(p, precision);
    ball = tree_ball(ctx, origin, radius, budget);
  }
  long long split_reference = p_in + 1;
  // Split mode must realize the reference degree; the division-mode degree is
  // reported next to it rather than asserted.
  bool pass = mode == "division" || ball.degree == split_reference;

  if (!dot_path.empty()) write_dot(ball, dot_path);

  if (as_json) {
    json doc{{"command", "tree"}, {"p", p_in}, {"mode", mode}};
    doc.update(ball_json(ball));
    doc["split_reference_degree"] = split_reference;
    doc["pass"] = pass;
    emit(doc, true);
  } else {
    std::cout << "tree p=" << p_in << " mode=" << mode << " radius=" << radius
              << " (precision " << precision << ", budget " << budget << ")\n";
    std::cout << "degree: " << ball.degree << " (split-case reference p+1 = "
              << split_reference << ")\n";
    std::cout << "sphere sizes:";
    for (const auto& sphere : ball.spheres) std::cout << " " << sphere.size();
    std::cout << "\nvertices: " << ball.vertex_count
              << ", edges: " << ball.edges.size() << "\n";
    std::cout << "tree invariants: ok\n";
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_witness(long long p_in, bool as_json, int precision, long long budget) {
  Int p(p_in);
  QuaternionAlgebra A = choose_algebra(p);
  Order O = maximal_order(A, p);
  DivisionContext ctx(A, p, precision);
  std::vector<GammaElement> gens = gamma_generators(O, p);
  GammaElement g = gens.back();  // diag(pi, conj(pi)/p), reduced norm 1
  WitnessReport rep = witness_check(ctx, g, budget);

  if (as_json) {
    json mat = json::array();
    for (int r = 0; r < 2; ++r) {
      json row = json::array();
      for (int c = 0; c < 2; ++c) row.push_back(rat_array(g.mat.m[r][c].c));
      mat.push_back(std::move(row));
    }
    json powers = json::array();
    for (long long d : rep.power_distances) powers.push_back(d);
    emit(json{{"command", "witness"},
              {"p", p_in},
              {"witness", std::move(mat)},
              {"ball_radius", rep.ball_radius},
              {"ball_vertices", rep.ball_vertices},
              {"min_displacement", rep.min_displacement},
              {"power_distances", std::move(powers)},
              {"translation_length", rep.translation_length},
              {"pass", rep.pass}},
         true);
  } else {
    std::cout << "witness p=" << p_in << " (precision " << precision << ", budget "
              << budget << ")\n";
    std::cout << "element: " << g.mat.str() << "\n";
    std::cout << "ball radius " << rep.ball_radius << ": " << rep.ball_vertices
              << " vertices\n";
    std::cout << "min displacement over the ball: " << rep.min_displacement << "\n";
    for (int n = 1; n <= 4; ++n)
      std::cout << "  d(v0, g^" << n << " v0) = "
                << rep.power_distances[static_cast<std::size_t>(n - 1)] << "\n";
    std::cout << "translation length: " << rep.translation_length << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_fingerprint(long long p_in, std::vector<long long> levels, bool as_json) {
  Int p(p_in);
  if (levels.empty())
    for (long long l : {2LL, 3LL, 5LL})
      if (l != p_in) levels.push_back(l);

  QuaternionAlgebra A = choose_algebra(p);
  Order O = maximal_order(A, p);

  bool all_pass = true;
  json results = json::array();
  std::vector<std::string> lines;
  for (long long l : levels) {
    FingerprintReport rep = fingerprint(O, p, Int(l));
    bool pass = rep.match();
    all_pass = all_pass && pass;
    if (as_json) {
      json dd = json::array(), gd = json::array();
      for (const std::string& d : rep.delta.digests) dd.push_back(d);
      for (const std::string& d : rep.gamma.digests) gd.push_back(d);
      results.push_back(json{{"l", l},
                             {"expected", rep.expected.str()},
                             {"delta_order", rep.delta.order.str()},
                             {"gamma_order", rep.gamma.order.str()},
                             {"delta_digests", std::move(dd)},
                             {"gamma_digests", std::move(gd)},
                             {"splitting", splitting_json(split_mod(O, Int(l), 1))},
                             {"pass", pass}});
    } else {
      lines.push_back("  l = " + std::to_string(l) + ": expected " +
                      rep.expected.str() + ", delta " + rep.delta.order.str() +
                      ", gamma " + rep.gamma.order.str() + "  " +
                      (pass ? "PASS" : "FAIL"));
    }
  }

  if (as_json) {
    emit(json{{"command", "fingerprint"},
              {"p", p_in},
              {"levels", levels},
              {"results", std::move(results)},
              {"pass", all_pass}},
         true);
  } else {
    std::cout << "fingerprint p=" << p_in << "\n";
    for (const std::string& line : lines) std::cout << line << "\n";
    std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification runs over the quaternionic SL(2) constructions"};
  app.require_subcommand(1);

  const CLI::Validator odd_prime(
      [](std::string& s) -> std::string {
        long long v = 0;
        try {
          v = std::stoll(s);
        } catch (const std::exception&) {
          return "not an integer: " + s;
        }
        if (v <= 2 || !is_prime(Int(v))) return "not an odd prime: " + s;
        return {};
      },
      "ODDPRIME", "odd prime");

  long long p = 0, radius = 2, tree_budget = 20000, witness_budget = 150000;
  long long seed = 12345;
  int precision = Padic::kDefaultDigits;
  bool as_json = false;
  std::string mode = "division", dot_path;
  std::vector<long long> levels;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-p,--prime", p, "odd prime p")->required()->check(odd_prime);
    cmd->add_flag("--json", as_json, "emit the JSON report instead of the table");
    cmd->add_option("--precision", precision,
                    "significant p-adic digits for local computations")
        ->envname("TOOL_PRECISION")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* algebra = app.add_subcommand("algebra", "ramification and maximal order");
  add_common(algebra);
  algebra->add_option("--seed", seed, "seed for the sampled norm checks");

  CLI::App* tree = app.add_subcommand("tree", "lattice-class tree ball");
  add_common(tree);
  tree->add_option("-r,--radius", radius, "ball radius")->check(CLI::NonNegativeNumber);
  tree->add_option("--mode", mode, "scalar context: division | split")
      ->check(CLI::IsMember({"division", "split"}));
  tree->add_option("--dot", dot_path, "write the ball as a DOT graph to this path");
  tree->add_option("--budget", tree_budget, "vertex budget")
      ->envname("TOOL_BUDGET")
      ->check(CLI::PositiveNumber);

  CLI::App* witness = app.add_subcommand("witness", "fixed-point-free translation witness");
  add_common(witness);
  witness->add_option("--budget", witness_budget, "vertex budget")
      ->envname("TOOL_BUDGET")
      ->check(CLI::PositiveNumber);

  CLI::App* fingerprint = app.add_subcommand("fingerprint", "congruence quotient comparison");
  add_common(fingerprint);
  fingerprint->add_option("-l,--level", levels, "levels l (primes coprime to p)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
    for (long long l : levels) {
      if (!is_prime(Int(l)))
        throw CLI::ValidationError("--level", "not a prime: " + std::to_string(l));
      if (l == p)
        throw CLI::ValidationError("--level", "level " + std::to_string(l) +
                                                  " equals p");
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (algebra->parsed()) return cmd_algebra(p, as_json, seed);
    if (tree->parsed())
      return cmd_tree(p, radius, mode, as_json, dot_path, precision, tree_budget);
    if (witness->parsed()) return cmd_witness(p, as_json, precision, witness_budget);
    return cmd_fingerprint(p, levels, as_json);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget)\n";
    return 2;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << " (raise --precision)\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

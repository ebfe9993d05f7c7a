// Acceptance harness: ten end-to-end criteria over the full pipeline, one
// PASS/FAIL line each. Every numeric claim is enforced exactly; elapsed time
// is printed next to the stated target but never turned into a failure,
// since wall-clock budgets are machine-dependent.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qv/congruence.hpp"
#include "qv/fingerprint.hpp"
#include "qv/gamma.hpp"
#include "qv/hilbert.hpp"
#include "qv/lattice.hpp"
#include "qv/order.hpp"
#include "qv/permgroup.hpp"
#include "qv/splitting.hpp"
#include "qv/tree.hpp"

using namespace qv;

namespace {

std::string rat_str(const Rat& x) { return to_string(x); }

// --------------------------------------------------------------- criterion 1

bool check_ramification(std::vector<std::string>& detail) {
  bool ok = true;
  for (long long pv : {3LL, 5LL, 7LL, 11LL, 13LL}) {
    Int p(pv);
    QuaternionAlgebra A = choose_algebra(p);
    RamificationReport rep = ramification(A.a, A.b);
    std::vector<Place> expected{Place::at_prime(p), Place::at_infinity()};
    bool here = rep.ramified == expected && rep.product_is_one;
    ok = ok && here;
    detail.push_back("p=" + std::to_string(pv) + ": (a, b) = (" + rat_str(A.a) +
                     ", " + rat_str(A.b) + "), ramified {" + rep.ramified[0].str() +
                     ", " + rep.ramified[1].str() + "}" + (here ? "" : "  MISMATCH"));
  }
  return ok;
}

// --------------------------------------------------------------- criterion 2

bool check_hilbert_oracle(std::vector<std::string>& detail) {
  std::vector<Place> places;
  for (long long l : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) places.push_back(Place::at_prime(Int(l)));
  places.push_back(Place::at_infinity());

  long long compared = 0, mismatches = 0;
  for (long long a = -30; a <= 30; ++a) {
    if (a == 0) continue;
    for (long long b = -30; b <= 30; ++b) {
      if (b == 0) continue;
      for (const Place& v : places) {
        ++compared;
        if (hilbert_symbol(Rat(a), Rat(b), v) != oracle::hilbert_symbol(Rat(a), Rat(b), v)) {
          ++mismatches;
          if (mismatches == 1)
            detail.push_back("first mismatch at (a, b, v) = (" + std::to_string(a) +
                             ", " + std::to_string(b) + ", " + v.str() + ")");
        }
      }
    }
  }
  detail.insert(detail.begin(), std::to_string(compared) + " symbol comparisons, " +
                                    std::to_string(mismatches) + " mismatches");
  return mismatches == 0;
}

// --------------------------------------------------------------- criterion 3

bool check_nrd_coherence(std::vector<std::string>& detail) {
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<int> coeff(-4, 4);
  bool ok = true;
  for (long long pv : {3LL, 7LL}) {
    Int p(pv);
    QuaternionAlgebra A = choose_algebra(p);
    Order O = maximal_order(A, p);
    for (long long lv : {2LL, 3LL, 5LL, 11LL}) {
      if (lv == pv) continue;
      SplittingData S = split_mod(O, Int(lv), 3);
      long long agreed = 0;
      for (int trial = 0; trial < 20; ++trial) {
        // Random matrix with entries in the order, coordinates kept exact.
        Mat2Q g;
        Mat4Mod M;
        M.modulus = S.modulus;
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) {
            std::array<Int, 4> coords{};
            Quat entry;
            for (int m = 0; m < 4; ++m) {
              coords[static_cast<std::size_t>(m)] = coeff(rng);
              entry = qadd(entry, qscale(Rat(coords[static_cast<std::size_t>(m)]),
                                         O.basis[static_cast<std::size_t>(m)]));
            }
            g.m[r][c] = entry;
            Mat2Mod img = splitting_image(S, coords);
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j)
                M.a[static_cast<std::size_t>(4 * (2 * r + i) + (2 * c + j))] =
                    img.a[static_cast<std::size_t>(2 * i + j)];
          }
        if (mat4mod_det(M) == mod_reduce(nrd_mat(A, g), S.modulus)) ++agreed;
      }
      ok = ok && agreed == 20;
      detail.push_back("p=" + std::to_string(pv) + " l=" + std::to_string(lv) +
                       " (mod l^3): " + std::to_string(agreed) + "/20 agree");
    }
  }
  return ok;
}

// --------------------------------------------------------------- criterion 4

bool check_maximal_orders(std::vector<std::string>& detail) {
  bool ok = true;
  std::string line = "reduced discriminants:";
  for (long long pv : {3LL, 5LL, 7LL, 11LL, 13LL}) {
    Int p(pv);
    Order O = maximal_order(choose_algebra(p), p);
    Int d = reduced_discriminant(O);
    ok = ok && d == p;
    line += " p=" + std::to_string(pv) + "->" + d.str();
  }
  detail.push_back(line);
  return ok;
}

// --------------------------------------------------------------- criterion 5

bool tree_shape_ok(const TreeBall& ball, long long degree) {
  if (ball.degree != degree) return false;
  // A connected acyclic graph on n vertices has n - 1 edges with distinct
  // children, each joining consecutive spheres; the builder guarantees the
  // sphere structure, so recheck the counts here.
  if (static_cast<long long>(ball.edges.size()) != ball.vertex_count - 1) return false;
  std::set<long long> children;
  for (const auto& [a, b] : ball.edges) {
    (void)a;
    children.insert(b);
  }
  if (static_cast<long long>(children.size()) != ball.vertex_count - 1) return false;
  for (std::size_t k = 1; k < ball.spheres.size(); ++k) {
    long long expect = degree;
    for (std::size_t t = 2; t <= k; ++t) expect *= degree - 1;
    if (static_cast<long long>(ball.spheres[k].size()) != expect) return false;
  }
  return true;
}

bool check_split_trees(std::vector<std::string>& detail) {
  bool ok = true;
  for (long long pv : {3LL, 5LL, 7LL}) {
    SplitContext ctx((Int(pv)));
    TreeBall ball = tree_ball(ctx, VertexForm{}, 3, 100000);
    bool here = tree_shape_ok(ball, pv + 1);
    ok = ok && here;
    std::string sizes;
    for (const auto& s : ball.spheres) sizes += " " + std::to_string(s.size());
    detail.push_back("p=" + std::to_string(pv) + ": degree " +
                     std::to_string(ball.degree) + ", spheres" + sizes +
                     (here ? "" : "  MISMATCH"));
  }
  return ok;
}

// --------------------------------------------------------------- criterion 6

bool check_division_trees(std::vector<std::string>& detail) {
  bool ok = true;
  for (long long pv : {3LL, 5LL}) {
    Int p(pv);
    DivisionContext ctx(choose_algebra(p), p);
    TreeBall ball = tree_ball(ctx, VertexForm{}, 2, 100000);
    // Degree by exhaustive line enumeration must be 1 + residue size and
    // uniform across the ball (the builder throws on any deviation).
    bool here = tree_shape_ok(ball, ctx.residue_size() + 1);
    ok = ok && here;
    detail.push_back("p=" + std::to_string(pv) + ": computed degree " +
                     std::to_string(ball.degree) + " (split-case reference p+1 = " +
                     std::to_string(pv + 1) + "), " +
                     std::to_string(ball.vertex_count) + " vertices" +
                     (here ? "" : "  MISMATCH"));
  }
  return ok;
}

// --------------------------------------------------------------- criterion 7

bool check_metric_and_action(std::vector<std::string>& detail) {
  Int p(3);
  QuaternionAlgebra A = choose_algebra(p);
  Order O = maximal_order(A, p);
  DivisionContext ctx(A, p);
  TreeBall ball = tree_ball(ctx, VertexForm{}, 2, 100000);
  std::vector<const VertexForm*> flat = ball.flat();
  std::vector<long long> depth;
  for (std::size_t k = 0; k < ball.spheres.size(); ++k)
    for (std::size_t s = 0; s < ball.spheres[k].size(); ++s)
      depth.push_back(static_cast<long long>(k));

  // Graph BFS distances from the edge list, independent of tree_distance.
  std::vector<std::vector<long long>> adj(flat.size());
  for (const auto& [a, b] : ball.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  auto bfs = [&](long long from, long long to) {
    std::vector<long long> dist(flat.size(), -1);
    std::vector<long long> queue{from};
    dist[static_cast<std::size_t>(from)] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      long long u = queue[qi];
      if (u == to) break;
      for (long long w : adj[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
    }
    return dist[static_cast<std::size_t>(to)];
  };

  std::mt19937 rng(5150777);
  std::uniform_int_distribution<std::size_t> pick(0, flat.size() - 1);
  bool symmetric = true, bfs_match = true, separated = true;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t iu = pick(rng), iv = pick(rng);
    long long duv = tree_distance(ctx, *flat[iu], *flat[iv]);
    symmetric = symmetric && duv == tree_distance(ctx, *flat[iv], *flat[iu]);
    bfs_match = bfs_match && duv == bfs(static_cast<long long>(iu), static_cast<long long>(iv));
    separated = separated && ((duv == 0) == (iu == iv || *flat[iu] == *flat[iv]));
  }

  bool triangle = true;
  for (int trial = 0; trial < 200; ++trial) {
    const VertexForm &u = *flat[pick(rng)], &v = *flat[pick(rng)], &w = *flat[pick(rng)];
    triangle = triangle &&
               tree_distance(ctx, u, w) <= tree_distance(ctx, u, v) + tree_distance(ctx, v, w);
  }

  bool isometry = true;
  std::vector<GammaElement> gens = gamma_generators(O, p);
  for (const GammaElement& g : gens) {
    for (int trial = 0; trial < 50; ++trial) {
      const VertexForm &u = *flat[pick(rng)], &v = *flat[pick(rng)];
      isometry = isometry && tree_distance(ctx, act(ctx, g.mat, u), act(ctx, g.mat, v)) ==
                                 tree_distance(ctx, u, v);
    }
  }

  detail.push_back(std::string("symmetry ") + (symmetric ? "ok" : "FAILED") +
                   ", separation " + (separated ? "ok" : "FAILED") +
                   ", BFS agreement " + (bfs_match ? "ok" : "FAILED") +
                   ", 200 triangles " + (triangle ? "ok" : "FAILED") + ", " +
                   std::to_string(gens.size()) + " generators x 50 pairs isometric " +
                   (isometry ? "ok" : "FAILED"));
  return symmetric && bfs_match && separated && triangle && isometry;
}

// --------------------------------------------------------------- criterion 8

bool check_witness(std::vector<std::string>& detail) {
  bool ok = true;
  for (long long pv : {3LL, 5LL, 7LL}) {
    Int p(pv);
    QuaternionAlgebra A = choose_algebra(p);
    Order O = maximal_order(A, p);
    DivisionContext ctx(A, p);
    WitnessReport rep = witness_check(ctx, gamma_generators(O, p).back());
    bool here = rep.pass && rep.translation_length == 2 && rep.min_displacement == 2 &&
                rep.power_distances == std::array<long long, 4>{2, 4, 6, 8};
    ok = ok && here;
    detail.push_back("p=" + std::to_string(pv) + ": length " +
                     std::to_string(rep.translation_length) + ", d(v0, g^n v0) = " +
                     std::to_string(rep.power_distances[0]) + "," +
                     std::to_string(rep.power_distances[1]) + "," +
                     std::to_string(rep.power_distances[2]) + "," +
                     std::to_string(rep.power_distances[3]) + " over " +
                     std::to_string(rep.ball_vertices) + " vertices" +
                     (here ? "" : "  MISMATCH"));
  }
  return ok;
}

// --------------------------------------------------------------- criterion 9

bool check_fingerprints(std::vector<std::string>& detail) {
  bool ok = true;
  for (long long pv : {3LL, 5LL, 7LL}) {
    Int p(pv);
    Order O = maximal_order(choose_algebra(p), p);
    for (long long lv : {2LL, 3LL, 5LL}) {
      if (lv == pv) continue;
      FingerprintReport rep = fingerprint(O, p, Int(lv));
      bool here = rep.match() && (lv != 2 || rep.expected == 20160);
      ok = ok && here;
      detail.push_back("p=" + std::to_string(pv) + " l=" + std::to_string(lv) +
                       ": expected " + rep.expected.str() + ", delta " +
                       rep.delta.order.str() + ", gamma " + rep.gamma.order.str() +
                       (here ? "" : "  MISMATCH"));
    }
  }
  return ok;
}

// -------------------------------------------------------------- criterion 10

Perm perm_from_mat2(long long l, std::array<long long, 4> m) {
  int n = static_cast<int>(l * l - 1);
  Perm p;
  p.img.assign(n, -1);
  for (int code = 1; code <= n; ++code) {
    long long v0 = code / l, v1 = code % l;
    long long w0 = ((m[0] * v0 + m[1] * v1) % l + l) % l;
    long long w1 = ((m[2] * v0 + m[3] * v1) % l + l) % l;
    p.img[code - 1] = static_cast<int>(w0 * l + w1 - 1);
  }
  return p;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, int n) {
  std::set<std::vector<int>> seen;
  std::vector<Perm> elems{Perm::identity(n)};
  seen.insert(elems[0].img);
  for (std::size_t qi = 0; qi < elems.size(); ++qi)
    for (const Perm& g : gens) {
      Perm h = p_mul(elems[qi], g);
      if (seen.insert(h.img).second) elems.push_back(h);
    }
  return elems;
}

bool check_stabilizer_chains(std::vector<std::string>& detail) {
  std::mt19937 rng(424344);
  bool ok = true;
  for (long long l : {3LL, 5LL}) {
    int n = static_cast<int>(l * l - 1);
    std::vector<Perm> full =
        closure({perm_from_mat2(l, {0, l - 1, 1, 0}), perm_from_mat2(l, {1, 1, 0, 1})}, n);
    long long agreed = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_int_distribution<std::size_t> pick(0, full.size() - 1);
      std::uniform_int_distribution<int> count(1, 3);
      std::vector<Perm> sub;
      for (int i = 0, k = count(rng); i < k; ++i) sub.push_back(full[pick(rng)]);
      if (chain_order(build_chain(n, sub)) == Int(closure(sub, n).size())) ++agreed;
    }
    ok = ok && agreed == 50;
    detail.push_back("SL(2, F_" + std::to_string(l) + "): " + std::to_string(agreed) +
                     "/50 random subgroups agree");
  }
  return ok;
}

// ------------------------------------------------------------------- harness

struct Criterion {
  std::string label;
  int target_seconds;
  std::function<bool(std::vector<std::string>&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"ramified places are exactly {p, inf} for p in {3,5,7,11,13}", 5, check_ramification},
      {"closed-form Hilbert symbols match brute-force solubility, |a|,|b| <= 30", 30,
       check_hilbert_oracle},
      {"reduced norms of 2x2 matrices match split determinants mod l^3", 10,
       check_nrd_coherence},
      {"maximal orders reach reduced discriminant p for p in {3,5,7,11,13}", 5,
       check_maximal_orders},
      {"split-mode balls are (p+1)-regular trees through radius 3", 20, check_split_trees},
      {"division-mode balls have uniform enumerated degree at radius 2", 60,
       check_division_trees},
      {"distance is a symmetric BFS-exact metric and the action is isometric", 30,
       check_metric_and_action},
      {"witness element translates with length 2 and d(v0, g^n v0) = 2n", 180, check_witness},
      {"congruence quotient orders match |SL(4, F_l)| on both sides", 300,
       check_fingerprints},
      {"stabilizer-chain orders equal brute-force closure cardinalities", 30,
       check_stabilizer_chains},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::vector<std::string> detail;
    bool ok = false;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%2zu/10] %s  %s  (%.1fs, target %ds)\n", i + 1, ok ? "PASS" : "FAIL",
                criteria[i].label.c_str(), secs, criteria[i].target_seconds);
    if (!error.empty()) std::printf("        error: %s\n", error.c_str());
    for (const std::string& line : detail) std::printf("        %s\n", line.c_str());
    if (ok) ++passed;
  }
  std::printf("acceptance: %d/10 criteria passed\n", passed);
  return passed == 10 ? 0 : 1;
}

#pragma once

// Breadth-first exploration of the lattice tree: balls with deterministic
// sphere layouts, structural invariant checks (uniform degree, no cycles),
// and the hyperbolic-translation witness for the group action.

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qv/errors.hpp"
#include "qv/gamma.hpp"
#include "qv/lattice.hpp"

namespace qv {

struct TreeBall {
  VertexForm center;
  long long radius = 0;
  long long degree = 0;  // uniform vertex degree, residue_size() + 1
  // spheres[k]: the distance-k vertices, sorted by canonical form. Vertex
  // indices flatten sphere by sphere in this order, center = 0.
  std::vector<std::vector<VertexForm>> spheres;
  // parent-child pairs (parent index, child index), ascending child index.
  std::vector<std::pair<long long, long long>> edges;
  long long vertex_count = 0;

  std::vector<const VertexForm*> flat() const;
};

// BFS ball of the given radius. Throws BudgetExceeded once more than
// `budget` vertices would be stored, and Error if the explored graph
// violates a tree invariant (degree deviation, cycle, missing parent).
template <class Ctx>
TreeBall tree_ball(const Ctx& ctx, const VertexForm& center, long long radius,
                   long long budget) {
  TreeBall ball;
  ball.center = center;
  ball.radius = radius;
  ball.degree = ctx.residue_size() + 1;
  ball.spheres.assign(1, {center});
  ball.vertex_count = 1;
  if (ball.vertex_count > budget)
    throw BudgetExceeded("vertex budget exhausted at the center");

  std::map<VertexForm, long long> index{{center, 0}};
  std::vector<VertexForm> flat{center};
  std::vector<long long> parent{-1};

  long long next_index = 1;
  long long sphere_base = 0;  // index of the first vertex of the current sphere
  for (long long k = 0; k < radius; ++k) {
    const auto& sphere = ball.spheres[static_cast<std::size_t>(k)];
    const long long sphere_size = static_cast<long long>(sphere.size());
    std::map<VertexForm, long long> pending;  // child form -> parent index
    for (std::size_t s = 0; s < sphere.size(); ++s) {
      long long vidx = sphere_base + static_cast<long long>(s);
      const VertexForm& v = sphere[s];
      std::vector<VertexForm> nbrs = neighbor_forms(ctx, v);
      if (static_cast<long long>(nbrs.size()) != ball.degree)
        throw Error("tree invariant violated: vertex degree " +
                    std::to_string(nbrs.size()) + " instead of " +
                    std::to_string(ball.degree));
      int parent_hits = 0;
      for (const VertexForm& w : nbrs) {
        if (k > 0 && w == flat[static_cast<std::size_t>(parent[static_cast<std::size_t>(vidx)])]) {
          ++parent_hits;
          continue;
        }
        if (index.count(w) || pending.count(w))
          throw Error("tree invariant violated: revisited vertex " + w.str());
        pending.emplace(w, vidx);
      }
      if (k > 0 && parent_hits != 1)
        throw Error("tree invariant violated: BFS parent seen " +
                    std::to_string(parent_hits) + " times");
    }
    ball.spheres.emplace_back();
    auto& next_sphere = ball.spheres.back();
    next_sphere.reserve(pending.size());
    for (const auto& [w, pidx] : pending) {
      if (ball.vertex_count + 1 > budget)
        throw BudgetExceeded("vertex budget " + std::to_string(budget) +
                             " exhausted at radius " + std::to_string(k + 1));
      index.emplace(w, next_index);
      flat.push_back(w);
      parent.push_back(pidx);
      ball.edges.emplace_back(pidx, next_index);
      next_sphere.push_back(w);
      ++next_index;
      ++ball.vertex_count;
    }
    // `sphere` may dangle once emplace_back above reallocates; use the saved size.
    sphere_base += sphere_size;
  }
  return ball;
}

// Exhaustive displacement scan plus powers of the candidate: the witness
// passes when min d(v, g v) over the radius-3 ball equals 2 and
// d(v0, g^n v0) = 2n for n = 1..4. A displacement of 0 anywhere refutes
// freeness outright (WitnessNotHyperbolic).
struct WitnessReport {
  long long ball_radius = 3;
  long long ball_vertices = 0;
  long long min_displacement = 0;
  std::array<long long, 4> power_distances{};
  long long translation_length = 0;  // the ball minimum
  bool pass = false;
};

WitnessReport witness_check(const DivisionContext& ctx, const GammaElement& g,
                            long long budget = 150000);

}  // namespace qv

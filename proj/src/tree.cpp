#include "qv/tree.hpp"

namespace qv {

std::vector<const VertexForm*> TreeBall::flat() const {
  std::vector<const VertexForm*> out;
  out.reserve(static_cast<std::size_t>(vertex_count));
  for (const auto& sphere : spheres)
    for (const auto& v : sphere) out.push_back(&v);
  return out;
}

WitnessReport witness_check(const DivisionContext& ctx, const GammaElement& g,
                            long long budget) {
  WitnessReport rep;
  VertexForm origin;

  TreeBall ball = tree_ball(ctx, origin, rep.ball_radius, budget);
  rep.ball_vertices = ball.vertex_count;

  bool have = false;
  for (const VertexForm* v : ball.flat()) {
    long long d = tree_distance(ctx, *v, act(ctx, g.mat, *v));
    if (d == 0)
      throw WitnessNotHyperbolic("fixed vertex " + v->str() + " in the scanned ball");
    if (!have || d < rep.min_displacement) rep.min_displacement = d;
    have = true;
  }
  rep.translation_length = rep.min_displacement;

  Mat2Q power = g.mat;
  for (int n = 1; n <= 4; ++n) {
    rep.power_distances[n - 1] = tree_distance(ctx, origin, act(ctx, power, origin));
    if (n < 4) power = m2_mul(ctx.alg, power, g.mat);
  }

  rep.pass = rep.min_displacement == 2;
  for (int n = 1; n <= 4; ++n)
    if (rep.power_distances[n - 1] != 2 * n) rep.pass = false;
  return rep;
}

}  // namespace qv

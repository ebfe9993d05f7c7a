#pragma once

// Permutation groups on explicit point sets with certified orders via a
// deterministic Schreier--Sims stabilizer chain. The matrix groups act on
// the nonzero column vectors of (Z/l)^4, indexed in base-l order.

#include <utility>
#include <vector>

#include "qv/modmat.hpp"
#include "qv/numbers.hpp"

namespace qv {

// Permutation of {0, ..., n-1}; p_mul(x, y) applies x first, then y.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  bool operator==(const Perm& o) const { return img == o.img; }
};

Perm p_mul(const Perm& x, const Perm& y);
Perm p_inv(const Perm& x);

// Nonzero vectors of (Z/l)^4: point index = (v0 l^3 + v1 l^2 + v2 l + v3) - 1.
int vector_point_count(const Int& l);
Perm perm_from_mat4(const Mat4Mod& M);

// One level of the chain: generators fixing all earlier base points, the
// orbit of this level's base point in BFS discovery order, and a Schreier
// vector (previous point, generator index) for transversal walks.
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;
  std::vector<int> orbit;
  std::vector<std::pair<int, int>> schreier;  // size n; (-2,-2) off-orbit, (-1,-1) at base
};

struct StabilizerChain {
  int n = 0;
  std::vector<ChainLevel> levels;
};

// Deterministic construction: base points are taken from `preferred` (first
// point moved by a current-level generator), falling back to the smallest
// moved point. Generators are processed in the order given.
StabilizerChain build_chain(int n, const std::vector<Perm>& gens,
                            const std::vector<int>& preferred = {});

Int chain_order(const StabilizerChain& chain);

// Convenience: chain order of the group generated by matrix images acting on
// the nonzero vectors, preferring the standard basis vectors as base points.
Int matrix_group_order(const std::vector<Mat4Mod>& gens);

}  // namespace qv

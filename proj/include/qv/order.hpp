#pragma once

// Orders in a rational quaternion algebra: full-rank lattices in the
// coordinate space of (1, i, j, k) kept in Hermite normal form, reduced
// discriminants via the trace form, and saturation of Z<1,i,j,k> to a
// maximal order.

#include <array>
#include <optional>
#include <vector>

#include "qv/quaternion.hpp"

namespace qv {

// Lattice basis rows are mat[r] / denom; mat is in Hermite normal form
// (row echelon, pivots on the diagonal and positive, entries above a pivot
// reduced modulo it), gcd(content(mat), denom) = 1. Equality of lattices is
// equality of fields.
struct QLattice {
  std::array<std::array<Int, 4>, 4> mat;
  Int denom = 1;

  bool operator==(const QLattice& o) const { return denom == o.denom && mat == o.mat; }
  Quat basis_element(int r) const;
};

// Span of a set of quaternions; throws if the span has rank < 4.
QLattice lattice_span(const std::vector<Quat>& gens);

bool lattice_contains(const QLattice& L, const Quat& x);
// Coordinates of x in the basis (always solvable, basis is full rank).
std::array<Rat, 4> lattice_coords(const QLattice& L, const Quat& x);

struct Order {
  QuaternionAlgebra A;
  QLattice lat;
  std::array<Quat, 4> basis;
};

Order order_from_lattice(const QuaternionAlgebra& A, const QLattice& L);

// Multiplicative closure of a lattice containing 1: repeatedly adjoins basis
// products until stable. Returns nullopt if the chain fails to stabilize
// within a fixed number of rounds (the candidate does not generate an order).
std::optional<QLattice> multiplicative_closure(const QuaternionAlgebra& A, QLattice L);

// det(trd(b_i * b_j)) of the basis.
Rat trace_form_det(const QuaternionAlgebra& A, const QLattice& L);

// Reduced discriminant d with d^2 = |trace_form_det|; orders give a positive
// integer (anything else throws).
Int reduced_discriminant(const QuaternionAlgebra& A, const QLattice& L);
Int reduced_discriminant(const Order& O);

// Saturates Z<1,i,j,k> to an order of reduced discriminant exactly p.
// Each round adjoins an integral element with denominator a prime dividing
// the discriminant excess and strictly decreases the discriminant;
// SaturationFailed if no admissible element exists before reaching p.
Order maximal_order(const QuaternionAlgebra& A, const Int& p);

// Coordinates of the products b_i * b_j in the order basis; integral because
// the order is multiplicatively closed.
using StructureConstants = std::array<std::array<std::array<Int, 4>, 4>, 4>;
StructureConstants structure_constants(const Order& O);

}  // namespace qv

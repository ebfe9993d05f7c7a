#pragma once

// The S-arithmetic group SL(4, Z[1/p]): elementary generators, reduction
// modulo an integer coprime to p, principal congruence membership, and the
// order of SL(4, F_l) for the fingerprint comparison.

#include <array>
#include <vector>

#include "qv/modmat.hpp"
#include "qv/numbers.hpp"

namespace qv {

// 4x4 rational matrix; the group elements we build have determinant 1 and
// p-power denominators.
struct SMatrix {
  std::array<std::array<Rat, 4>, 4> m{};

  static SMatrix identity();
  bool operator==(const SMatrix& o) const { return m == o.m; }
};

SMatrix smat_mul(const SMatrix& x, const SMatrix& y);
Rat smat_det(const SMatrix& x);

// e_{ij}(t) = I + t E_{ij}, i != j.
SMatrix elementary(int i, int j, const Rat& t);

// The 24 generators e_{ij}(1) and e_{ij}(1/p), ordered row-major over the
// off-diagonal positions (i, j), integral entry before the 1/p entry.
std::vector<SMatrix> delta_generators(const Int& p);

// Entrywise reduction mod n >= 2. Denominators must be units mod n
// (ModulusNotCoprime), and the reduced matrix must have determinant 1 mod n
// (DeterminantNotOne -- the inputs are meant to be unimodular).
Mat4Mod reduce_mod(const SMatrix& x, const Int& n);

// Principal congruence subgroup of level n: x = I mod n.
bool in_principal_congruence(const SMatrix& x, const Int& n);
bool in_principal_congruence(const Mat4Mod& x);

// |SL(4, F_l)| = l^6 (l^2 - 1)(l^3 - 1)(l^4 - 1) for l prime.
Int sl4_order(const Int& l);

}  // namespace qv

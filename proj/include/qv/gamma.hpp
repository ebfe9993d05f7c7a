#pragma once

// The S-arithmetic group inside SL(2) of the quaternion algebra: elements
// are 2x2 matrices with entries in O[1/p] and reduced norm 1. Reduction
// through a residue splitting lands in SL(4, Z/l^k).

#include <vector>

#include "qv/mat2.hpp"
#include "qv/modmat.hpp"
#include "qv/order.hpp"
#include "qv/splitting.hpp"

namespace qv {

struct GammaElement {
  Mat2Q mat;
  long long denom_exp = 0;  // minimal e >= 0 with p^e * entries in O
};

// Validates entry denominators (p-powers via order coordinates) and reduced
// norm 1 (DeterminantNotOne otherwise).
GammaElement make_gamma_element(const Order& O, const Int& p, const Mat2Q& m);

// Generating set: for each order basis element x both unipotents
// [[1, x], [0, 1]] and [[1, 0], [x, 1]], plus the norm-p witness
// diag(pi, conj(pi)/p) where pi is an order element of reduced norm p
// (pi = j whenever b = -p). Nine elements, deterministic order.
std::vector<GammaElement> gamma_generators(const Order& O, const Int& p);

// Blockwise reduction of a Gamma element through the splitting; checks the
// result has determinant 1 (DeterminantNotOne flags an internal bug).
// Requires gcd(l, p) = 1 (ModulusNotCoprime).
Mat4Mod reduce_gamma(const Order& O, const Int& p, const SplittingData& S,
                     const GammaElement& g);

}  // namespace qv

#pragma once

// Residue splittings O/l^k O = M2(Z/l^k) at primes l coprime to the
// discriminant: zero-divisor search, idempotent lifting, and the induced
// 2x2 matrix images of order elements.

#include <array>

#include "qv/modmat.hpp"
#include "qv/order.hpp"

namespace qv {

struct SplittingData {
  Int l;
  int k = 1;
  Int modulus;  // l^k

  // Matrix images of the order basis elements and of 1, i, j, k.
  std::array<Mat2Mod, 4> basis_images;
  std::array<Mat2Mod, 4> unit_images;

  // Internals of the splitting: structure constants mod l^k, the module
  // basis rows (coordinates in the order basis) and the column pair + inverse
  // used to solve for matrix entries.
  std::array<std::array<std::array<Int, 4>, 4>, 4> table;
  std::array<std::array<Int, 4>, 2> module_basis;
  int piv0 = 0, piv1 = 1;
  std::array<Int, 4> pivot_inverse;  // 2x2 inverse of module_basis[:, piv]
};

// Builds the splitting at l^k. l must be coprime to the reduced discriminant
// (and in particular to p). Deterministic: lexicographically first zero
// divisor and idempotent. NoZeroDivisor if the residue algebra fails to
// split (which signals a bug for admissible l).
SplittingData split_mod(const Order& O, const Int& l, int k);

// Image of an order element given by its coordinates in the order basis.
Mat2Mod splitting_image(const SplittingData& S, const std::array<Int, 4>& coords);

// Image of an element of O[1/p]: rational order coordinates whose
// denominators must be invertible mod l^k (ModulusNotCoprime otherwise).
Mat2Mod splitting_image(const SplittingData& S, const std::array<Rat, 4>& coords);

}  // namespace qv

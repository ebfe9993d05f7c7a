#pragma once

// Congruence fingerprints at a prime l: reduce the generators of both
// constructions -- SL(4, Z[1/p]) via entrywise reduction, and the
// quaternionic SL(2) via a residue splitting -- into SL(4, F_l), then
// certify that each generated image has the full order |SL(4, F_l)|.

#include <string>
#include <vector>

#include "qv/congruence.hpp"
#include "qv/gamma.hpp"
#include "qv/modmat.hpp"
#include "qv/numbers.hpp"
#include "qv/order.hpp"
#include "qv/permgroup.hpp"

namespace qv {

// FNV-1a (64-bit) over the modulus and entries, as 16 hex digits.
std::string digest_mat4(const Mat4Mod& M);

struct FingerprintSide {
  std::vector<Mat4Mod> images;
  std::vector<std::string> digests;
  Int order;
};

struct FingerprintReport {
  Int p;
  Int l;
  Int expected;           // |SL(4, F_l)|
  FingerprintSide delta;  // S-arithmetic side, reduced mod l
  FingerprintSide gamma;  // quaternionic side, through the splitting mod l

  bool match() const { return delta.order == expected && gamma.order == expected; }
};

// l must be an odd-or-2 prime different from p (the splitting requires l
// coprime to the discriminant). O is the maximal order produced for p.
FingerprintReport fingerprint(const Order& O, const Int& p, const Int& l);

}  // namespace qv

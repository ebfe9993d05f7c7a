#pragma once

// 2x2 matrices over a quaternion algebra, and their reduced norm computed by
// embedding into 4x4 matrices over the commutative ring Q[w]/(w^2 - a) and
// taking a division-free determinant. The determinant identity
// det = (reduced norm) is polynomial, so it holds whether or not a is a
// square (the split case makes the ring non-integral, which the cofactor
// expansion does not mind).

#include <array>
#include <string>

#include "qv/quaternion.hpp"

namespace qv {

// Element u + v*w of Q[w]/(w^2 - a); the defining a travels with each op.
struct QuadExt {
  Rat u{0}, v{0};
  bool operator==(const QuadExt& o) const { return u == o.u && v == o.v; }
};

QuadExt qe_add(const QuadExt& x, const QuadExt& y);
QuadExt qe_sub(const QuadExt& x, const QuadExt& y);
QuadExt qe_neg(const QuadExt& x);
QuadExt qe_mul(const Rat& a, const QuadExt& x, const QuadExt& y);
QuadExt qe_conj(const QuadExt& x);  // w -> -w

struct Mat2Q {
  std::array<std::array<Quat, 2>, 2> m;

  static Mat2Q identity();
  bool operator==(const Mat2Q& o) const { return m == o.m; }
  std::string str() const;
};

Mat2Q m2_mul(const QuaternionAlgebra& A, const Mat2Q& x, const Mat2Q& y);
Mat2Q m2_pow(const QuaternionAlgebra& A, Mat2Q x, unsigned long long e);

using Mat4F = std::array<std::array<QuadExt, 4>, 4>;

// Block embedding M2(A) -> M4(Q[w]/(w^2-a)): each entry q = z + w*j with
// z, w in Q(i) maps to [[z, w], [b*conj(w), conj(z)]].
Mat4F embed_mat2(const QuaternionAlgebra& A, const Mat2Q& g);

QuadExt det4(const Rat& a, const Mat4F& M);

// Reduced norm of g: determinant of the embedded 4x4. The result must land
// in Q (no w component); anything else is a bug (NonRationalNorm).
Rat nrd_mat(const QuaternionAlgebra& A, const Mat2Q& g);

}  // namespace qv

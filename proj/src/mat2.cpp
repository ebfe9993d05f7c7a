#include "qv/mat2.hpp"

#include <sstream>

namespace qv {

QuadExt qe_add(const QuadExt& x, const QuadExt& y) { return {x.u + y.u, x.v + y.v}; }
QuadExt qe_sub(const QuadExt& x, const QuadExt& y) { return {x.u - y.u, x.v - y.v}; }
QuadExt qe_neg(const QuadExt& x) { return {-x.u, -x.v}; }
QuadExt qe_mul(const Rat& a, const QuadExt& x, const QuadExt& y) {
  return {x.u * y.u + a * x.v * y.v, x.u * y.v + x.v * y.u};
}
QuadExt qe_conj(const QuadExt& x) { return {x.u, -x.v}; }

Mat2Q Mat2Q::identity() {
  Mat2Q g;
  g.m[0][0] = Quat::one();
  g.m[1][1] = Quat::one();
  return g;
}

std::string Mat2Q::str() const {
  std::ostringstream os;
  os << "[[" << m[0][0].str() << ", " << m[0][1].str() << "], [" << m[1][0].str() << ", "
     << m[1][1].str() << "]]";
  return os.str();
}

Mat2Q m2_mul(const QuaternionAlgebra& A, const Mat2Q& x, const Mat2Q& y) {
  Mat2Q z;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      z.m[r][c] = qadd(qmul(A, x.m[r][0], y.m[0][c]), qmul(A, x.m[r][1], y.m[1][c]));
  return z;
}

Mat2Q m2_pow(const QuaternionAlgebra& A, Mat2Q x, unsigned long long e) {
  Mat2Q r = Mat2Q::identity();
  while (e) {
    if (e & 1) r = m2_mul(A, r, x);
    x = m2_mul(A, x, x);
    e >>= 1;
  }
  return r;
}

Mat4F embed_mat2(const QuaternionAlgebra& A, const Mat2Q& g) {
  Mat4F M;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Quat& q = g.m[r][c];
      QuadExt z{q.c[0], q.c[1]};  // coefficient of 1 and i
      QuadExt w{q.c[2], q.c[3]};  // q = z + w*j
      M[2 * r + 0][2 * c + 0] = z;
      M[2 * r + 0][2 * c + 1] = w;
      M[2 * r + 1][2 * c + 0] = qe_mul(A.a, QuadExt{A.b, 0}, qe_conj(w));
      M[2 * r + 1][2 * c + 1] = qe_conj(z);
    }
  }
  return M;
}

namespace {
QuadExt det3(const Rat& a, const std::array<std::array<QuadExt, 3>, 3>& M) {
  QuadExt d{Rat(0), Rat(0)};
  for (int c = 0; c < 3; ++c) {
    int lo = (c == 0) ? 1 : 0;
    int hi = (c == 2) ? 1 : 2;
    QuadExt minor = qe_sub(qe_mul(a, M[1][lo], M[2][hi]), qe_mul(a, M[1][hi], M[2][lo]));
    QuadExt term = qe_mul(a, M[0][c], minor);
    d = (c % 2 == 0) ? qe_add(d, term) : qe_sub(d, term);
  }
  return d;
}
}  // namespace

QuadExt det4(const Rat& a, const Mat4F& M) {
  QuadExt d{Rat(0), Rat(0)};
  for (int c = 0; c < 4; ++c) {
    std::array<std::array<QuadExt, 3>, 3> sub;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == c) continue;
        sub[r - 1][cc++] = M[r][k];
      }
    }
    QuadExt term = qe_mul(a, M[0][c], det3(a, sub));
    d = (c % 2 == 0) ? qe_add(d, term) : qe_sub(d, term);
  }
  return d;
}

Rat nrd_mat(const QuaternionAlgebra& A, const Mat2Q& g) {
  QuadExt d = det4(A.a, embed_mat2(A, g));
  if (d.v != 0)
    throw NonRationalNorm("determinant of embedded matrix has a w-component: " +
                          to_string(d.v));
  return d.u;
}

}  // namespace qv

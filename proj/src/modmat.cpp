#include "qv/modmat.hpp"

namespace qv {

Mat2Mod mat2mod_mul(const Int& m, const Mat2Mod& x, const Mat2Mod& y) {
  Mat2Mod z;
  z.a[0] = mod_reduce(Int(x.a[0] * y.a[0] + x.a[1] * y.a[2]), m);
  z.a[1] = mod_reduce(Int(x.a[0] * y.a[1] + x.a[1] * y.a[3]), m);
  z.a[2] = mod_reduce(Int(x.a[2] * y.a[0] + x.a[3] * y.a[2]), m);
  z.a[3] = mod_reduce(Int(x.a[2] * y.a[1] + x.a[3] * y.a[3]), m);
  return z;
}

Mat2Mod mat2mod_add(const Int& m, const Mat2Mod& x, const Mat2Mod& y) {
  Mat2Mod z;
  for (int t = 0; t < 4; ++t) z.a[t] = mod_reduce(Int(x.a[t] + y.a[t]), m);
  return z;
}

Mat2Mod mat2mod_scale(const Int& m, const Int& s, const Mat2Mod& x) {
  Mat2Mod z;
  for (int t = 0; t < 4; ++t) z.a[t] = mod_reduce(Int(s * x.a[t]), m);
  return z;
}

Int mat2mod_det(const Int& m, const Mat2Mod& x) {
  return mod_reduce(Int(x.a[0] * x.a[3] - x.a[1] * x.a[2]), m);
}

Mat4Mod Mat4Mod::identity(const Int& m) {
  Mat4Mod x;
  x.modulus = m;
  for (int t = 0; t < 16; ++t) x.a[t] = (t % 5 == 0) ? 1 : 0;
  return x;
}

Mat4Mod mat4mod_mul(const Mat4Mod& x, const Mat4Mod& y) {
  if (x.modulus != y.modulus) throw Error("modulus mismatch");
  Mat4Mod z;
  z.modulus = x.modulus;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Int acc = 0;
      for (int t = 0; t < 4; ++t) acc += x.a[4 * r + t] * y.a[4 * t + c];
      z.a[4 * r + c] = mod_reduce(acc, x.modulus);
    }
  }
  return z;
}

Int mat4mod_det(const Mat4Mod& x) {
  const Int& m = x.modulus;
  auto at = [&](int r, int c) -> const Int& { return x.a[4 * r + c]; };
  auto det2 = [&](int r0, int r1, int c0, int c1) {
    return mod_reduce(Int(at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)), m);
  };
  Int d = 0;
  for (int c = 0; c < 4; ++c) {
    int cols[3], cc = 0;
    for (int t = 0; t < 4; ++t)
      if (t != c) cols[cc++] = t;
    Int minor = mod_reduce(Int(at(1, cols[0]) * det2(2, 3, cols[1], cols[2]) -
                               at(1, cols[1]) * det2(2, 3, cols[0], cols[2]) +
                               at(1, cols[2]) * det2(2, 3, cols[0], cols[1])),
                           m);
    Int term = at(0, c) * minor;
    d += (c % 2 == 0) ? term : -term;
  }
  return mod_reduce(d, m);
}

}  // namespace qv

#include "qv/congruence.hpp"

#include "qv/errors.hpp"

namespace qv {

SMatrix SMatrix::identity() {
  SMatrix s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s.m[i][j] = Rat(i == j ? 1 : 0);
  return s;
}

SMatrix smat_mul(const SMatrix& x, const SMatrix& y) {
  SMatrix z;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rat acc(0);
      for (int t = 0; t < 4; ++t) acc += x.m[i][t] * y.m[t][j];
      z.m[i][j] = acc;
    }
  return z;
}

namespace {

Rat det3_at(const SMatrix& x, int skip_row, int skip_col) {
  std::array<int, 3> r{}, c{};
  int ri = 0, ci = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != skip_row) r[ri++] = i;
    if (i != skip_col) c[ci++] = i;
  }
  Rat det(0);
  for (int k = 0; k < 3; ++k) {
    int c1 = c[(k + 1) % 3] < c[(k + 2) % 3] ? c[(k + 1) % 3] : c[(k + 2) % 3];
    int c2 = c[(k + 1) % 3] < c[(k + 2) % 3] ? c[(k + 2) % 3] : c[(k + 1) % 3];
    Rat minor = x.m[r[1]][c1] * x.m[r[2]][c2] - x.m[r[1]][c2] * x.m[r[2]][c1];
    Rat term = x.m[r[0]][c[k]] * minor;
    det += (k % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace

Rat smat_det(const SMatrix& x) {
  Rat det(0);
  for (int j = 0; j < 4; ++j) {
    Rat term = x.m[0][j] * det3_at(x, 0, j);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

SMatrix elementary(int i, int j, const Rat& t) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3)
    throw Error("elementary matrix needs distinct indices in range");
  SMatrix s = SMatrix::identity();
  s.m[i][j] = t;
  return s;
}

std::vector<SMatrix> delta_generators(const Int& p) {
  std::vector<SMatrix> gens;
  gens.reserve(24);
  Rat inv_p = Rat(1) / Rat(p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      gens.push_back(elementary(i, j, Rat(1)));
      gens.push_back(elementary(i, j, inv_p));
    }
  return gens;
}

Mat4Mod reduce_mod(const SMatrix& x, const Int& n) {
  if (n < 2) throw Error("reduction modulus must be at least 2");
  Mat4Mod r;
  r.modulus = n;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.a[4 * i + j] = mod_reduce(x.m[i][j], n);
  if (mat4mod_det(r) != 1)
    throw DeterminantNotOne("matrix does not reduce into SL(4, Z/n)");
  return r;
}

bool in_principal_congruence(const SMatrix& x, const Int& n) {
  return in_principal_congruence(reduce_mod(x, n));
}

bool in_principal_congruence(const Mat4Mod& x) {
  return x == Mat4Mod::identity(x.modulus);
}

Int sl4_order(const Int& l) {
  Int l2 = l * l, l3 = l2 * l, l4 = l3 * l;
  return l2 * l2 * l2 * (l2 - 1) * (l3 - 1) * (l4 - 1);
}

}  // namespace qv

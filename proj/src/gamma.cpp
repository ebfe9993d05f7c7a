#include "qv/gamma.hpp"

namespace qv {

GammaElement make_gamma_element(const Order& O, const Int& p, const Mat2Q& m) {
  long long e = 0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (const Rat& coord : lattice_coords(O.lat, m.m[r][c])) {
        Int d = den(coord);
        if (unit_part(d, p) != 1)
          throw Error("entry denominator " + to_string(d) + " is not a power of " + to_string(p));
        e = std::max(e, valuation(d, p));
      }
    }
  }
  Rat n = nrd_mat(O.A, m);
  if (n != 1) throw DeterminantNotOne("reduced norm is " + to_string(n) + ", not 1");
  return GammaElement{m, e};
}

std::vector<GammaElement> gamma_generators(const Order& O, const Int& p) {
  std::vector<GammaElement> gens;
  for (int t = 0; t < 4; ++t) {
    const Quat& x = O.basis[t];
    Mat2Q up = Mat2Q::identity();
    up.m[0][1] = x;
    gens.push_back(make_gamma_element(O, p, up));
    Mat2Q lo = Mat2Q::identity();
    lo.m[1][0] = x;
    gens.push_back(make_gamma_element(O, p, lo));
  }
  // Norm-p element: j when b = -p, otherwise the first small combination of
  // basis elements with nrd = p.
  Quat pi;
  if (O.A.b == -Rat(p)) {
    pi = Quat::unit(2);
  } else {
    bool found = false;
    constexpr long long kBox = 6;
    for (long long c0 = -kBox; c0 <= kBox && !found; ++c0)
      for (long long c1 = -kBox; c1 <= kBox && !found; ++c1)
        for (long long c2 = -kBox; c2 <= kBox && !found; ++c2)
          for (long long c3 = -kBox; c3 <= kBox && !found; ++c3) {
            Quat cand;
            long long cs[4] = {c0, c1, c2, c3};
            for (int t = 0; t < 4; ++t)
              cand = qadd(cand, qscale(Rat(cs[t]), O.basis[t]));
            if (nrd(O.A, cand) == p) {
              pi = cand;
              found = true;
            }
          }
    if (!found) throw SearchExhausted("no order element of norm " + to_string(p) + " in the box");
  }
  Mat2Q w;
  w.m[0][0] = pi;
  w.m[1][1] = qscale(Rat(1, p), qconj(pi));
  gens.push_back(make_gamma_element(O, p, w));
  return gens;
}

Mat4Mod reduce_gamma(const Order& O, const Int& p, const SplittingData& S,
                     const GammaElement& g) {
  if (gcd(S.l, p) != 1)
    throw ModulusNotCoprime("residue prime " + to_string(S.l) + " divides " + to_string(p));
  Mat4Mod out;
  out.modulus = S.modulus;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Mat2Mod blk = splitting_image(S, lattice_coords(O.lat, g.mat.m[r][c]));
      out.a[4 * (2 * r + 0) + (2 * c + 0)] = blk.a[0];
      out.a[4 * (2 * r + 0) + (2 * c + 1)] = blk.a[1];
      out.a[4 * (2 * r + 1) + (2 * c + 0)] = blk.a[2];
      out.a[4 * (2 * r + 1) + (2 * c + 1)] = blk.a[3];
    }
  }
  Int d = mat4mod_det(out);
  if (d != 1)
    throw DeterminantNotOne("reduced matrix has determinant " + to_string(d) + " mod " +
                            to_string(S.modulus));
  return out;
}

}  // namespace qv

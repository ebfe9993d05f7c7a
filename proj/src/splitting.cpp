#include "qv/splitting.hpp"

namespace qv {

namespace {

using Coords = std::array<Int, 4>;

// coords of (sum x_s b_s) * (sum y_t b_t) via the structure table, mod m.
Coords table_mul(const std::array<std::array<std::array<Int, 4>, 4>, 4>& T, const Int& m,
                 const Coords& x, const Coords& y) {
  Coords z{Int(0), Int(0), Int(0), Int(0)};
  for (int s = 0; s < 4; ++s) {
    if (x[s] == 0) continue;
    for (int t = 0; t < 4; ++t) {
      if (y[t] == 0) continue;
      Int f = mod_reduce(Int(x[s] * y[t]), m);
      if (f == 0) continue;
      for (int u = 0; u < 4; ++u) z[u] += f * T[s][t][u];
    }
  }
  for (int u = 0; u < 4; ++u) z[u] = mod_reduce(z[u], m);
  return z;
}

bool is_zero(const Coords& c) { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

// Rank over F_l of up to four coordinate vectors; fills `basis` with the
// indices of the first maximal independent subset.
int mod_l_rank(std::array<Coords, 4> rows, const Int& l, std::array<int, 4>& picked) {
  int rank = 0;
  std::array<int, 4> pivot_col{};
  for (int r = 0; r < 4; ++r) {
    Coords v = rows[r];
    for (int t = 0; t < 4; ++t) v[t] = mod_reduce(v[t], l);
    // Eliminate against previously picked rows.
    for (int q = 0; q < rank; ++q) {
      const Coords& w = rows[picked[q]];
      int pc = pivot_col[q];
      Int factor = mod_reduce(Int(v[pc] * mod_inverse(mod_reduce(w[pc], l), l)), l);
      if (factor == 0) continue;
      for (int t = 0; t < 4; ++t) v[t] = mod_reduce(Int(v[t] - factor * mod_reduce(w[t], l)), l);
    }
    int pc = -1;
    for (int t = 0; t < 4; ++t)
      if (v[t] != 0) {
        pc = t;
        break;
      }
    if (pc < 0) continue;
    picked[rank] = r;
    pivot_col[rank] = pc;
    rows[r] = v;  // store the eliminated form so later rows reduce correctly
    ++rank;
  }
  return rank;
}

}  // namespace

SplittingData split_mod(const Order& O, const Int& l, int k) {
  if (k < 1) throw Error("need k >= 1");
  Int disc = reduced_discriminant(O);
  if (mod_reduce(disc, l) == 0)
    throw Error("residue prime " + to_string(l) + " divides the discriminant " + to_string(disc));

  SplittingData S;
  S.l = l;
  S.k = k;
  S.modulus = pow_int(l, k);
  const Int& m = S.modulus;

  StructureConstants T = structure_constants(O);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      for (int u = 0; u < 4; ++u) S.table[s][t][u] = mod_reduce(T[s][t][u], m);

  // Norm form coefficients on the order basis: nrd(sum c_i b_i) =
  // sum c_i^2 n_i + sum_{i<j} c_i c_j t_ij.
  std::array<Int, 4> n;
  std::array<std::array<Int, 4>, 4> tr;
  for (int i = 0; i < 4; ++i) {
    Rat ni = nrd(O.A, O.basis[i]);
    if (den(ni) != 1) throw Error("order basis norm not integral");
    n[i] = num(ni);
    for (int j = 0; j < 4; ++j) {
      Rat tij = trd(qmul(O.A, O.basis[i], qconj(O.basis[j])));
      if (den(tij) != 1) throw Error("order basis pairing not integral");
      tr[i][j] = num(tij);
    }
  }

  // Lexicographically first isotropic vector of the norm form mod l.
  long long lb = static_cast<long long>(l);
  if (lb > 64) throw Error("zero-divisor search implemented for l <= 64");
  Coords zd{Int(0), Int(0), Int(0), Int(0)};
  bool found = false;
  for (long long c0 = 0; c0 < lb && !found; ++c0)
    for (long long c1 = 0; c1 < lb && !found; ++c1)
      for (long long c2 = 0; c2 < lb && !found; ++c2)
        for (long long c3 = 0; c3 < lb && !found; ++c3) {
          if (c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0) continue;
          long long cs[4] = {c0, c1, c2, c3};
          Int q = 0;
          for (int i = 0; i < 4; ++i) {
            q += n[i] * cs[i] * cs[i];
            for (int j = i + 1; j < 4; ++j) q += tr[i][j] * cs[i] * cs[j];
          }
          if (mod_reduce(q, l) == 0) {
            for (int t = 0; t < 4; ++t) zd[t] = cs[t];
            found = true;
          }
        }
  if (!found) throw NoZeroDivisor("norm form anisotropic mod " + to_string(l));

  // Left ideal (O/lO) * x: spanned by the b_i * x.
  std::array<Coords, 4> ideal_rows;
  for (int i = 0; i < 4; ++i) {
    Coords e{Int(0), Int(0), Int(0), Int(0)};
    e[i] = 1;
    ideal_rows[i] = table_mul(S.table, l, e, zd);
  }
  std::array<int, 4> picked{};
  int rank = mod_l_rank(ideal_rows, l, picked);
  if (rank != 2)
    throw NoZeroDivisor("left ideal has rank " + std::to_string(rank) + ", expected 2");
  Coords w1 = ideal_rows[picked[0]];
  Coords w2 = ideal_rows[picked[1]];

  // First nonzero idempotent in the ideal.
  Coords e{Int(0), Int(0), Int(0), Int(0)};
  found = false;
  for (long long al = 0; al < lb && !found; ++al)
    for (long long be = 0; be < lb && !found; ++be) {
      if (al == 0 && be == 0) continue;
      Coords cand;
      for (int t = 0; t < 4; ++t) cand[t] = mod_reduce(Int(al * w1[t] + be * w2[t]), l);
      if (is_zero(cand)) continue;
      Coords sq = table_mul(S.table, l, cand, cand);
      if (sq == cand) {
        e = cand;
        found = true;
      }
    }
  if (!found) throw NoZeroDivisor("no idempotent in the rank-2 ideal");

  // Hensel lift: e <- 3e^2 - 2e^3 doubles the exponent each round.
  for (int round = 0; (1 << round) < k + 1; ++round) {
    Coords e2 = table_mul(S.table, m, e, e);
    Coords e3 = table_mul(S.table, m, e2, e);
    for (int t = 0; t < 4; ++t) e[t] = mod_reduce(Int(3 * e2[t] - 2 * e3[t]), m);
  }

  // Module basis of (O/l^k O) e: rows b_i * e; the first two that stay
  // independent mod l generate, and freeness makes them a basis.
  std::array<Coords, 4> mod_rows;
  for (int i = 0; i < 4; ++i) {
    Coords ei{Int(0), Int(0), Int(0), Int(0)};
    ei[i] = 1;
    mod_rows[i] = table_mul(S.table, m, ei, e);
  }
  rank = mod_l_rank(mod_rows, l, picked);
  if (rank != 2) throw NoZeroDivisor("lifted idempotent module has wrong rank");
  S.module_basis[0] = mod_rows[picked[0]];
  S.module_basis[1] = mod_rows[picked[1]];

  // Column pair where the 2x2 minor is invertible mod l.
  bool have_piv = false;
  for (int c0 = 0; c0 < 4 && !have_piv; ++c0)
    for (int c1 = c0 + 1; c1 < 4 && !have_piv; ++c1) {
      Int det = mod_reduce(
          Int(S.module_basis[0][c0] * S.module_basis[1][c1] -
              S.module_basis[0][c1] * S.module_basis[1][c0]),
          m);
      if (mod_reduce(det, l) == 0) continue;
      S.piv0 = c0;
      S.piv1 = c1;
      // Inverse of [[w1[c0], w2[c0]], [w1[c1], w2[c1]]]: the solve is for
      // coefficients (c0, c1) with prod = c0 * w1 + c1 * w2.
      Int dinv = mod_inverse(det, m);
      S.pivot_inverse[0] = mod_reduce(Int(S.module_basis[1][c1] * dinv), m);
      S.pivot_inverse[1] = mod_reduce(Int(-S.module_basis[1][c0] * dinv), m);
      S.pivot_inverse[2] = mod_reduce(Int(-S.module_basis[0][c1] * dinv), m);
      S.pivot_inverse[3] = mod_reduce(Int(S.module_basis[0][c0] * dinv), m);
      have_piv = true;
    }
  if (!have_piv) throw NoZeroDivisor("module basis has no unimodular column pair");

  // Basis images, then the images of 1, i, j, k through their order
  // coordinates (integral since Z<1,i,j,k> sits inside the order).
  for (int i = 0; i < 4; ++i) {
    Coords ei{Int(0), Int(0), Int(0), Int(0)};
    ei[i] = 1;
    S.basis_images[i] = splitting_image(S, ei);
  }
  for (int u = 0; u < 4; ++u) {
    std::array<Rat, 4> rc = lattice_coords(O.lat, Quat::unit(u));
    Coords ic;
    for (int t = 0; t < 4; ++t) {
      if (den(rc[t]) != 1) throw Error("unit has non-integral order coordinates");
      ic[t] = mod_reduce(num(rc[t]), m);
    }
    S.unit_images[u] = splitting_image(S, ic);
  }

  // Structural verification: defining relations and surjectivity mod l.
  const Mat2Mod& I2 = Mat2Mod::identity();
  Mat2Mod ai = mat2mod_scale(m, mod_reduce(O.A.a, m), I2);
  Mat2Mod bi = mat2mod_scale(m, mod_reduce(O.A.b, m), I2);
  const Mat2Mod& Mi = S.unit_images[1];
  const Mat2Mod& Mj = S.unit_images[2];
  if (!(mat2mod_mul(m, Mi, Mi) == ai) || !(mat2mod_mul(m, Mj, Mj) == bi))
    throw NoZeroDivisor("splitting violates i^2 = a or j^2 = b");
  Mat2Mod ij = mat2mod_mul(m, Mi, Mj);
  Mat2Mod ji = mat2mod_mul(m, Mj, Mi);
  if (!(mat2mod_add(m, ij, ji) == Mat2Mod{}))
    throw NoZeroDivisor("splitting violates anticommutation");
  if (!(ij == S.unit_images[3])) throw NoZeroDivisor("splitting violates k = ij");
  // The four basis images must span M2 mod l: 4x4 determinant of the
  // flattened images is a unit.
  {
    std::array<Coords, 4> flat;
    for (int i = 0; i < 4; ++i)
      for (int t = 0; t < 4; ++t) flat[i][t] = S.basis_images[i].a[t];
    std::array<int, 4> pk{};
    if (mod_l_rank(flat, l, pk) != 4) throw NoZeroDivisor("basis images do not span M2");
  }
  return S;
}

Mat2Mod splitting_image(const SplittingData& S, const std::array<Int, 4>& coords) {
  const Int& m = S.modulus;
  Mat2Mod M;
  for (int col = 0; col < 2; ++col) {
    Coords prod = table_mul(S.table, m, coords, S.module_basis[col]);
    Int z0 = prod[S.piv0], z1 = prod[S.piv1];
    Int c0 = mod_reduce(Int(S.pivot_inverse[0] * z0 + S.pivot_inverse[1] * z1), m);
    Int c1 = mod_reduce(Int(S.pivot_inverse[2] * z0 + S.pivot_inverse[3] * z1), m);
    // Consistency: the solved coordinates must reproduce the whole vector,
    // i.e. the product stayed inside the module.
    for (int t = 0; t < 4; ++t) {
      Int lhs = mod_reduce(Int(c0 * S.module_basis[0][t] + c1 * S.module_basis[1][t]), m);
      if (lhs != prod[t]) throw Error("element does not act on the splitting module");
    }
    M.a[0 + col] = c0;  // row 0, this column
    M.a[2 + col] = c1;  // row 1
  }
  return M;
}

Mat2Mod splitting_image(const SplittingData& S, const std::array<Rat, 4>& coords) {
  std::array<Int, 4> ic;
  for (int t = 0; t < 4; ++t) ic[t] = mod_reduce(coords[t], S.modulus);
  return splitting_image(S, ic);
}

}  // namespace qv

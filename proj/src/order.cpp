#include "qv/order.hpp"

#include <algorithm>

namespace qv {

namespace {

using Row = std::array<Int, 4>;

bool row_is_zero(const Row& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0 && r[3] == 0; }

void row_submul(Row& r, const Int& q, const Row& s) {
  for (int t = 0; t < 4; ++t) r[t] -= q * s[t];
}

// In-place lower-triangular HNF of a row-spanning set; returns false if the
// span has rank < 4.
bool hnf(std::vector<Row>& rows) {
  size_t pivot = 0;
  for (int col = 0; col < 4 && pivot < rows.size(); ++col) {
    // Reduce column `col` among rows[pivot..] to a single nonzero entry.
    while (true) {
      size_t best = SIZE_MAX;
      for (size_t s = pivot; s < rows.size(); ++s) {
        if (rows[s][col] == 0) continue;
        if (best == SIZE_MAX || abs(rows[s][col]) < abs(rows[best][col])) best = s;
      }
      if (best == SIZE_MAX) return false;  // rank defect in this column
      std::swap(rows[pivot], rows[best]);
      bool clean = true;
      for (size_t s = pivot + 1; s < rows.size(); ++s) {
        if (rows[s][col] == 0) continue;
        Int q = rows[s][col] / rows[pivot][col];
        row_submul(rows[s], q, rows[pivot]);
        if (rows[s][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pivot][col] < 0)
      for (int t = 0; t < 4; ++t) rows[pivot][t] = -rows[pivot][t];
    ++pivot;
  }
  if (pivot < 4) return false;
  rows.resize(4);
  // Row-echelon with pivots on the diagonal; canonicalize by reducing the
  // entries above each pivot modulo it (row j only touches columns >= j).
  for (int j = 1; j < 4; ++j) {
    for (int i = 0; i < j; ++i) {
      Int q = rows[i][j] / rows[j][j];
      if (rows[i][j] - q * rows[j][j] < 0) q -= 1;  // floor division
      row_submul(rows[i], q, rows[j]);
    }
  }
  return true;
}

}  // namespace

Quat QLattice::basis_element(int r) const {
  Quat q;
  for (int t = 0; t < 4; ++t) q.c[t] = Rat(mat[r][t], denom);
  return q;
}

QLattice lattice_span(const std::vector<Quat>& gens) {
  Int d = 1;
  for (const Quat& g : gens)
    for (int t = 0; t < 4; ++t) d = lcm(d, den(g.c[t]));
  std::vector<Row> rows;
  rows.reserve(gens.size());
  for (const Quat& g : gens) {
    Row r;
    for (int t = 0; t < 4; ++t) r[t] = num(g.c[t]) * (d / den(g.c[t]));
    if (!row_is_zero(r)) rows.push_back(r);
  }
  if (!hnf(rows)) throw Error("generating set does not span a full-rank lattice");
  Int content = d;
  for (const Row& r : rows)
    for (int t = 0; t < 4; ++t) content = gcd(content, r[t]);
  QLattice L;
  L.denom = d / content;
  for (int i = 0; i < 4; ++i)
    for (int t = 0; t < 4; ++t) L.mat[i][t] = rows[i][t] / content;
  return L;
}

std::array<Rat, 4> lattice_coords(const QLattice& L, const Quat& x) {
  // Solve c * mat = denom * x; mat is upper triangular, so substitute from
  // the first coordinate forward.
  std::array<Rat, 4> c;
  std::array<Rat, 4> rhs;
  for (int t = 0; t < 4; ++t) rhs[t] = x.c[t] * L.denom;
  for (int col = 0; col < 4; ++col) {
    Rat acc = rhs[col];
    for (int s = 0; s < col; ++s) acc -= c[s] * L.mat[s][col];
    c[col] = acc / L.mat[col][col];
  }
  return c;
}

bool lattice_contains(const QLattice& L, const Quat& x) {
  for (const Rat& v : lattice_coords(L, x))
    if (den(v) != 1) return false;
  return true;
}

Order order_from_lattice(const QuaternionAlgebra& A, const QLattice& L) {
  Order O{A, L, {}};
  for (int r = 0; r < 4; ++r) O.basis[r] = L.basis_element(r);
  return O;
}

std::optional<QLattice> multiplicative_closure(const QuaternionAlgebra& A, QLattice L) {
  constexpr int kMaxRounds = 16;
  for (int round = 0; round < kMaxRounds; ++round) {
    std::vector<Quat> gens;
    for (int r = 0; r < 4; ++r) gens.push_back(L.basis_element(r));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        gens.push_back(qmul(A, L.basis_element(i), L.basis_element(j)));
    QLattice next = lattice_span(gens);
    if (next == L) return L;
    L = next;
  }
  return std::nullopt;
}

Rat trace_form_det(const QuaternionAlgebra& A, const QLattice& L) {
  std::array<std::array<Rat, 4>, 4> G;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      G[i][j] = trd(qmul(A, L.basis_element(i), L.basis_element(j)));
  // Fraction-free is unnecessary at this size; plain cofactor expansion.
  auto det2 = [&](int r0, int r1, int c0, int c1) {
    return G[r0][c0] * G[r1][c1] - G[r0][c1] * G[r1][c0];
  };
  Rat d = 0;
  for (int c = 0; c < 4; ++c) {
    // 3x3 minor over rows 1..3, columns != c.
    int cols[3], cc = 0;
    for (int k = 0; k < 4; ++k)
      if (k != c) cols[cc++] = k;
    Rat m = G[1][cols[0]] * det2(2, 3, cols[1], cols[2]) -
            G[1][cols[1]] * det2(2, 3, cols[0], cols[2]) +
            G[1][cols[2]] * det2(2, 3, cols[0], cols[1]);
    Rat term = G[0][c] * m;
    d += (c % 2 == 0) ? term : -term;
  }
  return d;
}

Int reduced_discriminant(const QuaternionAlgebra& A, const QLattice& L) {
  Rat det = trace_form_det(A, L);
  if (det == 0) throw Error("degenerate trace form");
  Rat a = abs(det);
  Int rn, rd;
  if (!perfect_square(num(a), &rn) || !perfect_square(den(a), &rd))
    throw Error("trace form determinant is not a perfect square");
  if (rd != 1) throw Error("reduced discriminant is not integral");
  return rn;
}

Int reduced_discriminant(const Order& O) { return reduced_discriminant(O.A, O.lat); }

Order maximal_order(const QuaternionAlgebra& A, const Int& p) {
  std::vector<Quat> units = {Quat::unit(0), Quat::unit(1), Quat::unit(2), Quat::unit(3)};
  QLattice L = lattice_span(units);
  auto closed = multiplicative_closure(A, L);
  if (!closed) throw SaturationFailed("initial lattice failed to close");
  L = *closed;
  Int disc = reduced_discriminant(A, L);
  while (disc != p) {
    if (disc % p != 0 || disc < p)
      throw SaturationFailed("discriminant " + to_string(disc) + " not a multiple of " +
                             to_string(p));
    Int excess = disc / p;
    std::vector<Int> primes = prime_factors(excess);
    bool improved = false;
    for (const Int& l : primes) {
      // Adjoin (sum c_r b_r) / l with integral trace and norm; first success
      // in lexicographic order wins.
      long long lb = static_cast<long long>(l);
      std::array<long long, 4> c{0, 0, 0, 0};
      auto bump = [&]() {
        for (int t = 3; t >= 0; --t) {
          if (++c[t] < lb) return true;
          c[t] = 0;
        }
        return false;
      };
      while (bump()) {
        Quat x;
        for (int r = 0; r < 4; ++r)
          x = qadd(x, qscale(Rat(c[r], l), L.basis_element(r)));
        if (lattice_contains(L, x)) continue;
        if (den(trd(x)) != 1 || den(nrd(A, x)) != 1) continue;
        std::vector<Quat> gens;
        for (int r = 0; r < 4; ++r) gens.push_back(L.basis_element(r));
        gens.push_back(x);
        auto bigger = multiplicative_closure(A, lattice_span(gens));
        if (!bigger) continue;
        Int d2 = reduced_discriminant(A, *bigger);
        if (d2 < disc && d2 % p == 0 && lattice_contains(*bigger, Quat::one())) {
          L = *bigger;
          disc = d2;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved)
      throw SaturationFailed("no integral element improves discriminant " + to_string(disc));
  }
  return order_from_lattice(A, L);
}

StructureConstants structure_constants(const Order& O) {
  StructureConstants T;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::array<Rat, 4> c = lattice_coords(O.lat, qmul(O.A, O.basis[i], O.basis[j]));
      for (int t = 0; t < 4; ++t) {
        if (den(c[t]) != 1)
          throw Error("order basis is not multiplicatively closed");
        T[i][j][t] = num(c[t]);
      }
    }
  }
  return T;
}

}  // namespace qv

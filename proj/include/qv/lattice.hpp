#pragma once

// Lattices over the completed quaternion order at p and their canonical
// forms, which are the vertices of the local tree.
//
// Division case (the algebra ramifies at p): the completed order is
// Z_p[i] + Z_p[i]j, a noncommutative discrete valuation ring with
// uniformizer j and residue field of p^2 elements. Lattices are left
// O-spans of pairs of row vectors; every lattice class (up to left
// multiplication by powers of the uniformizer) has a unique basis
//
//     (pi^e1, 0),  (c, pi^e2)     min(e1, e2) = 0,  c reduced mod pi^e1 O.
//
// Split case (reference model): plain Z_p-lattices in Q_p^2, uniformizer p,
// residue field F_p, same canonical shape with scalar c.
//
// All arithmetic inside the reduction runs on truncated p-adic numbers;
// exact cancellation shows up as approximate zeros, which are legitimate
// here (an eliminated entry is known to vanish structurally) and are never
// chosen as pivots. Canonical data is extracted as exact rationals, so
// vertex identity, ordering and digests carry no truncation artifacts.

#include <array>
#include <string>
#include <vector>

#include "qv/errors.hpp"
#include "qv/mat2.hpp"
#include "qv/numbers.hpp"
#include "qv/padic.hpp"
#include "qv/quaternion.hpp"

namespace qv {

// Element of the p-adic quaternion algebra: truncated coefficients on
// (1, i, j, k).
struct LocalQuat {
  std::array<Padic, 4> c;
};

// Scalar context for the ramified case.
struct DivisionContext {
  using Elem = LocalQuat;

  QuaternionAlgebra alg;
  Int p;
  int digits;

  DivisionContext(const QuaternionAlgebra& algebra, const Int& prime,
                  int precision = Padic::kDefaultDigits);

  Elem zero() const;
  Elem from_coeffs(const std::array<Rat, 4>& coeffs) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem add(const Elem& x, const Elem& y) const;  // lossy: cancellation gives approx zeros
  Elem neg(const Elem& x) const;
  Elem inverse(const Elem& x) const;
  // Uniformizer power j^e with exact rational coefficients (e may be negative).
  Elem pivot_power(long long e) const;
  bool effectively_zero(const Elem& x) const;
  // Valuation with respect to the uniformizer: v(z + w j) =
  // min(2 min(v(z0), v(z1)), 1 + 2 min(v(w0), v(w1))). Exact for regular
  // coefficients; throws PrecisionExhausted if an approximate zero could
  // undercut the certified minimum, Error on an effectively zero element.
  long long alpha(const Elem& x) const;
  // Canonical representative of x mod pi^e O: the Z_p[i] part is unique mod
  // p^ceil(e/2), the j part mod p^floor(e/2).
  std::array<Rat, 4> reduce_mod_pivot(const Elem& x, long long e) const;
  // Lifts of the residue field F_{p^2}: t0 + t1 i, lexicographic in (t0, t1).
  std::vector<std::array<Rat, 4>> residue_lifts() const;
  long long residue_size() const;

 private:
  Padic a_;   // truncation of alg.a
  Padic b_;   // truncation of alg.b
  Padic ab_;  // product
};

// Scalar context for the split reference case.
struct SplitContext {
  using Elem = Padic;

  Int p;
  int digits;

  SplitContext(const Int& prime, int precision = Padic::kDefaultDigits);

  Elem zero() const;
  // Quaternion coordinates must be scalar (indices 1..3 zero).
  Elem from_coeffs(const std::array<Rat, 4>& coeffs) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem inverse(const Elem& x) const;
  Elem pivot_power(long long e) const;
  bool effectively_zero(const Elem& x) const;
  long long alpha(const Elem& x) const;
  std::array<Rat, 4> reduce_mod_pivot(const Elem& x, long long e) const;
  std::vector<std::array<Rat, 4>> residue_lifts() const;
  long long residue_size() const;
};

// Canonical lattice form: rows (pi^e1, 0) and (c, pi^e2) with
// min(e1, e2) = 0. Total order and string form are used for deterministic
// sphere layouts and vertex digests.
struct VertexForm {
  long long e1 = 0;
  long long e2 = 0;
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  bool operator==(const VertexForm& o) const {
    return e1 == o.e1 && e2 == o.e2 && c == o.c;
  }
  bool operator!=(const VertexForm& o) const { return !(*this == o); }
  bool operator<(const VertexForm& o) const;
  std::string str() const;
};

template <class Ctx>
struct LatticeRow {
  typename Ctx::Elem x, y;
};

// --- Templated lattice reduction -------------------------------------------

// Hermite-style reduction of 2 or 3 spanning rows to the canonical form.
template <class Ctx>
VertexForm canonicalize(const Ctx& ctx, std::vector<LatticeRow<Ctx>> rows) {
  using Elem = typename Ctx::Elem;

  // Pivot: minimal uniformizer valuation in the second column.
  long long e2 = 0;
  int piv = -1;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (ctx.effectively_zero(rows[r].y)) continue;
    long long al = ctx.alpha(rows[r].y);
    if (piv < 0 || al < e2) {
      e2 = al;
      piv = static_cast<int>(r);
    }
  }
  if (piv < 0) throw Error("rows do not span a lattice: second column vanishes");

  // Eliminate the second column from the other rows; what remains of each is
  // its first entry.
  std::vector<Elem> firsts;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(r) == piv) continue;
    if (ctx.effectively_zero(rows[r].y)) {
      if (!ctx.effectively_zero(rows[r].x)) firsts.push_back(rows[r].x);
      continue;
    }
    Elem q = ctx.mul(rows[r].y, ctx.inverse(rows[piv].y));
    Elem ny = ctx.add(rows[r].y, ctx.neg(ctx.mul(q, rows[piv].y)));
    if (!ctx.effectively_zero(ny)) throw Error("column elimination failed to cancel");
    Elem nx = ctx.add(rows[r].x, ctx.neg(ctx.mul(q, rows[piv].x)));
    if (!ctx.effectively_zero(nx)) firsts.push_back(nx);
  }
  if (firsts.empty()) throw Error("rows do not span a lattice: rank 1 span");

  long long e1 = ctx.alpha(firsts[0]);
  for (std::size_t t = 1; t < firsts.size(); ++t)
    e1 = std::min(e1, ctx.alpha(firsts[t]));

  // Normalize the pivot row so its second entry is exactly pi^e2; the first
  // entry becomes the class representative c.
  Elem c_raw = ctx.mul(ctx.pivot_power(e2),
                       ctx.mul(ctx.inverse(rows[piv].y), rows[piv].x));

  // One uniformizer homothety to pin min(e1, e2) = 0.
  long long mn = std::min(e1, e2);
  e1 -= mn;
  e2 -= mn;
  if (mn != 0) c_raw = ctx.mul(ctx.pivot_power(-mn), c_raw);

  VertexForm f;
  f.e1 = e1;
  f.e2 = e2;
  f.c = ctx.reduce_mod_pivot(c_raw, e1);
  return f;
}

// Exact basis rows of a canonical form.
template <class Ctx>
std::array<LatticeRow<Ctx>, 2> form_rows(const Ctx& ctx, const VertexForm& v) {
  LatticeRow<Ctx> r1{ctx.pivot_power(v.e1), ctx.zero()};
  LatticeRow<Ctx> r2{ctx.from_coeffs(v.c), ctx.pivot_power(v.e2)};
  return {r1, r2};
}

// Tree distance |s1 - s2| from the elementary divisor exponents of the basis
// change matrix between the two classes.
template <class Ctx>
long long tree_distance(const Ctx& ctx, const VertexForm& u, const VertexForm& v) {
  using Elem = typename Ctx::Elem;
  auto ru = form_rows(ctx, u);

  // Inverse of the v basis, triangular so no subtraction is needed:
  // [[pi^-e1, 0], [-pi^-e2 c pi^-e1, pi^-e2]].
  Elem i00 = ctx.pivot_power(-v.e1);
  Elem i11 = ctx.pivot_power(-v.e2);
  Elem i10 = ctx.neg(ctx.mul(i11, ctx.mul(ctx.from_coeffs(v.c), i00)));

  std::array<std::array<Elem, 2>, 2> M{
      {{ctx.add(ctx.mul(ru[0].x, i00), ctx.mul(ru[0].y, i10)),
        ctx.mul(ru[0].y, i11)},
       {ctx.add(ctx.mul(ru[1].x, i00), ctx.mul(ru[1].y, i10)),
        ctx.mul(ru[1].y, i11)}}};

  long long s1 = 0;
  int pr = -1, pc = -1;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) {
      if (ctx.effectively_zero(M[r][col])) continue;
      long long al = ctx.alpha(M[r][col]);
      if (pr < 0 || al < s1) {
        s1 = al;
        pr = r;
        pc = col;
      }
    }
  if (pr < 0) throw Error("degenerate basis change between lattice classes");
  if (pr == 1) std::swap(M[0], M[1]);
  if (pc == 1) {
    std::swap(M[0][0], M[0][1]);
    std::swap(M[1][0], M[1][1]);
  }

  // One row elimination exposes the second elementary divisor at (1, 1);
  // the (0, 1) entry never feeds back into it.
  Elem rest = M[1][1];
  if (!ctx.effectively_zero(M[1][0])) {
    Elem q = ctx.mul(M[1][0], ctx.inverse(M[0][0]));
    rest = ctx.add(rest, ctx.neg(ctx.mul(q, M[0][1])));
  }
  if (ctx.effectively_zero(rest))
    throw PrecisionExhausted("distance cancellation exceeded the working precision");
  long long s2 = ctx.alpha(rest);
  return s1 <= s2 ? s2 - s1 : s1 - s2;
}

// Right action on row vectors: each basis row r maps to r g. Entries of g
// are quaternions with rational coefficients (scalar in the split case).
// Composition: act(g, act(h, v)) = act(h g, v).
template <class Ctx>
VertexForm act(const Ctx& ctx, const Mat2Q& g, const VertexForm& v) {
  using Elem = typename Ctx::Elem;
  auto rows = form_rows(ctx, v);
  std::array<std::array<Elem, 2>, 2> G{
      {{ctx.from_coeffs(g.m[0][0].c), ctx.from_coeffs(g.m[0][1].c)},
       {ctx.from_coeffs(g.m[1][0].c), ctx.from_coeffs(g.m[1][1].c)}}};
  std::vector<LatticeRow<Ctx>> out;
  for (const auto& r : rows) {
    LatticeRow<Ctx> nr{ctx.add(ctx.mul(r.x, G[0][0]), ctx.mul(r.y, G[1][0])),
                       ctx.add(ctx.mul(r.x, G[0][1]), ctx.mul(r.y, G[1][1]))};
    out.push_back(std::move(nr));
  }
  return canonicalize(ctx, std::move(out));
}

// The residue_size() + 1 neighbors of a vertex: indexed by the lines of
// L / pi L, i.e. lifts (1 : t) in residue order followed by (0 : 1).
template <class Ctx>
std::vector<VertexForm> neighbor_forms(const Ctx& ctx, const VertexForm& v) {
  using Elem = typename Ctx::Elem;
  auto rows = form_rows(ctx, v);
  Elem pi = ctx.pivot_power(1);
  LatticeRow<Ctx> p1{ctx.mul(pi, rows[0].x), ctx.mul(pi, rows[0].y)};
  LatticeRow<Ctx> p2{ctx.mul(pi, rows[1].x), ctx.mul(pi, rows[1].y)};

  std::vector<VertexForm> out;
  out.reserve(static_cast<std::size_t>(ctx.residue_size()) + 1);
  for (const auto& t : ctx.residue_lifts()) {
    Elem tt = ctx.from_coeffs(t);
    LatticeRow<Ctx> head{ctx.add(rows[0].x, ctx.mul(tt, rows[1].x)),
                         ctx.add(rows[0].y, ctx.mul(tt, rows[1].y))};
    out.push_back(canonicalize(ctx, {head, p1, p2}));
  }
  out.push_back(canonicalize(ctx, {rows[1], p1}));
  return out;
}

}  // namespace qv

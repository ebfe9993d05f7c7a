#include "qv/lattice.hpp"

#include <sstream>

namespace qv {

namespace {

// Uniformizer-valuation contribution of one coefficient slot, or the same
// bound computed from an approximate zero's floor. Slots 0, 1 sit over the
// unramified part (contribution 2v), slots 2, 3 over the j part (1 + 2v).
long long slot_contribution(int idx, long long v) {
  return idx < 2 ? 2 * v : 1 + 2 * v;
}

}  // namespace

// --- DivisionContext --------------------------------------------------------

DivisionContext::DivisionContext(const QuaternionAlgebra& algebra, const Int& prime,
                                 int precision)
    : alg(algebra),
      p(prime),
      digits(precision),
      a_(prime, algebra.a, precision),
      b_(prime, algebra.b, precision),
      ab_(a_.mul(b_)) {
  if (valuation(algebra.a, prime) != 0 || valuation(algebra.b, prime) != 1)
    throw Error("division context needs v_p(a) = 0 and v_p(b) = 1");
  if (legendre(num(algebra.a), prime) != -1)
    throw Error("division context needs a to be a non-residue mod p");
}

DivisionContext::Elem DivisionContext::zero() const {
  Padic z = Padic::zero(p);
  return LocalQuat{{z, z, z, z}};
}

DivisionContext::Elem DivisionContext::from_coeffs(const std::array<Rat, 4>& coeffs) const {
  return LocalQuat{{Padic(p, coeffs[0], digits), Padic(p, coeffs[1], digits),
                    Padic(p, coeffs[2], digits), Padic(p, coeffs[3], digits)}};
}

DivisionContext::Elem DivisionContext::mul(const Elem& x, const Elem& y) const {
  const auto& u = x.c;
  const auto& v = y.c;
  auto sum4 = [](const Padic& t0, const Padic& t1, const Padic& t2, const Padic& t3) {
    return t0.add_lossy(t1).add_lossy(t2).add_lossy(t3);
  };
  return LocalQuat{
      {sum4(u[0].mul(v[0]), a_.mul(u[1].mul(v[1])), b_.mul(u[2].mul(v[2])),
            ab_.mul(u[3].mul(v[3])).neg()),
       sum4(u[0].mul(v[1]), u[1].mul(v[0]), b_.mul(u[3].mul(v[2])),
            b_.mul(u[2].mul(v[3])).neg()),
       sum4(u[0].mul(v[2]), u[2].mul(v[0]), a_.mul(u[1].mul(v[3])),
            a_.mul(u[3].mul(v[1])).neg()),
       sum4(u[0].mul(v[3]), u[3].mul(v[0]), u[1].mul(v[2]), u[2].mul(v[1]).neg())}};
}

DivisionContext::Elem DivisionContext::add(const Elem& x, const Elem& y) const {
  return LocalQuat{{x.c[0].add_lossy(y.c[0]), x.c[1].add_lossy(y.c[1]),
                    x.c[2].add_lossy(y.c[2]), x.c[3].add_lossy(y.c[3])}};
}

DivisionContext::Elem DivisionContext::neg(const Elem& x) const {
  return LocalQuat{{x.c[0].neg(), x.c[1].neg(), x.c[2].neg(), x.c[3].neg()}};
}

DivisionContext::Elem DivisionContext::inverse(const Elem& x) const {
  // conj(x) / nrd(x); the norm of anything invertible is regular, since the
  // completed algebra is a division ring.
  Padic n = x.c[0].mul(x.c[0])
                .add_lossy(a_.mul(x.c[1].mul(x.c[1])).neg())
                .add_lossy(b_.mul(x.c[2].mul(x.c[2])).neg())
                .add_lossy(ab_.mul(x.c[3].mul(x.c[3])));
  if (!n.is_regular())
    throw PrecisionExhausted("reduced norm cancelled below the working precision");
  Padic ninv = n.inv();
  return LocalQuat{{x.c[0].mul(ninv), x.c[1].neg().mul(ninv), x.c[2].neg().mul(ninv),
                    x.c[3].neg().mul(ninv)}};
}

DivisionContext::Elem DivisionContext::pivot_power(long long e) const {
  // j^e = b^q j^r with e = 2q + r, r in {0, 1} (floor division).
  long long r = ((e % 2) + 2) % 2;
  long long q = (e - r) / 2;
  std::array<Rat, 4> coeffs{Rat(0), Rat(0), Rat(0), Rat(0)};
  coeffs[r == 0 ? 0 : 2] = pow_rat(alg.b, q);
  return from_coeffs(coeffs);
}

bool DivisionContext::effectively_zero(const Elem& x) const {
  for (int t = 0; t < 4; ++t)
    if (x.c[t].is_regular()) return false;
  return true;
}

long long DivisionContext::alpha(const Elem& x) const {
  bool have = false;
  long long best = 0, bound = 0;
  bool have_bound = false;
  for (int t = 0; t < 4; ++t) {
    const Padic& co = x.c[t];
    if (co.is_zero()) continue;
    if (co.is_regular()) {
      long long contrib = slot_contribution(t, co.valuation());
      if (!have || contrib < best) best = contrib;
      have = true;
    } else {
      long long fl = slot_contribution(t, co.valuation_floor());
      if (!have_bound || fl < bound) bound = fl;
      have_bound = true;
    }
  }
  if (!have) throw Error("uniformizer valuation of an effectively zero element");
  if (have_bound && bound < best)
    throw PrecisionExhausted("approximate zero could undercut the uniformizer valuation");
  return best;
}

std::array<Rat, 4> DivisionContext::reduce_mod_pivot(const Elem& x, long long e) const {
  // pi^e O = p^ceil(e/2) Z_p[i] + p^floor(e/2) Z_p[i] j.
  long long k01 = (e + 1) / 2, k23 = e / 2;
  return {x.c[0].canonical_rep(k01), x.c[1].canonical_rep(k01),
          x.c[2].canonical_rep(k23), x.c[3].canonical_rep(k23)};
}

std::vector<std::array<Rat, 4>> DivisionContext::residue_lifts() const {
  std::vector<std::array<Rat, 4>> lifts;
  long long pp = static_cast<long long>(p);
  lifts.reserve(static_cast<std::size_t>(pp * pp));
  for (long long t0 = 0; t0 < pp; ++t0)
    for (long long t1 = 0; t1 < pp; ++t1)
      lifts.push_back({Rat(t0), Rat(t1), Rat(0), Rat(0)});
  return lifts;
}

long long DivisionContext::residue_size() const {
  long long pp = static_cast<long long>(p);
  return pp * pp;
}

// --- SplitContext ------------------------------------------------------------

SplitContext::SplitContext(const Int& prime, int precision) : p(prime), digits(precision) {
  if (!is_prime(prime)) throw Error("split context needs a prime");
}

SplitContext::Elem SplitContext::zero() const { return Padic::zero(p); }

SplitContext::Elem SplitContext::from_coeffs(const std::array<Rat, 4>& coeffs) const {
  for (int t = 1; t < 4; ++t)
    if (coeffs[t] != 0) throw Error("split lattice entries must be scalar");
  return Padic(p, coeffs[0], digits);
}

SplitContext::Elem SplitContext::mul(const Elem& x, const Elem& y) const { return x.mul(y); }

SplitContext::Elem SplitContext::add(const Elem& x, const Elem& y) const {
  return x.add_lossy(y);
}

SplitContext::Elem SplitContext::neg(const Elem& x) const { return x.neg(); }

SplitContext::Elem SplitContext::inverse(const Elem& x) const { return x.inv(); }

SplitContext::Elem SplitContext::pivot_power(long long e) const {
  return Padic(p, Rat(1), digits).shift(e);
}

bool SplitContext::effectively_zero(const Elem& x) const { return !x.is_regular(); }

long long SplitContext::alpha(const Elem& x) const {
  if (!x.is_regular()) throw Error("valuation of an effectively zero element");
  return x.valuation();
}

std::array<Rat, 4> SplitContext::reduce_mod_pivot(const Elem& x, long long e) const {
  return {x.canonical_rep(e), Rat(0), Rat(0), Rat(0)};
}

std::vector<std::array<Rat, 4>> SplitContext::residue_lifts() const {
  std::vector<std::array<Rat, 4>> lifts;
  long long pp = static_cast<long long>(p);
  lifts.reserve(static_cast<std::size_t>(pp));
  for (long long t = 0; t < pp; ++t) lifts.push_back({Rat(t), Rat(0), Rat(0), Rat(0)});
  return lifts;
}

long long SplitContext::residue_size() const { return static_cast<long long>(p); }

// --- VertexForm --------------------------------------------------------------

bool VertexForm::operator<(const VertexForm& o) const {
  if (e1 != o.e1) return e1 < o.e1;
  if (e2 != o.e2) return e2 < o.e2;
  for (int t = 0; t < 4; ++t)
    if (c[t] != o.c[t]) return c[t] < o.c[t];
  return false;
}

std::string VertexForm::str() const {
  std::ostringstream os;
  os << "(" << e1 << "," << e2 << ";" << to_string(c[0]) << "," << to_string(c[1]) << ","
     << to_string(c[2]) << "," << to_string(c[3]) << ")";
  return os.str();
}

}  // namespace qv

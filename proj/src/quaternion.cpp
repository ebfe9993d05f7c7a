#include "qv/quaternion.hpp"

#include <sstream>

namespace qv {

Quat Quat::unit(int idx) {
  Quat q;
  q.c[idx] = 1;
  return q;
}

bool Quat::is_zero() const {
  return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

std::string Quat::str() const {
  static const char* names[4] = {"", "i", "j", "k"};
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < 4; ++t) {
    if (c[t] == 0) continue;
    if (!first) os << (c[t] > 0 ? " + " : " - ");
    else if (c[t] < 0) os << "-";
    Rat mag = abs(c[t]);
    if (mag != 1 || t == 0) os << to_string(mag);
    if (t > 0 && mag != 1) os << "*";
    os << names[t];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Quat qadd(const Quat& x, const Quat& y) {
  Quat z;
  for (int t = 0; t < 4; ++t) z.c[t] = x.c[t] + y.c[t];
  return z;
}

Quat qsub(const Quat& x, const Quat& y) {
  Quat z;
  for (int t = 0; t < 4; ++t) z.c[t] = x.c[t] - y.c[t];
  return z;
}

Quat qneg(const Quat& x) {
  Quat z;
  for (int t = 0; t < 4; ++t) z.c[t] = -x.c[t];
  return z;
}

Quat qscale(const Rat& s, const Quat& x) {
  Quat z;
  for (int t = 0; t < 4; ++t) z.c[t] = s * x.c[t];
  return z;
}

Quat qmul(const QuaternionAlgebra& A, const Quat& x, const Quat& y) {
  // i^2 = a, j^2 = b, ij = -ji = k.
  const Rat& a = A.a;
  const Rat& b = A.b;
  Quat z;
  z.c[0] = x.c[0] * y.c[0] + a * x.c[1] * y.c[1] + b * x.c[2] * y.c[2] - a * b * x.c[3] * y.c[3];
  z.c[1] = x.c[0] * y.c[1] + x.c[1] * y.c[0] - b * x.c[2] * y.c[3] + b * x.c[3] * y.c[2];
  z.c[2] = x.c[0] * y.c[2] + x.c[2] * y.c[0] + a * x.c[1] * y.c[3] - a * x.c[3] * y.c[1];
  z.c[3] = x.c[0] * y.c[3] + x.c[3] * y.c[0] + x.c[1] * y.c[2] - x.c[2] * y.c[1];
  return z;
}

Quat qconj(const Quat& x) {
  return Quat{{x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}

Rat trd(const Quat& x) { return 2 * x.c[0]; }

Rat nrd(const QuaternionAlgebra& A, const Quat& x) {
  return x.c[0] * x.c[0] - A.a * x.c[1] * x.c[1] - A.b * x.c[2] * x.c[2] +
         A.a * A.b * x.c[3] * x.c[3];
}

Quat qinv(const QuaternionAlgebra& A, const Quat& x) {
  Rat n = nrd(A, x);
  if (n == 0) throw DivisionByZero("inverse of a norm-zero quaternion");
  return qscale(Rat(1) / n, qconj(x));
}

QuaternionAlgebra choose_algebra(const Int& p) {
  if (!is_prime(p) || p == 2) throw Error("need an odd prime");
  constexpr int kBound = 64;
  for (int aa = 1; aa <= kBound; ++aa) {
    Int a = -Int(aa);
    if (mod_reduce(a, p) == 0) continue;       // need v_p(a) = 0
    if (legendre(a, p) != -1) continue;        // a must be a non-residue mod p
    for (int m = 1; m <= kBound; ++m) {
      if (Int(m) % p == 0) continue;
      Rat b = Rat(-p * Int(m));
      RamificationReport rep = ramification(Rat(a), b);
      std::vector<Place> want = {Place::at_prime(p), Place::at_infinity()};
      if (rep.ramified == want) return QuaternionAlgebra{Rat(a), b};
    }
  }
  throw SearchExhausted("no definite algebra ramified exactly at {inf, " + to_string(p) +
                        "} within the search bound");
}

}  // namespace qv

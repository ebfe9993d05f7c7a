#pragma once

// Rational quaternion algebras (a, b | Q): elements, involution, norms, and
// the certified search for a definite algebra ramified exactly at {infinity, p}.

#include <array>
#include <string>

#include "qv/hilbert.hpp"
#include "qv/numbers.hpp"

namespace qv {

struct QuaternionAlgebra {
  Rat a;  // i^2
  Rat b;  // j^2
};

// Element x0 + x1 i + x2 j + x3 k with k = ij.
struct Quat {
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  static Quat one() { return Quat{{Rat(1), Rat(0), Rat(0), Rat(0)}}; }
  static Quat unit(int idx);  // basis element 1, i, j or k
  static Quat scalar(const Rat& s) { return Quat{{s, Rat(0), Rat(0), Rat(0)}}; }

  bool operator==(const Quat& o) const { return c == o.c; }
  bool is_zero() const;
  std::string str() const;
};

Quat qadd(const Quat& x, const Quat& y);
Quat qsub(const Quat& x, const Quat& y);
Quat qneg(const Quat& x);
Quat qscale(const Rat& s, const Quat& x);
Quat qmul(const QuaternionAlgebra& A, const Quat& x, const Quat& y);
Quat qconj(const Quat& x);
Rat trd(const Quat& x);                             // reduced trace 2*x0
Rat nrd(const QuaternionAlgebra& A, const Quat& x); // x * conj(x), a rational
Quat qinv(const QuaternionAlgebra& A, const Quat& x);  // DivisionByZero on 0

// Definite algebra ramified exactly at {infinity, p}: searches a < 0 with
// v_p(a) = 0 and (a|p) = -1, then b = -p*m, preferring the smallest |a| then
// |b|; certifies the ramification set with Hilbert symbols before returning.
// Throws SearchExhausted if the bounded search fails, ReciprocityViolation if
// the certification does.
QuaternionAlgebra choose_algebra(const Int& p);

}  // namespace qv

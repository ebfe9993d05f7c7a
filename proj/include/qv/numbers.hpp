#pragma once

// Exact scalar layer: arbitrary-precision integers and rationals plus the
// little number-theoretic helpers (valuations, modular arithmetic, Legendre
// symbols, primality) everything else is built on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "qv/errors.hpp"

namespace qv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

std::string to_string(const Int& x);
std::string to_string(const Rat& x);  // "n" or "n/d", denominator positive

// l-adic valuation of a nonzero integer; throws DivisionByZero on 0.
long long valuation(const Int& x, const Int& l);
// v_l(num) - v_l(den); throws DivisionByZero on 0.
long long valuation(const Rat& x, const Int& l);

// x with all factors of l removed (x != 0).
Int unit_part(const Int& x, const Int& l);

Int pow_int(const Int& base, unsigned long long e);
Rat pow_rat(const Rat& base, long long e);

// Canonical representative of x modulo m in [0, m), m > 0. Denominator of x
// must be invertible mod m (throws ModulusNotCoprime otherwise).
Int mod_reduce(const Int& x, const Int& m);
Int mod_reduce(const Rat& x, const Int& m);

// Inverse of x modulo m (gcd(x, m) must be 1; throws ModulusNotCoprime).
Int mod_inverse(const Int& x, const Int& m);

Int mod_pow(Int base, Int e, const Int& m);

// Legendre symbol (u/l) for odd prime l: +1, -1, or 0 when l | u.
int legendre(const Int& u, const Int& l);

// Deterministic trial-division primality; intended for desk-scale inputs.
bool is_prime(const Int& n);

// Ascending prime factors (without multiplicity) of |n|, n != 0.
std::vector<Int> prime_factors(Int n);

// Largest integer s with s^2 <= n (n >= 0); exact integer sqrt.
Int isqrt(const Int& n);
// Exact square root if n is a perfect square.
bool perfect_square(const Int& n, Int* root = nullptr);

}  // namespace qv

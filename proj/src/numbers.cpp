#include "qv/numbers.hpp"

#include <boost/multiprecision/integer.hpp>

namespace qv {

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

long long valuation(const Int& x, const Int& l) {
  if (x == 0) throw DivisionByZero("valuation of zero");
  Int y = abs(x);
  long long v = 0;
  while (y % l == 0) {
    y /= l;
    ++v;
  }
  return v;
}

long long valuation(const Rat& x, const Int& l) {
  if (x == 0) throw DivisionByZero("valuation of zero");
  return valuation(num(x), l) - valuation(den(x), l);
}

Int unit_part(const Int& x, const Int& l) {
  if (x == 0) throw DivisionByZero("unit part of zero");
  Int y = x;
  while (y % l == 0) y /= l;
  return y;
}

Int pow_int(const Int& base, unsigned long long e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat pow_rat(const Rat& base, long long e) {
  if (e >= 0) return Rat(pow_int(num(base), e), pow_int(den(base), e));
  if (base == 0) throw DivisionByZero("0^negative");
  Int n = pow_int(den(base), -e);
  Int d = pow_int(num(base), -e);
  // cpp_rational's two-argument constructor rejects negative denominators.
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

Int mod_reduce(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

Int mod_inverse(const Int& x, const Int& m) {
  // Extended Euclid.
  Int a = mod_reduce(x, m), b = m;
  Int s0 = 1, s1 = 0;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (a != 1) throw ModulusNotCoprime("no inverse of " + to_string(x) + " mod " + to_string(m));
  return mod_reduce(s0, m);
}

Int mod_reduce(const Rat& x, const Int& m) {
  return mod_reduce(num(x) * mod_inverse(den(x), m), m);
}

Int mod_pow(Int base, Int e, const Int& m) {
  base = mod_reduce(base, m);
  Int r = 1;
  while (e > 0) {
    if ((e & 1) != 0) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

int legendre(const Int& u, const Int& l) {
  Int r = mod_pow(u, (l - 1) / 2, l);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  n = abs(n);
  if (n <= 1) return out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int isqrt(const Int& n) {
  if (n < 0) throw Error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

bool perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace qv

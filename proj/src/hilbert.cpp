#include "qv/hilbert.hpp"

#include <algorithm>

namespace qv {

namespace {

// Parity helpers for the dyadic symbol; x must be odd.
int eps2(const Int& x) { return static_cast<int>(mod_reduce(Int((x - 1) / 2), Int(2))); }
int omega2(const Int& x) { return static_cast<int>(mod_reduce(Int((x * x - 1) / 8), Int(2))); }

// Odd part of a rational as an integer residue modulo m (m a power of 2 or
// an odd prime; the denominator's odd part is invertible).
Int odd_unit_mod(const Rat& x, const Int& l, const Int& m) {
  Int n = unit_part(num(x), l);
  Int d = unit_part(den(x), l);
  return mod_reduce(Int(n * mod_inverse(d, m)), m);
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw DivisionByZero("hilbert symbol needs nonzero arguments");
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const Int& l = v.prime;
  if (l < 2 || !is_prime(l)) throw Error("place must be a prime or infinity");
  long long alpha = valuation(a, l);
  long long beta = valuation(b, l);
  if (l == 2) {
    Int u = odd_unit_mod(a, 2, 8);
    Int w = odd_unit_mod(b, 2, 8);
    long long e = static_cast<long long>(eps2(u)) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e % 2 != 0) ? -1 : 1;
  }
  Int u = odd_unit_mod(a, l, l);
  Int w = odd_unit_mod(b, l, l);
  long long eps_l = static_cast<long long>(mod_reduce(Int((l - 1) / 2), Int(2)));
  int sign = ((alpha % 2) * (beta % 2) * eps_l) % 2 != 0 ? -1 : 1;
  if (beta % 2 != 0) sign *= legendre(u, l);
  if (alpha % 2 != 0) sign *= legendre(w, l);
  return sign;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw DivisionByZero("ramification needs nonzero arguments");
  std::vector<Place> out;
  out.push_back(Place::at_prime(2));
  auto add_factors = [&](const Int& n) {
    for (const Int& l : prime_factors(n)) out.push_back(Place::at_prime(l));
  };
  add_factors(num(a));
  add_factors(den(a));
  add_factors(num(b));
  add_factors(den(b));
  out.push_back(Place::at_infinity());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RamificationReport ramification(const Rat& a, const Rat& b) {
  RamificationReport rep;
  int product = 1;
  for (const Place& v : relevant_places(a, b)) {
    int s = hilbert_symbol(a, b, v);
    rep.symbols.emplace_back(v, s);
    if (s == -1) rep.ramified.push_back(v);
    product *= s;
  }
  rep.product_is_one = (product == 1);
  if (!rep.product_is_one)
    throw ReciprocityViolation("product of local symbols for (" + to_string(a) + ", " +
                               to_string(b) + ") is -1");
  return rep;
}

}  // namespace qv

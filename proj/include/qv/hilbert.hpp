#pragma once

// Hilbert symbols (a, b)_v over the rationals, ramification sets of
// quaternion algebras, and the product-formula self-check.

#include <string>
#include <utility>
#include <vector>

#include "qv/numbers.hpp"

namespace qv {

struct Place {
  bool infinite = false;
  Int prime = 0;  // meaningful only when !infinite

  static Place at_infinity() { return Place{true, 0}; }
  static Place at_prime(const Int& l) { return Place{false, l}; }

  bool operator==(const Place& o) const {
    return infinite == o.infinite && (infinite || prime == o.prime);
  }
  bool operator<(const Place& o) const {  // finite places ascending, infinity last
    if (infinite != o.infinite) return !infinite;
    return prime < o.prime;
  }
  std::string str() const { return infinite ? "inf" : prime.str(); }
};

// (a, b)_v in {+1, -1}; a and b must be nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Places where the symbol can possibly be -1: infinity, 2, and the odd
// primes dividing numerator or denominator of a or b. Sorted, deduplicated.
std::vector<Place> relevant_places(const Rat& a, const Rat& b);

struct RamificationReport {
  std::vector<std::pair<Place, int>> symbols;  // symbol at every relevant place
  std::vector<Place> ramified;                 // places with symbol -1, sorted
  bool product_is_one = false;
};

// Evaluates the symbol at every relevant place and checks the product
// formula; an odd number of -1s is an internal error (ReciprocityViolation).
RamificationReport ramification(const Rat& a, const Rat& b);

}  // namespace qv

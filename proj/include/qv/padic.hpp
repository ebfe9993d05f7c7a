#pragma once

// Truncated l-adic arithmetic. A nonzero value is stored as
//
//     l^val * unit   with   unit in [1, l^digits), gcd(unit, l) = 1,
//
// meaning "the true value lies in l^val * unit + O(l^(val + digits))".
// Valuations of products are exact; sums carry absolute precision
// min over the operands. Two degenerate states exist: exact zero
// (valuation +infinity) and "approximate zero" -- a sum whose digits all
// cancelled, of which we only know valuation >= floor. The public sum
// throws PrecisionExhausted instead of ever producing an approximate zero;
// the lossy variant is for internal lattice arithmetic, where exact
// cancellation is legitimate and handled structurally.

#include <optional>
#include <string>

#include "qv/numbers.hpp"

namespace qv {

class Padic {
 public:
  static constexpr int kDefaultDigits = 32;

  // Exact zero at prime l.
  static Padic zero(const Int& l);
  // Approximate zero: all that is known is valuation >= floor.
  static Padic approx_zero(const Int& l, long long floor);
  // Truncation of an exact rational to `digits` significant digits.
  Padic(const Int& l, const Rat& value, int digits = kDefaultDigits);
  Padic(const Int& l, const Int& value, int digits = kDefaultDigits);

  const Int& prime() const { return l_; }
  bool is_zero() const { return state_ == State::kZero; }
  bool is_approx_zero() const { return state_ == State::kApproxZero; }
  bool is_regular() const { return state_ == State::kRegular; }
  bool is_unit() const { return is_regular() && val_ == 0; }

  // Valuation of a regular value (exact); throws on both zero states.
  long long valuation() const;
  // Lower bound on the valuation, defined in every state (LLONG_MAX for 0).
  long long valuation_floor() const;
  // Unit part in [1, l^digits); regular values only.
  const Int& unit() const;
  int digits() const;
  // Absolute precision: the true value is known modulo l^abs_precision().
  long long abs_precision() const;

  Padic neg() const;
  Padic mul(const Padic& y) const;
  Padic inv() const;             // DivisionByZero on either zero state
  Padic div(const Padic& y) const;
  Padic shift(long long e) const;  // multiply by l^e (exact)

  // Sum with absolute precision min(abs_precision()); throws
  // PrecisionExhausted if every known digit cancels.
  Padic add(const Padic& y) const;
  Padic sub(const Padic& y) const;
  // Same, but total cancellation yields an approximate zero instead.
  Padic add_lossy(const Padic& y) const;
  Padic sub_lossy(const Padic& y) const;

  // Hensel square root: nullopt when the value is provably a non-square
  // (odd valuation, or unit part a non-residue). For l = 2 at least three
  // significant digits are required (criterion mod 8), else
  // PrecisionExhausted. The root of an exact zero is exact zero.
  std::optional<Padic> sqrt() const;

  // True if the two truncations agree modulo l^min(abs precisions).
  bool agrees_with(const Padic& y) const;

  // Exact rational representative of the value modulo l^k, i.e.
  // l^val * (unit mod l^(k - val)) for val < k, else 0. Requires the value
  // to be known to absolute precision >= k.
  Rat canonical_rep(long long k) const;

  std::string str() const;

 private:
  enum class State { kZero, kApproxZero, kRegular };

  Padic() = default;
  void normalize_unit();

  Int l_ = 2;
  State state_ = State::kZero;
  long long val_ = 0;     // kRegular only
  Int unit_ = 0;          // kRegular only
  int digits_ = kDefaultDigits;
  long long floor_ = 0;   // kApproxZero only
};

}  // namespace qv

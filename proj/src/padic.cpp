#include "qv/padic.hpp"

#include <climits>
#include <sstream>

namespace qv {

namespace {
void check_same_prime(const Padic& x, const Padic& y) {
  if (x.prime() != y.prime())
    throw Error("mixed primes " + to_string(x.prime()) + " and " + to_string(y.prime()));
}
}  // namespace

Padic Padic::zero(const Int& l) {
  Padic z;
  z.l_ = l;
  z.state_ = State::kZero;
  return z;
}

Padic Padic::approx_zero(const Int& l, long long floor) {
  Padic z;
  z.l_ = l;
  z.state_ = State::kApproxZero;
  z.floor_ = floor;
  return z;
}

Padic::Padic(const Int& l, const Rat& value, int digits) {
  if (l < 2) throw Error("prime must be >= 2");
  if (digits < 1) throw Error("need at least one significant digit");
  l_ = l;
  digits_ = digits;
  if (value == 0) {
    state_ = State::kZero;
    return;
  }
  state_ = State::kRegular;
  long long vn = qv::valuation(num(value), l);
  long long vd = qv::valuation(den(value), l);
  val_ = vn - vd;
  Int n = unit_part(num(value), l);
  Int d = unit_part(den(value), l);
  Int m = pow_int(l_, digits_);
  unit_ = mod_reduce(n * mod_inverse(d, m), m);
}

Padic::Padic(const Int& l, const Int& value, int digits) : Padic(l, Rat(value), digits) {}

long long Padic::valuation() const {
  if (!is_regular()) throw PrecisionExhausted("valuation of a (near-)zero value is undefined");
  return val_;
}

long long Padic::valuation_floor() const {
  switch (state_) {
    case State::kZero: return LLONG_MAX;
    case State::kApproxZero: return floor_;
    default: return val_;
  }
}

const Int& Padic::unit() const {
  if (!is_regular()) throw PrecisionExhausted("unit part of a (near-)zero value is undefined");
  return unit_;
}

int Padic::digits() const {
  if (!is_regular()) throw PrecisionExhausted("digit count of a (near-)zero value is undefined");
  return digits_;
}

long long Padic::abs_precision() const {
  if (is_zero()) return LLONG_MAX;
  if (is_approx_zero()) return floor_;
  return val_ + digits_;
}

Padic Padic::neg() const {
  if (!is_regular()) return *this;
  Padic r = *this;
  r.unit_ = pow_int(l_, digits_) - unit_;
  return r;
}

Padic Padic::mul(const Padic& y) const {
  check_same_prime(*this, y);
  if (is_zero() || y.is_zero()) return zero(l_);
  if (is_approx_zero() || y.is_approx_zero())
    return approx_zero(l_, valuation_floor() + y.valuation_floor());
  Padic r;
  r.l_ = l_;
  r.state_ = State::kRegular;
  r.val_ = val_ + y.val_;
  r.digits_ = std::min(digits_, y.digits_);
  r.unit_ = mod_reduce(Int(unit_ * y.unit_), pow_int(l_, r.digits_));
  return r;
}

Padic Padic::inv() const {
  if (!is_regular()) throw DivisionByZero("inverse of a (near-)zero value");
  Padic r;
  r.l_ = l_;
  r.state_ = State::kRegular;
  r.val_ = -val_;
  r.digits_ = digits_;
  r.unit_ = mod_inverse(unit_, pow_int(l_, digits_));
  return r;
}

Padic Padic::div(const Padic& y) const { return mul(y.inv()); }

Padic Padic::shift(long long e) const {
  if (!is_regular()) {
    if (is_zero()) return *this;
    return approx_zero(l_, floor_ + e);
  }
  Padic r = *this;
  r.val_ += e;
  return r;
}

Padic Padic::add_lossy(const Padic& y) const {
  check_same_prime(*this, y);
  if (is_zero()) return y;
  if (y.is_zero()) return *this;
  // Absolute precision of the sum.
  long long abs_prec = std::min(abs_precision(), y.abs_precision());
  if (is_approx_zero() || y.is_approx_zero()) {
    const Padic& reg = is_approx_zero() ? y : *this;
    if (!reg.is_regular() || reg.val_ >= abs_prec) return approx_zero(l_, abs_prec);
    Padic r;
    r.l_ = l_;
    r.state_ = State::kRegular;
    r.val_ = reg.val_;
    r.digits_ = static_cast<int>(abs_prec - reg.val_);
    r.unit_ = mod_reduce(reg.unit_, pow_int(l_, r.digits_));
    return r;
  }
  long long v = std::min(val_, y.val_);
  long long known = abs_prec - v;  // digits of the sum known from valuation v up
  Int m = pow_int(l_, known);
  Int s = mod_reduce(Int(unit_ * pow_int(l_, val_ - v) + y.unit_ * pow_int(l_, y.val_ - v)), m);
  if (s == 0) return approx_zero(l_, abs_prec);
  long long t = qv::valuation(s, l_);
  Padic r;
  r.l_ = l_;
  r.state_ = State::kRegular;
  r.val_ = v + t;
  r.digits_ = static_cast<int>(known - t);
  r.unit_ = s / pow_int(l_, t);
  return r;
}

Padic Padic::add(const Padic& y) const {
  Padic r = add_lossy(y);
  if (r.is_approx_zero())
    throw PrecisionExhausted("sum cancelled to O(" + to_string(l_) + "^" +
                             std::to_string(r.floor_) + ")");
  return r;
}

Padic Padic::sub(const Padic& y) const { return add(y.neg()); }
Padic Padic::sub_lossy(const Padic& y) const { return add_lossy(y.neg()); }

std::optional<Padic> Padic::sqrt() const {
  if (is_zero()) return *this;
  if (is_approx_zero()) throw PrecisionExhausted("square root of an approximate zero");
  if (val_ % 2 != 0) return std::nullopt;  // odd valuation: not a square
  const Int& u = unit_;
  Padic r;
  r.l_ = l_;
  r.state_ = State::kRegular;
  r.val_ = val_ / 2;
  if (l_ == 2) {
    if (digits_ < 3) throw PrecisionExhausted("square root at l = 2 needs >= 3 digits");
    if (mod_reduce(u, 8) != 1) return std::nullopt;  // unit square iff = 1 mod 8
    // Lift: exactly one of r, r + 2^(k-1) squares to u modulo 2^(k+1).
    Int root = 1;
    for (int k = 3; k < digits_; ++k) {
      Int mk = pow_int(Int(2), k + 1);
      if (mod_reduce(Int(root * root), mk) != mod_reduce(u, mk)) root += pow_int(Int(2), k - 1);
    }
    r.digits_ = digits_ - 1;  // the root is determined modulo 2^(digits-1)
    r.unit_ = mod_reduce(root, pow_int(Int(2), r.digits_));
    return r;
  }
  // Odd l: find a base residue by enumeration, then lift digit by digit.
  Int u0 = mod_reduce(u, l_);
  Int root = 0;
  for (Int c = 1; c < l_; ++c) {
    if (c * c % l_ == u0) {
      root = c;
      break;
    }
  }
  if (root == 0) return std::nullopt;  // unit is a non-residue
  for (int k = 1; k < digits_; ++k) {
    Int mk = pow_int(l_, k + 1);
    Int diff = mod_reduce(Int(u - root * root), mk) / pow_int(l_, k);
    Int c = mod_reduce(Int(diff * mod_inverse(Int(2 * root), l_)), l_);
    root += c * pow_int(l_, k);
  }
  r.digits_ = digits_;
  r.unit_ = mod_reduce(root, pow_int(l_, digits_));
  return r;
}

bool Padic::agrees_with(const Padic& y) const {
  check_same_prime(*this, y);
  long long k = std::min(abs_precision(), y.abs_precision());
  if (k == LLONG_MAX) return is_zero() && y.is_zero();
  // Compare both truncations modulo l^k, scaled by the smaller valuation so
  // negative valuations stay integral.
  long long base = std::min({valuation_floor(), y.valuation_floor(), k});
  Int m = pow_int(l_, k - base);
  auto lifted = [&](const Padic& x) -> Int {
    if (!x.is_regular() || x.val_ >= k) return 0;
    return mod_reduce(Int(x.unit_ * pow_int(l_, x.val_ - base)), m);
  };
  return lifted(*this) == lifted(y);
}

Rat Padic::canonical_rep(long long k) const {
  if (is_zero()) return Rat(0);
  if (abs_precision() < k)
    throw PrecisionExhausted("value known only mod l^" + std::to_string(abs_precision()) +
                             ", representative mod l^" + std::to_string(k) + " requested");
  if (is_approx_zero() || val_ >= k) return Rat(0);
  Int u = mod_reduce(unit_, pow_int(l_, k - val_));
  Rat scale = pow_rat(Rat(l_), val_);
  return scale * Rat(u);
}

std::string Padic::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "0";
  } else if (is_approx_zero()) {
    os << "O(" << l_ << "^" << floor_ << ")";
  } else {
    os << l_ << "^" << val_ << "*" << unit_ << " + O(" << l_ << "^" << (val_ + digits_) << ")";
  }
  return os.str();
}

}  // namespace qv

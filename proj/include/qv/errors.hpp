#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// Base class for every failure mode this library distinguishes by name.
// Callers that only care about "the computation failed" can catch qv::Error;
// diagnostic tooling catches the concrete types.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QV_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                         \
    explicit Name(const std::string& what) : Error(what) {}     \
  }

// Scalar / p-adic arithmetic.
QV_DEFINE_ERROR(DivisionByZero);      // exact or p-adic division by (approximate) zero
QV_DEFINE_ERROR(PrecisionExhausted);  // all significant p-adic digits cancelled
QV_DEFINE_ERROR(ReciprocityViolation);// Hilbert symbols multiplied to -1 (internal bug trap)

// Algebra / order construction.
QV_DEFINE_ERROR(SearchExhausted);     // bounded search found no admissible pair / element
QV_DEFINE_ERROR(SaturationFailed);    // order saturation could not reach the target discriminant
QV_DEFINE_ERROR(NoZeroDivisor);       // residue algebra unexpectedly had no zero divisor (bug trap)
QV_DEFINE_ERROR(NonRationalNorm);     // reduced norm left the base field (bug trap)

// Group-side checks.
QV_DEFINE_ERROR(DeterminantNotOne);   // matrix expected in SL had det != 1
QV_DEFINE_ERROR(ModulusNotCoprime);   // reduction modulus shares a factor with the inverted prime
QV_DEFINE_ERROR(WitnessNotHyperbolic);// candidate isometry had a fixed point in the scanned ball

// Resource control.
QV_DEFINE_ERROR(BudgetExceeded);      // vertex/edge budget hit during tree exploration

#undef QV_DEFINE_ERROR

}  // namespace qv

#pragma once

/// High-precision decimal layer (MPFR via Boost.Multiprecision). Only the
/// Lp norms for non-integer p and the analytic companion curves live here;
/// everything with a theorem attached stays in exact rationals.

#include <boost/multiprecision/mpfr.hpp>

#include "wvg/numeric.hpp"

namespace wvg {

using Dec = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDecimalDigits = 50;

/// Sets the working mpfr precision (significant decimal digits, plus guard
/// digits) for the current scope and restores the previous value on exit.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : previous_(Dec::default_precision()) {
    Dec::default_precision(digits + 10);
  }
  ~ScopedPrecision() { Dec::default_precision(previous_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

inline Dec dec_from_rat(const Rat& q) { return Dec(q.get_mpq_t()); }

/// Exact rational value of a Dec (every mpfr number is a binary rational).
Rat rat_from_dec(const Dec& x);

/// Deterministic decimal rendering with `sig_digits` significant digits.
inline std::string dec_string(const Dec& x, unsigned sig_digits) {
  return decimal_string(rat_from_dec(x), sig_digits);
}

}  // namespace wvg

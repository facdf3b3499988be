#pragma once

/// Exact arithmetic foundation: big integers and rationals on top of GMP,
/// parsing of exact numeric literals, deterministic decimal rendering, and
/// cached binomial/factorial builders used by the counting engines.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wvg {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when an operation exceeds a hard capability cap (e.g. brute force
/// enumeration or nucleolus player limits), as opposed to invalid input.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Rational from numerator/denominator, canonicalized (lowest terms,
/// positive denominator). Throws on zero denominator.
Rat make_rat(const Int& num, const Int& den);

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

/// Parses an exact rational literal: "p/q" with integer p and positive q,
/// a decimal such as "0.42" (converted exactly via powers of ten), or a
/// plain integer. No exponents, no whitespace.
Rat parse_rational(std::string_view text);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, unsigned long exp);

inline Rat rat_abs(const Rat& q) { return q >= 0 ? q : Rat(-q); }

/// Renders an exact rational as a decimal string with `sig_digits`
/// significant digits (round half away from zero). Terminating decimals
/// shorter than the budget are rendered exactly ("1/2" -> "0.5").
/// Deterministic: same input, same string.
std::string decimal_string(const Rat& value, unsigned sig_digits);

/// Fraction rendering in lowest terms: "3/7", "2", "-1/3".
std::string fraction_string(const Rat& value);

/// Memoizing Pascal-row builder. Rows are computed multiplicatively in
/// exact arithmetic and cached; out-of-range k yields 0. Not thread-safe;
/// intended to be owned locally by each computation.
class BinomialTable {
 public:
  const std::vector<Int>& row(unsigned long n);
  Int operator()(long n, long k);

 private:
  std::unordered_map<unsigned long, std::vector<Int>> rows_;
};

/// [0!, 1!, ..., n!]
std::vector<Int> factorial_table(unsigned long n);

}  // namespace wvg

#include "wvg/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace wvg {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int_token(const std::string& s) {
  return Int(s[0] == '+' ? s.substr(1) : s, 10);  // mpz rejects a leading '+'
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw std::invalid_argument("bad fraction literal: '" + s + "'");
    Int p = parse_int_token(num), q = parse_int_token(den);
    if (q <= 0) throw std::invalid_argument("fraction denominator must be positive: '" + s + "'");
    return make_rat(p, q);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string head = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    std::string intpart = head;
    bool neg = false;
    if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) {
      neg = intpart[0] == '-';
      intpart = intpart.substr(1);
    }
    if (intpart.empty()) intpart = "0";
    if (frac.empty() || !is_integer_token(intpart) || !is_integer_token(frac))
      throw std::invalid_argument("bad decimal literal: '" + s + "'");
    Int scale = int_pow(Int(10), frac.size());
    Int value = parse_int_token(intpart) * scale + parse_int_token(frac);
    if (neg) value = -value;
    return make_rat(value, scale);
  }
  if (!is_integer_token(s)) throw std::invalid_argument("bad numeric literal: '" + s + "'");
  return Rat(parse_int_token(s));
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  return make_rat(int_pow(base.get_num(), exp), int_pow(base.get_den(), exp));
}

std::string decimal_string(const Rat& value, unsigned sig_digits) {
  if (sig_digits == 0) throw std::invalid_argument("sig_digits must be >= 1");
  const bool neg = value < 0;
  Int p = abs(value.get_num());
  const Int& d = value.get_den();
  Int ipart = p / d;
  Int rem = p % d;
  std::string istr = ipart.get_str();
  if (rem == 0) return neg ? "-" + istr : istr;

  // fractional digits: significant digits start at the first nonzero digit
  // of the whole number (integer part if any, else first nonzero fractional).
  std::string frac;
  bool exact = false;
  std::size_t significant = (ipart == 0) ? 0 : istr.size();
  bool seen_nonzero = ipart != 0;
  while (significant < sig_digits) {
    rem *= 10;
    Int digit = rem / d;
    rem = rem % d;
    const char c = static_cast<char>('0' + digit.get_si());
    frac.push_back(c);
    if (c != '0') seen_nonzero = true;
    if (seen_nonzero) ++significant;
    if (rem == 0) {
      exact = true;
      break;
    }
  }
  if (!exact) {
    // round half away from zero on the next digit
    if (2 * rem >= d) {
      int i = static_cast<int>(frac.size()) - 1;
      for (; i >= 0; --i) {
        if (frac[i] == '9') {
          frac[i] = '0';
        } else {
          ++frac[i];
          break;
        }
      }
      if (i < 0) {
        ipart += 1;
        istr = ipart.get_str();
      }
    }
  } else {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  std::string out = istr;
  if (!frac.empty()) out += "." + frac;
  return neg ? "-" + out : out;
}

std::string fraction_string(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  std::string s = v.get_num().get_str();
  if (v.get_den() != 1) s += "/" + v.get_den().get_str();
  return s;
}

const std::vector<Int>& BinomialTable::row(unsigned long n) {
  auto it = rows_.find(n);
  if (it != rows_.end()) return it->second;
  std::vector<Int> r(n + 1);
  r[0] = 1;
  for (unsigned long k = 1; k <= n; ++k) r[k] = r[k - 1] * (n - k + 1) / k;
  return rows_.emplace(n, std::move(r)).first->second;
}

Int BinomialTable::operator()(long n, long k) {
  if (k < 0 || k > n || n < 0) return Int(0);
  return row(static_cast<unsigned long>(n))[static_cast<std::size_t>(k)];
}

std::vector<Int> factorial_table(unsigned long n) {
  std::vector<Int> f(n + 1);
  f[0] = 1;
  for (unsigned long i = 1; i <= n; ++i) f[i] = f[i - 1] * i;
  return f;
}

}  // namespace wvg

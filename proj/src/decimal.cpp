#include "wvg/decimal.hpp"

namespace wvg {

Rat rat_from_dec(const Dec& x) {
  if (!boost::multiprecision::isfinite(x))
    throw std::domain_error("non-finite decimal value");
  Rat q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  q.canonicalize();
  return q;
}

}  // namespace wvg

#include "citheta/fp.hpp"

namespace citheta {

bool is_prime(fp_t n) {
  if (n < 2) return false;
  for (fp_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(fp_t p) : p_(p) {
  if (p < 2 || p >= (fp_t(1) << 31))
    throw std::invalid_argument("field characteristic out of range");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

fp_t Fp::inv(fp_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on (a, p)
  fp_t old_r = a, r = p_;
  fp_t old_s = 1, s = 0;
  while (r != 0) {
    fp_t q = old_r / r;
    fp_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

fp_t Fp::pow(fp_t a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  fp_t r = 1, b = a % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

}  // namespace citheta

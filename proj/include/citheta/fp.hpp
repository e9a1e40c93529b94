#pragma once

#include <cstdint>
#include <stdexcept>

namespace citheta {

using fp_t = std::int64_t;

// Arithmetic context for the prime field F_p. Residues are kept in [0, p).
// p must stay below 2^31 so that products of two residues fit in int64.
class Fp {
 public:
  explicit Fp(fp_t p);

  fp_t p() const { return p_; }

  fp_t reduce(fp_t a) const {
    fp_t r = a % p_;
    return r < 0 ? r + p_ : r;
  }
  fp_t add(fp_t a, fp_t b) const {
    fp_t r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  fp_t sub(fp_t a, fp_t b) const {
    fp_t r = a - b;
    return r < 0 ? r + p_ : r;
  }
  fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
  fp_t mul(fp_t a, fp_t b) const { return (a * b) % p_; }
  fp_t inv(fp_t a) const;
  fp_t div(fp_t a, fp_t b) const { return mul(a, inv(b)); }
  fp_t pow(fp_t a, std::int64_t e) const;

  bool operator==(const Fp& o) const { return p_ == o.p_; }

 private:
  fp_t p_;
};

bool is_prime(fp_t n);

inline constexpr fp_t kDefaultPrime = 32003;

}  // namespace citheta

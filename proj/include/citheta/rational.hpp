#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace citheta {

// Exact rational with int64 parts; enough headroom for difference-table
// coefficients at desk scale.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace citheta

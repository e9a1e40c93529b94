#pragma once

#include <vector>

namespace citheta {

// Monomial in a fixed number of variables; deg caches the weighted total
// degree so that comparisons and homogeneity checks never re-scan weights.
struct Monomial {
  std::vector<int> e;
  int deg = 0;

  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial make_monomial(std::vector<int> exps, const std::vector<int>& weights);
Monomial one_monomial(int nvars);

bool mono_divides(const Monomial& a, const Monomial& b);       // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);       // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int>& weights);

// Graded reverse lexicographic order: higher degree wins; ties broken by the
// last differing exponent, smaller exponent winning.
// Returns negative / zero / positive like strcmp.
int grevlex_cmp(const Monomial& a, const Monomial& b);

}  // namespace citheta

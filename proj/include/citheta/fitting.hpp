#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "citheta/rational.hpp"

namespace citheta {

// r-th backward difference of an integer sequence; entry i of the result is
// the difference at position i + r of the input. Throws when the sequence is
// too short.
std::vector<long long> nabla(const std::vector<long long>& seq, int r);

long long binomial(int n, int k);

struct PolyFit {
  int degree = -1;                 // -1 for the zero polynomial
  std::vector<Rat> coeffs;         // standard basis, lowest power first
  long long leading_binomial = 0;  // stabilized value of the degree-th difference
  int fit_start = 0;               // first index from which the fit is exact
};

// Fits the tail of an integer sequence with a polynomial by requiring the
// (d+1)-st backward differences to vanish on the trailing `window` entries,
// for the smallest d that works. nullopt when no degree stabilizes within
// the computable range.
std::optional<PolyFit> fit_polynomial_tail(const std::vector<long long>& seq, int window);

Rat eval_poly(const std::vector<Rat>& coeffs, long long x);

}  // namespace citheta

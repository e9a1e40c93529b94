#pragma once

#include <vector>

#include "citheta/groebner.hpp"
#include "citheta/monomial.hpp"

namespace citheta {

// Set of minimal monomial generators of a monomial ideal (a lead-term
// staircase). Dimension, degreewise counts and finite lengths of graded
// quotients are all read off combinatorially from here.
struct Staircase {
  std::vector<Monomial> gens;

  bool contains(const Monomial& m) const;
  void add(const Monomial& m);
  bool is_whole_ring() const;  // 1 in the ideal
};

std::vector<Monomial> standard_monomials(const Staircase& st, const std::vector<int>& weights,
                                         int degree);
long long count_standard(const Staircase& st, const std::vector<int>& weights, int degree);

// Krull dimension of S/st: largest set of variables meeting no generator's
// support; -1 when st contains 1 (the zero ring).
int staircase_dim(const Staircase& st, int nvars);

// Per-component staircase of a free-module quotient F/W from the lead terms
// of a Gröbner basis of W.
struct ModuleStaircase {
  std::vector<Staircase> comps;
  std::vector<int> shifts;
  std::vector<int> weights;

  long long hilbert(int degree) const;
  int dim() const;                       // -1 for the zero module
  bool finite_length() const { return dim() <= 0; }
  long long total_length() const;        // requires finite_length()
  int max_standard_degree() const;       // top degree with a standard monomial; finite case
};

ModuleStaircase module_staircase(const GBasis& gb);

}  // namespace citheta

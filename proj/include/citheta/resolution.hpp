#pragma once

#include "citheta/homology.hpp"

namespace citheta {

// Prefix of a minimal graded free resolution. diff[i] is the differential
// F_{i+1} -> F_i; betti[i] lists the generator degrees of F_i. When the
// module has finite projective dimension the prefix ends with `finished` set
// and the last computed syzygy module zero.
struct ResolutionPrefix {
  QuotientRingPtr ring;
  std::vector<std::vector<int>> betti;
  std::vector<MatrixPoly> diff;
  bool finished = false;
  int n_computed = 0;  // highest homological degree with betti data

  // filled by lift_and_operators:
  std::vector<MatrixPoly> lifted;                 // differentials as maps over S
  std::vector<std::vector<MatrixPoly>> operators;  // operators[i][k]: F_{k+2} -> F_k for t_{i+1}
  bool has_operators = false;

  const std::vector<int>& shifts(int n) const { return betti[n]; }
  int rank(int n) const { return n <= n_computed ? int(betti[n].size()) : 0; }
};

// Minimal free resolution over the module's own ring, up to homological
// degree n_max (or to completion if the kernel vanishes earlier).
ResolutionPrefix resolve(const ModulePresentation& m, int n_max);

// The module viewed over the ambient polynomial ring, resolved to completion.
ResolutionPrefix min_resolution_S(const ModulePresentation& m);
ModulePresentation as_s_module(const ModulePresentation& m);

int projective_dimension_S(const ModulePresentation& m);
int depth_of(const ModulePresentation& m);  // dim S - pd_S, at the irrelevant ideal

// Lifts the differentials to S entrywise and solves d~^2 = sum f_i t~_i by
// division with quotients against the relation ideal; the identity is checked
// exactly and the reduced operators t_i are stored on the resolution.
void lift_and_operators(ResolutionPrefix& res);

// F tensor N as a complex of presented modules, spots 0..up_to.
ModuleComplex tensor_complex(const ResolutionPrefix& res, const ModulePresentation& n, int up_to);

// Homology bases of F tensor N in fixed degreewise coordinates, plus the
// matrices the operators induce on them.
struct TorBasis {
  std::map<int, std::vector<std::vector<fp_t>>> reps;  // internal degree -> representatives
  long long total = 0;
  std::map<int, int> offset;  // flattened index of each degree block
};

struct OperatorAction {
  std::vector<long long> lengths;            // exact lengths per homological degree
  std::vector<TorBasis> tor;                 // bases per homological degree
  std::vector<std::vector<MatrixF>> act;     // act[i][n]: Tor_n -> Tor_{n-2}, n >= 2
  std::vector<int> op_degrees;               // degrees of the f_i
};

OperatorAction tor_action(const ResolutionPrefix& res, const ModulePresentation& n);

struct ChangeOfRingsReport {
  std::vector<long long> lengths_R, lengths_Rp;
  std::vector<int> window;                  // positions where the length identity was checked
  bool ses_identity = true;                 // l^{R'}_n = l^R_n - l^R_{n-2} on the window
  bool les_bounds = true;                   // l^{R'}_n <= l^R_n + l^R_{n-2} everywhere
  std::vector<std::string> failures;
};

// Length-level consistency of the change-of-rings long exact sequence for
// R = R'/(g): exactness bounds everywhere and the short-exact-sequence length
// identity on the trailing window.
ChangeOfRingsReport change_of_rings_check(const ResolutionPrefix& res_r,
                                          const ResolutionPrefix& res_rp,
                                          const ModulePresentation& n_over_r,
                                          const ModulePresentation& n_over_rp, int window);

}  // namespace citheta

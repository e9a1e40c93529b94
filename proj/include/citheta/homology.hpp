#pragma once

#include <map>

#include "citheta/presentation.hpp"

namespace citheta {

// Chain complex of finitely presented graded modules: maps[i] carries
// spots[i+1] into spots[i], written on generators.
struct ModuleComplex {
  QuotientRingPtr ring;
  std::vector<ModulePresentation> spots;
  std::vector<MatrixPoly> maps;

  int length() const { return int(spots.size()); }
  // Checks that consecutive maps compose to zero modulo relations.
  void validate() const;
};

// Homology at position pos as a finitely presented module (subquotient route).
ModulePresentation homology_presentation(const ModuleComplex& cx, int pos);

// Exact length; throws when the homology has infinite length.
long long homology_length_exact(const ModuleComplex& cx, int pos);

struct DegreewiseOptions {
  int cutoff = 0;
  int zero_window = 4;
};

struct DegreewiseHomology {
  std::map<int, long long> dims;  // internal degree -> vector space dimension
  long long total = 0;
  bool certified = false;  // trailing zero window observed
};

// Degreewise linear-algebra route, independent of the syzygy path; distinct
// degrees are computed in parallel.
DegreewiseHomology homology_degreewise(const ModuleComplex& cx, int pos,
                                       const DegreewiseOptions& opts);

// Matrix of a generator-level map on graded pieces: columns are the images of
// the source piece basis expressed in the target piece basis.
MatrixF piece_matrix(const MatrixPoly& map, const CokerPieces& source, const CokerPieces& target,
                     int d_source, int d_target, const Fp& F);

}  // namespace citheta

#pragma once

#include <optional>

#include "citheta/fitting.hpp"
#include "citheta/ring.hpp"

namespace citheta {

struct MatrixPoly {
  int rows = 0, cols = 0;
  std::vector<Poly> a;  // row-major

  MatrixPoly() = default;
  MatrixPoly(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  Poly& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Poly& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  bool is_zero() const;
};

MatrixPoly mat_poly_mul(const MatrixPoly& x, const MatrixPoly& y, const Fp& F);

ModuleElem column_elem(const MatrixPoly& m, int col);
std::vector<ModuleElem> matrix_columns(const MatrixPoly& m);
MatrixPoly columns_to_matrix(const std::vector<ModuleElem>& cols, int rank, const Fp& F);

struct HilbertData {
  std::vector<long long> values;     // h(0), ..., h(max_degree)
  std::optional<long long> length;   // present for finite-length modules
  std::optional<PolyFit> polynomial_part;
};

// Finitely generated graded module over a quotient ring, given by generator
// degrees and a homogeneous relation matrix (rows = generators, columns =
// relations). Entries are kept reduced modulo the ring's relation ideal.
class ModulePresentation {
 public:
  ModulePresentation(QuotientRingPtr ring, std::vector<int> gen_shifts, MatrixPoly relations);

  static ModulePresentation quotient_by_ideal(QuotientRingPtr ring, std::vector<Poly> gens);
  static ModulePresentation free_module(QuotientRingPtr ring, std::vector<int> shifts);
  static ModulePresentation residue_field(QuotientRingPtr ring);

  const QuotientRing& ring() const { return *ring_; }
  QuotientRingPtr ring_ptr() const { return ring_; }
  const Fp& field() const { return ring_->field(); }
  const std::vector<int>& gen_shifts() const { return gen_shifts_; }
  int ngens() const { return int(gen_shifts_.size()); }
  const MatrixPoly& relations() const { return relations_; }

  // Gröbner basis over S of the column span together with the ring relations.
  const GBasis& span_gb() const;
  const ModuleStaircase& staircase() const;

  HilbertData hilbert_function(int max_degree, int fit_window = 3) const;
  std::optional<long long> length() const;  // nullopt means infinite
  int dimension() const;                    // -1 for the zero module
  bool is_zero_module() const;

  ModulePresentation over_ring(QuotientRingPtr target, const std::vector<Poly>& extra_relations) const;
  ModulePresentation tensor(const ModulePresentation& other) const;
  ModulePresentation direct_sum(const ModulePresentation& other) const;
  ModulePresentation twist(int e) const;
  ModulePresentation minimalized() const;  // split off unit entries

 private:
  QuotientRingPtr ring_;
  std::vector<int> gen_shifts_;
  MatrixPoly relations_;
  mutable std::optional<GBasis> span_gb_;
  mutable std::optional<ModuleStaircase> staircase_;
};

// Minimal homogeneous generating set of the submodule spanned by the given
// columns: candidates are kept exactly when they add something beyond the
// span of lower degrees. Works over the quotient ring.
std::vector<ModuleElem> minimal_generators(const QuotientRing& ring, const std::vector<int>& shifts,
                                           std::vector<ModuleElem> candidates);

// Syzygies over the quotient ring of the given columns, entries reduced.
std::vector<ModuleElem> syzygies_over(const QuotientRing& ring, const std::vector<int>& shifts,
                                      const std::vector<ModuleElem>& cols, int degree_cap = -1);

// Degreewise coordinates in graded pieces of a free module over a quotient
// ring; the basis of a piece is the set of standard monomials per component.
class FreePieces {
 public:
  FreePieces(const QuotientRing& ring, std::vector<int> shifts);

  struct BasisElem {
    int comp;
    Monomial m;
  };
  const std::vector<BasisElem>& basis(int d) const;
  int dim(int d) const { return int(basis(d).size()); }
  std::vector<fp_t> coords(const ModuleElem& v, int d) const;  // reduces mod ring first
  int index_of(int comp, const Monomial& m, int d) const;      // -1 if absent

 private:
  const QuotientRing& ring_;
  std::vector<int> shifts_;
  mutable std::map<int, std::vector<BasisElem>> cache_;
  mutable std::map<int, std::map<std::pair<int, std::vector<int>>, int>> index_;
};

// Like FreePieces but for the quotient by a relation submodule: the staircase
// comes from a Gröbner basis of (relations + ring relations).
class CokerPieces {
 public:
  CokerPieces(const ModulePresentation& m);

  const std::vector<FreePieces::BasisElem>& basis(int d) const;
  int dim(int d) const { return int(basis(d).size()); }
  std::vector<fp_t> coords(const ModuleElem& v, int d) const;

 private:
  const ModulePresentation& mod_;
  mutable std::map<int, std::vector<FreePieces::BasisElem>> cache_;
  mutable std::map<int, std::map<std::pair<int, std::vector<int>>, int>> index_;
};

}  // namespace citheta

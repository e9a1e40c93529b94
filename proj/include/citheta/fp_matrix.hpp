#pragma once

#include <optional>
#include <vector>

#include "citheta/fp.hpp"

namespace citheta {

// Dense matrix over F_p, row-major.
class MatrixF {
 public:
  MatrixF() : rows_(0), cols_(0) {}
  MatrixF(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static MatrixF identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  fp_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  fp_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  fp_t* row(int r) { return a_.data() + size_t(r) * cols_; }
  const fp_t* row(int r) const { return a_.data() + size_t(r) * cols_; }

  MatrixF transposed() const;
  bool is_zero() const;
  bool operator==(const MatrixF& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<fp_t> a_;
};

struct EchelonForm {
  MatrixF reduced;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Reduced row-echelon form. The OpenMP variant parallelizes the row-update
// loop; pivot choice is a serial scan, so both variants return the same
// matrix for the same input.
EchelonForm rref(const MatrixF& m, const Fp& F);
EchelonForm rref_serial(const MatrixF& m, const Fp& F);

int rank_of(const MatrixF& m, const Fp& F);

// Columns form a basis of { v : m v = 0 }; cols() == m.cols() - rank(m).
MatrixF kernel_basis(const MatrixF& m, const Fp& F);

MatrixF mat_mul(const MatrixF& a, const MatrixF& b, const Fp& F);

// One solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<fp_t>> solve(const MatrixF& a, const std::vector<fp_t>& b, const Fp& F);

// Incrementally maintained reduced echelon row space.
class RowSpace {
 public:
  RowSpace(int width, const Fp& F) : width_(width), F_(F) {}

  // Reduces the row against the space; inserts the residual if nonzero.
  // Returns true when the rank grew.
  bool insert(std::vector<fp_t> row);
  // Residual of a row modulo the space (not inserted).
  std::vector<fp_t> reduce(std::vector<fp_t> row) const;
  bool contains(const std::vector<fp_t>& row) const;
  int rank() const { return int(rows_.size()); }

 private:
  int width_;
  Fp F_;
  std::vector<std::vector<fp_t>> rows_;  // echelon, unit pivots
  std::vector<int> pivots_;
};

}  // namespace citheta

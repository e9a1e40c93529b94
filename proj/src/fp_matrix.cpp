#include "citheta/fp_matrix.hpp"

namespace citheta {

namespace {

// Below this many entries the OpenMP dispatch is pure overhead.
constexpr long kParallelThreshold = 1 << 14;

EchelonForm rref_impl(MatrixF m, const Fp& F, bool parallel) {
  const int rows = m.rows(), cols = m.cols();
  EchelonForm out;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const fp_t piv_inv = F.inv(m.at(r, c));
    for (int j = c; j < cols; ++j) m.at(r, j) = F.mul(m.at(r, j), piv_inv);

#pragma omp parallel for schedule(static) if (parallel)
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const fp_t f = m.at(i, c);
      if (f == 0) continue;
      const fp_t* src = m.row(r);
      fp_t* dst = m.row(i);
      for (int j = c; j < cols; ++j) dst[j] = F.sub(dst[j], F.mul(f, src[j]));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

}  // namespace

MatrixF MatrixF::identity(int n) {
  MatrixF m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixF MatrixF::transposed() const {
  MatrixF t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool MatrixF::is_zero() const {
  for (fp_t v : a_)
    if (v != 0) return false;
  return true;
}

EchelonForm rref(const MatrixF& m, const Fp& F) {
  const bool parallel = long(m.rows()) * m.cols() >= kParallelThreshold;
  return rref_impl(m, F, parallel);
}

EchelonForm rref_serial(const MatrixF& m, const Fp& F) { return rref_impl(m, F, false); }

int rank_of(const MatrixF& m, const Fp& F) { return rref(m, F).rank; }

MatrixF kernel_basis(const MatrixF& m, const Fp& F) {
  EchelonForm e = rref(m, F);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  MatrixF basis(cols, cols - e.rank);
  int k = 0;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    basis.at(fc, k) = 1;
    for (int pr = 0; pr < e.rank; ++pr) {
      const int pc = e.pivot_cols[pr];
      const fp_t v = e.reduced.at(pr, fc);
      if (v != 0) basis.at(pc, k) = F.neg(v);
    }
    ++k;
  }
  return basis;
}

std::optional<std::vector<fp_t>> solve(const MatrixF& a, const std::vector<fp_t>& b, const Fp& F) {
  MatrixF aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  EchelonForm e = rref(aug, F);
  std::vector<fp_t> x(a.cols(), 0);
  for (int r = 0; r < e.rank; ++r) {
    const int pc = e.pivot_cols[r];
    if (pc == a.cols()) return std::nullopt;  // pivot in the constant column
    x[pc] = e.reduced.at(r, a.cols());
  }
  return x;
}

std::vector<fp_t> RowSpace::reduce(std::vector<fp_t> row) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const fp_t f = row[pivots_[k]];
    if (f == 0) continue;
    const auto& r = rows_[k];
    for (int j = pivots_[k]; j < width_; ++j)
      if (r[j] != 0) row[j] = F_.sub(row[j], F_.mul(f, r[j]));
  }
  return row;
}

bool RowSpace::contains(const std::vector<fp_t>& row) const {
  auto res = reduce(row);
  for (fp_t v : res)
    if (v != 0) return false;
  return true;
}

bool RowSpace::insert(std::vector<fp_t> row) {
  row = reduce(std::move(row));
  int piv = -1;
  for (int j = 0; j < width_; ++j) {
    if (row[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  const fp_t inv = F_.inv(row[piv]);
  for (int j = piv; j < width_; ++j) row[j] = F_.mul(row[j], inv);
  // keep earlier rows reduced against the new pivot
  for (size_t k = 0; k < rows_.size(); ++k) {
    const fp_t f = rows_[k][piv];
    if (f == 0) continue;
    for (int j = piv; j < width_; ++j)
      rows_[k][j] = F_.sub(rows_[k][j], F_.mul(f, row[j]));
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b, const Fp& F) {
  MatrixF c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const fp_t av = a.at(i, k);
      if (av == 0) continue;
      const fp_t* brow = b.row(k);
      fp_t* crow = c.row(i);
      for (int j = 0; j < b.cols(); ++j) {
        if (brow[j] != 0) crow[j] = F.add(crow[j], F.mul(av, brow[j]));
      }
    }
  }
  return c;
}

}  // namespace citheta

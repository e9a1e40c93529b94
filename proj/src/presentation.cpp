#include "citheta/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "citheta/fp_matrix.hpp"

namespace citheta {

bool MatrixPoly::is_zero() const {
  for (const auto& p : a)
    if (!p.is_zero()) return false;
  return true;
}

MatrixPoly mat_poly_mul(const MatrixPoly& x, const MatrixPoly& y, const Fp& F) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
  MatrixPoly z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Poly& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        z.at(i, j) = poly_add(z.at(i, j), poly_mul(xv, y.at(k, j), F), F);
      }
    }
  return z;
}

ModuleElem column_elem(const MatrixPoly& m, int col) {
  std::vector<ModTerm> terms;
  for (int i = 0; i < m.rows; ++i)
    for (const auto& t : m.at(i, col).terms()) terms.push_back({i, t.m, t.c});
  ModuleElem v;
  // entries are canonical per row; a full sort keeps the element canonical
  std::sort(terms.begin(), terms.end(), [](const ModTerm& a, const ModTerm& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return grevlex_cmp(a.m, b.m) > 0;
  });
  v.raw() = std::move(terms);
  return v;
}

std::vector<ModuleElem> matrix_columns(const MatrixPoly& m) {
  std::vector<ModuleElem> cols;
  cols.reserve(m.cols);
  for (int j = 0; j < m.cols; ++j) cols.push_back(column_elem(m, j));
  return cols;
}

MatrixPoly columns_to_matrix(const std::vector<ModuleElem>& cols, int rank, const Fp& F) {
  MatrixPoly m(rank, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rank; ++i) m.at(i, int(j)) = elem_extract_component(cols[j], i, F);
  return m;
}

static ModuleElem reduce_mod_ring(const QuotientRing& L, const ModuleElem& v, int rank) {
  std::vector<ModTerm> terms;
  for (int i = 0; i < rank; ++i) {
    Poly p = L.nf(elem_extract_component(v, i, L.field()));
    for (const auto& t : p.terms()) terms.push_back({i, t.m, t.c});
  }
  return elem_from_terms(std::move(terms), ModuleOrder::standard(rank), L.field());
}

ModulePresentation::ModulePresentation(QuotientRingPtr ring, std::vector<int> gen_shifts,
                                       MatrixPoly relations)
    : ring_(std::move(ring)), gen_shifts_(std::move(gen_shifts)), relations_(std::move(relations)) {
  if (relations_.rows != int(gen_shifts_.size()))
    throw std::invalid_argument("relation matrix rows must match generator count");
  const Fp& F = ring_->field();
  for (auto& p : relations_.a) p = ring_->nf(p);
  for (int j = 0; j < relations_.cols; ++j) {
    ModuleElem col = column_elem(relations_, j);
    if (!elem_is_homogeneous(col, gen_shifts_))
      throw std::invalid_argument("relation column is not homogeneous");
  }
  (void)F;
}

ModulePresentation ModulePresentation::quotient_by_ideal(QuotientRingPtr ring,
                                                         std::vector<Poly> gens) {
  MatrixPoly rel(1, int(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    if (!gens[j].is_homogeneous()) throw std::invalid_argument("ideal generator not homogeneous");
    rel.at(0, int(j)) = std::move(gens[j]);
  }
  return ModulePresentation(std::move(ring), {0}, std::move(rel));
}

ModulePresentation ModulePresentation::free_module(QuotientRingPtr ring, std::vector<int> shifts) {
  MatrixPoly rel(int(shifts.size()), 0);
  return ModulePresentation(std::move(ring), std::move(shifts), std::move(rel));
}

ModulePresentation ModulePresentation::residue_field(QuotientRingPtr ring) {
  std::vector<Poly> vars;
  const auto& base = ring->base();
  for (int i = 0; i < base.nvars(); ++i) {
    std::vector<int> e(base.nvars(), 0);
    e[i] = 1;
    vars.push_back(Poly::monomial(make_monomial(e, base.weights)));
  }
  return quotient_by_ideal(std::move(ring), std::move(vars));
}

const GBasis& ModulePresentation::span_gb() const {
  if (!span_gb_) {
    span_gb_ = buchberger(field(), ring_->base().weights, ngens(), gen_shifts_,
                          matrix_columns(relations_), ring_->ideal_gb_polys())
                   .gb;
  }
  return *span_gb_;
}

const ModuleStaircase& ModulePresentation::staircase() const {
  if (!staircase_) staircase_ = module_staircase(span_gb());
  return *staircase_;
}

HilbertData ModulePresentation::hilbert_function(int max_degree, int fit_window) const {
  HilbertData h;
  const auto& st = staircase();
  for (int d = 0; d <= max_degree; ++d) h.values.push_back(st.hilbert(d));
  if (st.finite_length()) {
    h.length = st.total_length();
  } else {
    h.polynomial_part = fit_polynomial_tail(h.values, fit_window);
  }
  return h;
}

std::optional<long long> ModulePresentation::length() const {
  const auto& st = staircase();
  if (!st.finite_length()) return std::nullopt;
  return st.total_length();
}

int ModulePresentation::dimension() const { return staircase().dim(); }

bool ModulePresentation::is_zero_module() const { return dimension() == -1; }

ModulePresentation ModulePresentation::over_ring(QuotientRingPtr target,
                                                 const std::vector<Poly>& extra_relations) const {
  MatrixPoly rel(ngens(), relations_.cols + int(extra_relations.size()) * ngens());
  for (int i = 0; i < ngens(); ++i)
    for (int j = 0; j < relations_.cols; ++j) rel.at(i, j) = relations_.at(i, j);
  int col = relations_.cols;
  for (const Poly& g : extra_relations)
    for (int i = 0; i < ngens(); ++i) {
      rel.at(i, col) = g;
      ++col;
    }
  return ModulePresentation(std::move(target), gen_shifts_, std::move(rel));
}

ModulePresentation ModulePresentation::tensor(const ModulePresentation& other) const {
  if (!same_ring(*ring_, other.ring())) throw std::invalid_argument("tensor over different rings");
  const int gm = ngens(), gn = other.ngens();
  std::vector<int> shifts(size_t(gm) * gn);
  for (int i = 0; i < gm; ++i)
    for (int j = 0; j < gn; ++j) shifts[size_t(i) * gn + j] = gen_shifts_[i] + other.gen_shifts_[j];
  MatrixPoly rel(gm * gn, relations_.cols * gn + gm * other.relations_.cols);
  int col = 0;
  for (int a = 0; a < relations_.cols; ++a)
    for (int j = 0; j < gn; ++j) {
      for (int i = 0; i < gm; ++i) rel.at(i * gn + j, col) = relations_.at(i, a);
      ++col;
    }
  for (int i = 0; i < gm; ++i)
    for (int b = 0; b < other.relations_.cols; ++b) {
      for (int j = 0; j < gn; ++j) rel.at(i * gn + j, col) = other.relations_.at(j, b);
      ++col;
    }
  return ModulePresentation(ring_, std::move(shifts), std::move(rel));
}

ModulePresentation ModulePresentation::direct_sum(const ModulePresentation& other) const {
  if (!same_ring(*ring_, other.ring())) throw std::invalid_argument("sum over different rings");
  std::vector<int> shifts = gen_shifts_;
  shifts.insert(shifts.end(), other.gen_shifts_.begin(), other.gen_shifts_.end());
  MatrixPoly rel(ngens() + other.ngens(), relations_.cols + other.relations_.cols);
  for (int i = 0; i < ngens(); ++i)
    for (int j = 0; j < relations_.cols; ++j) rel.at(i, j) = relations_.at(i, j);
  for (int i = 0; i < other.ngens(); ++i)
    for (int j = 0; j < other.relations_.cols; ++j)
      rel.at(ngens() + i, relations_.cols + j) = other.relations_.at(i, j);
  return ModulePresentation(ring_, std::move(shifts), std::move(rel));
}

ModulePresentation ModulePresentation::twist(int e) const {
  std::vector<int> shifts = gen_shifts_;
  for (int& s : shifts) s += e;
  return ModulePresentation(ring_, std::move(shifts), relations_);
}

static bool is_unit_entry(const Poly& p) { return !p.is_zero() && p.degree() == 0; }

ModulePresentation ModulePresentation::minimalized() const {
  const Fp& F = field();
  std::vector<int> shifts = gen_shifts_;
  // mutable copy as column vectors of polys
  std::vector<std::vector<Poly>> cols(relations_.cols, std::vector<Poly>(ngens()));
  for (int j = 0; j < relations_.cols; ++j)
    for (int i = 0; i < ngens(); ++i) cols[j][i] = relations_.at(i, j);

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j < cols.size() && !changed; ++j) {
      for (size_t i = 0; i < shifts.size() && !changed; ++i) {
        if (!is_unit_entry(cols[j][i])) continue;
        const fp_t c = cols[j][i].lead().c;
        for (size_t j2 = 0; j2 < cols.size(); ++j2) {
          if (j2 == j || cols[j2][i].is_zero()) continue;
          const Poly factor = poly_scale(cols[j2][i], F.neg(F.inv(c)), F);
          for (size_t i2 = 0; i2 < shifts.size(); ++i2)
            cols[j2][i2] = ring_->nf(poly_add(cols[j2][i2], poly_mul(factor, cols[j][i2], F), F));
        }
        for (auto& colv : cols) colv.erase(colv.begin() + i);
        cols.erase(cols.begin() + j);
        shifts.erase(shifts.begin() + i);
        changed = true;
      }
    }
  }
  // drop zero columns
  std::vector<std::vector<Poly>> kept;
  for (auto& colv : cols) {
    bool zero = true;
    for (const auto& p : colv)
      if (!p.is_zero()) zero = false;
    if (!zero) kept.push_back(std::move(colv));
  }
  MatrixPoly rel(int(shifts.size()), int(kept.size()));
  for (size_t j = 0; j < kept.size(); ++j)
    for (size_t i = 0; i < shifts.size(); ++i) rel.at(int(i), int(j)) = kept[j][i];
  return ModulePresentation(ring_, std::move(shifts), std::move(rel));
}

// ---- degreewise piece machinery ----

FreePieces::FreePieces(const QuotientRing& ring, std::vector<int> shifts)
    : ring_(ring), shifts_(std::move(shifts)) {}

const std::vector<FreePieces::BasisElem>& FreePieces::basis(int d) const {
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  std::vector<BasisElem> b;
  for (size_t i = 0; i < shifts_.size(); ++i) {
    for (const auto& m : ring_.std_monomials(d - shifts_[i])) b.push_back({int(i), m});
  }
  auto& idx = index_[d];
  for (size_t k = 0; k < b.size(); ++k) idx[{b[k].comp, b[k].m.e}] = int(k);
  auto [ins, _] = cache_.emplace(d, std::move(b));
  return ins->second;
}

int FreePieces::index_of(int comp, const Monomial& m, int d) const {
  basis(d);
  const auto& idx = index_.at(d);
  auto it = idx.find({comp, m.e});
  return it == idx.end() ? -1 : it->second;
}

std::vector<fp_t> FreePieces::coords(const ModuleElem& v, int d) const {
  const auto& b = basis(d);
  std::vector<fp_t> out(b.size(), 0);
  ModuleElem r = reduce_mod_ring(ring_, v, int(shifts_.size()));
  const Fp& F = ring_.field();
  for (const auto& t : r.terms()) {
    int k = index_of(t.comp, t.m, d);
    if (k < 0) throw std::logic_error("term outside graded piece");
    out[k] = F.add(out[k], t.c);
  }
  return out;
}

CokerPieces::CokerPieces(const ModulePresentation& m) : mod_(m) { mod_.span_gb(); }

const std::vector<FreePieces::BasisElem>& CokerPieces::basis(int d) const {
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  const auto& st = mod_.staircase();
  std::vector<FreePieces::BasisElem> b;
  for (size_t i = 0; i < st.comps.size(); ++i)
    for (const auto& m : standard_monomials(st.comps[i], st.weights, d - st.shifts[i]))
      b.push_back({int(i), m});
  auto& idx = index_[d];
  for (size_t k = 0; k < b.size(); ++k) idx[{b[k].comp, b[k].m.e}] = int(k);
  auto [ins, _] = cache_.emplace(d, std::move(b));
  return ins->second;
}

std::vector<fp_t> CokerPieces::coords(const ModuleElem& v, int d) const {
  const auto& b = basis(d);
  const Fp& F = mod_.field();
  ModuleElem r = normal_form(v, mod_.span_gb(), F);
  std::vector<fp_t> out(b.size(), 0);
  const auto& idx = index_.at(d);
  for (const auto& t : r.terms()) {
    auto it = idx.find({t.comp, t.m.e});
    if (it == idx.end()) throw std::logic_error("reduced term outside coker piece");
    out[it->second] = F.add(out[it->second], t.c);
  }
  return out;
}

// ---- minimal generators / syzygies over the quotient ring ----

std::vector<ModuleElem> minimal_generators(const QuotientRing& ring, const std::vector<int>& shifts,
                                           std::vector<ModuleElem> candidates) {
  const Fp& F = ring.field();
  const int rank = int(shifts.size());
  for (auto& v : candidates) v = reduce_mod_ring(ring, v, rank);
  candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                  [](const ModuleElem& v) { return v.is_zero(); }),
                   candidates.end());
  if (candidates.empty()) return {};
  for (const auto& v : candidates)
    if (!elem_is_homogeneous(v, shifts))
      throw std::invalid_argument("minimal_generators needs homogeneous columns");

  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const ModuleElem& a, const ModuleElem& b) {
                     return elem_degree(a, shifts) < elem_degree(b, shifts);
                   });
  int dmin = elem_degree(candidates.front(), shifts);
  int dmax = elem_degree(candidates.back(), shifts);

  FreePieces pieces(ring, shifts);
  const auto& weights = ring.base().weights;
  std::map<int, std::vector<ModuleElem>> level_basis;  // independent spanning set per degree
  std::vector<ModuleElem> chosen;
  size_t next = 0;
  for (int d = dmin; d <= dmax; ++d) {
    RowSpace space(pieces.dim(d), F);
    std::vector<ModuleElem> at_d;
    for (size_t k = 0; k < weights.size(); ++k) {
      auto it = level_basis.find(d - weights[k]);
      if (it == level_basis.end()) continue;
      std::vector<int> e(weights.size(), 0);
      e[int(k)] = 1;
      Monomial xk = make_monomial(e, weights);
      for (const auto& b : it->second) {
        ModuleElem prod = reduce_mod_ring(ring, elem_mul_term(b, xk, 1, F), rank);
        if (prod.is_zero()) continue;
        if (space.insert(pieces.coords(prod, d))) at_d.push_back(std::move(prod));
      }
    }
    while (next < candidates.size() && elem_degree(candidates[next], shifts) == d) {
      const ModuleElem& v = candidates[next];
      if (space.insert(pieces.coords(v, d))) {
        chosen.push_back(v);
        at_d.push_back(v);
      }
      ++next;
    }
    if (!at_d.empty()) level_basis.emplace(d, std::move(at_d));
  }
  return chosen;
}

std::vector<ModuleElem> syzygies_over(const QuotientRing& ring, const std::vector<int>& shifts,
                                      const std::vector<ModuleElem>& cols, int degree_cap) {
  GBOptions opts;
  opts.track = true;
  opts.degree_cap = degree_cap;
  GBResult run = buchberger(ring.field(), ring.base().weights, int(shifts.size()), shifts, cols,
                            ring.ideal_gb_polys(), opts);
  std::vector<ModuleElem> out;
  for (const auto& s : run.syzygies) {
    ModuleElem r = reduce_mod_ring(ring, s, int(cols.size()));
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace citheta

#include "citheta/homology.hpp"

#include <memory>
#include <stdexcept>

#include "citheta/fp_matrix.hpp"

namespace citheta {

void ModuleComplex::validate() const {
  const Fp& F = ring->field();
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    // maps[i] : spots[i+1] -> spots[i], composition spots[i+2] -> spots[i]
    MatrixPoly comp = mat_poly_mul(maps[i], maps[i + 1], F);
    const GBasis& gb = spots[i].span_gb();
    for (int j = 0; j < comp.cols; ++j) {
      if (!normal_form(column_elem(comp, j), gb, F).is_zero())
        throw std::runtime_error("complex maps do not compose to zero");
    }
  }
}

namespace {

// Generators of { x in free cover of source : map(x) lies in the given
// submodule of the target cover }: project syzygies of [map | submodule].
std::vector<ModuleElem> preimage_generators(const QuotientRing& ring,
                                            const std::vector<int>& target_shifts,
                                            const std::vector<ModuleElem>& map_cols,
                                            const std::vector<ModuleElem>& submodule_cols) {
  std::vector<ModuleElem> all = map_cols;
  all.insert(all.end(), submodule_cols.begin(), submodule_cols.end());
  std::vector<ModuleElem> syz = syzygies_over(ring, target_shifts, all);
  const int k = int(map_cols.size());
  const Fp& F = ring.field();
  std::vector<ModuleElem> out;
  for (const auto& s : syz) {
    std::vector<ModTerm> head;
    for (const auto& t : s.terms())
      if (t.comp < k) head.push_back(t);
    ModuleElem v = elem_from_terms(std::move(head), ModuleOrder::standard(k), F);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

ModulePresentation homology_presentation(const ModuleComplex& cx, int pos) {
  if (pos < 0 || pos >= cx.length()) throw std::invalid_argument("homology position out of range");
  const QuotientRing& L = *cx.ring;
  const Fp& F = L.field();
  const ModulePresentation& C = cx.spots[pos];
  const bool has_out = pos > 0;                    // d_pos : C_pos -> C_{pos-1}
  const bool has_in = pos + 1 < cx.length();       // d_{pos+1} : C_{pos+1} -> C_pos

  // Denominator columns: incoming images plus the spot's own relations.
  std::vector<ModuleElem> denom;
  if (has_in)
    for (auto& c : matrix_columns(cx.maps[pos])) denom.push_back(std::move(c));
  for (auto& c : matrix_columns(C.relations())) denom.push_back(std::move(c));

  if (!has_out) {
    // H_0 = coker of the incoming map
    return ModulePresentation(cx.ring, C.gen_shifts(),
                              columns_to_matrix(denom, C.ngens(), F));
  }

  const ModulePresentation& T = cx.spots[pos - 1];
  std::vector<ModuleElem> sub = matrix_columns(T.relations());
  std::vector<ModuleElem> K =
      preimage_generators(L, T.gen_shifts(), matrix_columns(cx.maps[pos - 1]), sub);
  K = minimal_generators(L, C.gen_shifts(), std::move(K));
  if (K.empty())
    return ModulePresentation(cx.ring, {}, MatrixPoly(0, 0));

  std::vector<int> kshifts;
  for (const auto& v : K) kshifts.push_back(elem_degree(v, C.gen_shifts()));

  // Relations of the subquotient: coefficients c with K c in denom-span.
  std::vector<ModuleElem> rel = preimage_generators(L, C.gen_shifts(), K, denom);
  return ModulePresentation(cx.ring, kshifts, columns_to_matrix(rel, int(K.size()), F));
}

long long homology_length_exact(const ModuleComplex& cx, int pos) {
  ModulePresentation H = homology_presentation(cx, pos);
  auto len = H.length();
  if (!len) throw std::runtime_error("homology has infinite length");
  return *len;
}

MatrixF piece_matrix(const MatrixPoly& map, const CokerPieces& source, const CokerPieces& target,
                     int d_source, int d_target, const Fp& F) {
  const auto& sb = source.basis(d_source);
  const auto& tb = target.basis(d_target);
  MatrixF m(int(tb.size()), int(sb.size()));
  if (sb.empty() || tb.empty()) return m;
  for (size_t j = 0; j < sb.size(); ++j) {
    std::vector<ModTerm> terms;
    for (int i = 0; i < map.rows; ++i) {
      const Poly& entry = map.at(i, sb[j].comp);
      for (const auto& t : entry.terms()) terms.push_back({i, mono_mul(t.m, sb[j].m), t.c});
    }
    ModuleElem img = elem_from_terms(std::move(terms), ModuleOrder::standard(map.rows), F);
    auto col = target.coords(img, d_target);
    for (size_t i = 0; i < col.size(); ++i) m.at(int(i), int(j)) = col[i];
  }
  return m;
}

DegreewiseHomology homology_degreewise(const ModuleComplex& cx, int pos,
                                       const DegreewiseOptions& opts) {
  if (pos < 0 || pos >= cx.length()) throw std::invalid_argument("homology position out of range");
  const Fp& F = cx.ring->field();
  const ModulePresentation& C = cx.spots[pos];
  CokerPieces here(C);
  std::unique_ptr<CokerPieces> below, above;
  if (pos > 0) below = std::make_unique<CokerPieces>(cx.spots[pos - 1]);
  if (pos + 1 < cx.length()) above = std::make_unique<CokerPieces>(cx.spots[pos + 1]);

  int dmin = 0;
  for (int s : C.gen_shifts()) dmin = std::min(dmin, s);
  const int dmax = opts.cutoff;

  auto map_rank = [&](const MatrixPoly& mp, CokerPieces& source, CokerPieces& target,
                      int d) -> int {
    MatrixF m = piece_matrix(mp, source, target, d, d, F);
    return m.rows() == 0 || m.cols() == 0 ? 0 : rank_of(m, F);
  };

  DegreewiseHomology out;
  std::vector<long long> dims(size_t(dmax - dmin + 1), 0);
#pragma omp parallel for schedule(dynamic)
  for (int d = dmin; d <= dmax; ++d) {
    int dimC = here.dim(d);
    if (dimC == 0) continue;
    int r_out = 0, r_in = 0;
    if (pos > 0) r_out = map_rank(cx.maps[pos - 1], here, *below, d);
    if (pos + 1 < cx.length()) r_in = map_rank(cx.maps[pos], *above, here, d);
    dims[size_t(d - dmin)] = dimC - r_out - r_in;
  }
  for (int d = dmin; d <= dmax; ++d) {
    long long h = dims[size_t(d - dmin)];
    if (h < 0) throw std::logic_error("negative homology dimension");
    if (h > 0) out.dims[d] = h;
    out.total += h;
  }
  out.certified = true;
  for (int d = dmax - opts.zero_window + 1; d <= dmax; ++d)
    if (d >= dmin && dims[size_t(d - dmin)] != 0) out.certified = false;
  return out;
}

}  // namespace citheta

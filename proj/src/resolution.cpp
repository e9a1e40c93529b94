#include "citheta/resolution.hpp"

#include <stdexcept>

#include "citheta/fp_matrix.hpp"

namespace citheta {

namespace {

void check_minimal_entries(const MatrixPoly& d) {
  for (const auto& p : d.a)
    if (!p.is_zero() && p.degree() == 0)
      throw std::logic_error("resolution differential has a unit entry");
}

void check_composition_zero(const QuotientRing& L, const MatrixPoly& a, const MatrixPoly& b) {
  MatrixPoly prod = mat_poly_mul(a, b, L.field());
  for (const auto& p : prod.a)
    if (!L.nf(p).is_zero()) throw std::logic_error("differentials do not compose to zero");
}

}  // namespace

ResolutionPrefix resolve(const ModulePresentation& m, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  ResolutionPrefix res;
  res.ring = m.ring_ptr();
  const QuotientRing& L = *res.ring;
  ModulePresentation pres = m.minimalized();
  res.betti.push_back(pres.gen_shifts());
  res.n_computed = 0;
  if (pres.ngens() == 0 || n_max == 0) {
    res.finished = pres.ngens() == 0 || pres.relations().cols == 0;
    return res;
  }

  std::vector<ModuleElem> cols =
      minimal_generators(L, pres.gen_shifts(), matrix_columns(pres.relations()));
  for (int n = 1; n <= n_max; ++n) {
    if (cols.empty()) {
      res.finished = true;
      break;
    }
    std::vector<int> degs;
    for (const auto& v : cols) degs.push_back(elem_degree(v, res.betti[n - 1]));
    MatrixPoly d = columns_to_matrix(cols, int(res.betti[n - 1].size()), L.field());
    check_minimal_entries(d);
    if (n >= 2) check_composition_zero(L, res.diff[n - 2], d);
    res.diff.push_back(std::move(d));
    res.betti.push_back(std::move(degs));
    res.n_computed = n;
    if (n == n_max) break;
    std::vector<ModuleElem> syz = syzygies_over(L, res.betti[n - 1], cols);
    cols = minimal_generators(L, res.betti[n], std::move(syz));
  }
  if (!res.finished && res.n_computed == n_max) {
    // peek one more step so finite projective dimension is recognized at the boundary
    std::vector<ModuleElem> syz =
        syzygies_over(L, res.betti[n_max - 1], matrix_columns(res.diff[n_max - 1]));
    if (minimal_generators(L, res.betti[n_max], std::move(syz)).empty()) res.finished = true;
  }
  return res;
}

ModulePresentation as_s_module(const ModulePresentation& m) {
  if (m.ring().codim() == 0) return m;
  QuotientRingPtr s = make_quotient(m.ring().base_ptr(), {});
  return m.over_ring(s, m.ring().relations());
}

ResolutionPrefix min_resolution_S(const ModulePresentation& m) {
  ModulePresentation ms = as_s_module(m);
  ResolutionPrefix res = resolve(ms, ms.ring().base().nvars() + 1);
  if (!res.finished)
    throw std::logic_error("free resolution over the polynomial ring did not terminate");
  return res;
}

int projective_dimension_S(const ModulePresentation& m) {
  ResolutionPrefix res = min_resolution_S(m);
  return res.n_computed;
}

int depth_of(const ModulePresentation& m) {
  if (m.is_zero_module()) throw std::invalid_argument("depth of the zero module");
  return m.ring().base().nvars() - projective_dimension_S(m);
}

void lift_and_operators(ResolutionPrefix& res) {
  const QuotientRing& L = *res.ring;
  const Fp& F = L.field();
  const int c = L.codim();
  res.lifted = res.diff;  // entries are canonical representatives over S
  res.operators.assign(c, {});
  res.has_operators = true;
  if (c == 0 || res.diff.size() < 2) return;

  TaggedIdeal ti = make_tagged_ideal(F, L.base().weights, L.relations());
  for (size_t k = 0; k + 1 < res.diff.size(); ++k) {
    MatrixPoly sq = mat_poly_mul(res.lifted[k], res.lifted[k + 1], F);
    std::vector<MatrixPoly> t(c);
    for (int i = 0; i < c; ++i) t[i] = MatrixPoly(sq.rows, sq.cols);
    for (int r = 0; r < sq.rows; ++r)
      for (int cidx = 0; cidx < sq.cols; ++cidx) {
        const Poly& entry = sq.at(r, cidx);
        if (entry.is_zero()) continue;
        auto q = ideal_quotients(ti, entry, F);
        if (!q) throw std::logic_error("lifted differential square escapes the relation ideal");
        for (int i = 0; i < c; ++i) t[i].at(r, cidx) = std::move((*q)[i]);
      }
    // exact identity over S: sq == sum f_i t_i
    MatrixPoly check = sq;
    for (int i = 0; i < c; ++i)
      for (int r = 0; r < sq.rows; ++r)
        for (int cidx = 0; cidx < sq.cols; ++cidx)
          check.at(r, cidx) = poly_sub(check.at(r, cidx),
                                       poly_mul(L.relations()[i], t[i].at(r, cidx), F), F);
    if (!check.is_zero()) throw std::logic_error("operator decomposition identity failed");
    for (int i = 0; i < c; ++i) {
      for (auto& p : t[i].a) p = L.nf(p);
      res.operators[i].push_back(std::move(t[i]));
    }
  }
}

static MatrixPoly tensor_map(const MatrixPoly& mp, int g_n) {
  MatrixPoly out(mp.rows * g_n, mp.cols * g_n);
  for (int i = 0; i < mp.rows; ++i)
    for (int j = 0; j < mp.cols; ++j) {
      if (mp.at(i, j).is_zero()) continue;
      for (int t = 0; t < g_n; ++t) out.at(i * g_n + t, j * g_n + t) = mp.at(i, j);
    }
  return out;
}

static ModulePresentation tensor_spot(QuotientRingPtr ring, const std::vector<int>& shifts,
                                      const ModulePresentation& n) {
  const int b = int(shifts.size()), g = n.ngens(), q = n.relations().cols;
  std::vector<int> gs(size_t(b) * g);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < g; ++j) gs[size_t(i) * g + j] = shifts[i] + n.gen_shifts()[j];
  MatrixPoly rel(b * g, b * q);
  for (int i = 0; i < b; ++i)
    for (int a = 0; a < q; ++a)
      for (int j = 0; j < g; ++j) rel.at(i * g + j, i * q + a) = n.relations().at(j, a);
  return ModulePresentation(std::move(ring), std::move(gs), std::move(rel));
}

ModuleComplex tensor_complex(const ResolutionPrefix& res, const ModulePresentation& n, int up_to) {
  if (!same_ring(*res.ring, n.ring()))
    throw std::invalid_argument("tensor complex needs matching rings");
  ModuleComplex cx;
  cx.ring = res.ring;
  const int top = std::min(up_to, res.n_computed);
  for (int k = 0; k <= top; ++k) cx.spots.push_back(tensor_spot(res.ring, res.betti[k], n));
  for (int k = 0; k < top; ++k) cx.maps.push_back(tensor_map(res.diff[k], n.ngens()));
  // beyond a finished resolution the complex is zero
  for (int k = top + 1; k <= up_to; ++k) {
    cx.maps.push_back(MatrixPoly(cx.spots.back().ngens(), 0));
    cx.spots.push_back(ModulePresentation(res.ring, {}, MatrixPoly(0, 0)));
  }
  return cx;
}

OperatorAction tor_action(const ResolutionPrefix& res, const ModulePresentation& n) {
  if (!res.has_operators) throw std::invalid_argument("operators not computed on the resolution");
  const QuotientRing& L = *res.ring;
  const Fp& F = L.field();
  const int c = L.codim();
  const int n_max = res.n_computed;

  ModuleComplex cx = tensor_complex(res, n, n_max);
  OperatorAction act;
  act.op_degrees.clear();
  for (const Poly& f : L.relations()) act.op_degrees.push_back(f.degree());

  for (int k = 0; k <= n_max; ++k) act.lengths.push_back(homology_length_exact(cx, k));

  std::vector<CokerPieces> pieces;
  pieces.reserve(cx.spots.size());
  for (const auto& spot : cx.spots) pieces.emplace_back(spot);

  // boundary images per (position, degree), reused when expressing classes
  std::vector<std::map<int, MatrixF>> bnd(cx.spots.size());
  auto boundary_at = [&](int pos, int d) -> const MatrixF& {
    auto it = bnd[pos].find(d);
    if (it != bnd[pos].end()) return it->second;
    MatrixF m;
    if (pos + 1 < int(cx.spots.size()))
      m = piece_matrix(cx.maps[pos], pieces[pos + 1], pieces[pos], d, d, F);
    else
      m = MatrixF(pieces[pos].dim(d), 0);
    return bnd[pos].emplace(d, std::move(m)).first->second;
  };

  act.tor.resize(n_max + 1);
  for (int k = 0; k <= n_max; ++k) {
    TorBasis& tb = act.tor[k];
    tb.total = act.lengths[k];
    if (tb.total == 0) continue;
    int dmin = 0;
    bool any = false;
    for (int s : cx.spots[k].gen_shifts()) {
      dmin = any ? std::min(dmin, s) : s;
      any = true;
    }
    long long seen = 0;
    int flat = 0;
    const int hard_cap = dmin + 2000;
    for (int d = dmin; seen < tb.total; ++d) {
      if (d > hard_cap) throw std::logic_error("homology basis search exceeded degree cap");
      const int dimC = pieces[k].dim(d);
      if (dimC == 0) continue;
      MatrixF out =
          k > 0 ? piece_matrix(cx.maps[k - 1], pieces[k], pieces[k - 1], d, d, F) : MatrixF(0, dimC);
      MatrixF ker = kernel_basis(out, F);
      const MatrixF& in = boundary_at(k, d);
      RowSpace space(dimC, F);
      for (int j = 0; j < in.cols(); ++j) {
        std::vector<fp_t> row(dimC);
        for (int i = 0; i < dimC; ++i) row[i] = in.at(i, j);
        space.insert(std::move(row));
      }
      std::vector<std::vector<fp_t>> reps;
      for (int j = 0; j < ker.cols(); ++j) {
        std::vector<fp_t> v(dimC);
        for (int i = 0; i < dimC; ++i) v[i] = ker.at(i, j);
        if (space.insert(v)) reps.push_back(std::move(v));
      }
      if (!reps.empty()) {
        seen += long long(reps.size());
        if (seen > tb.total) throw std::logic_error("homology dimensions exceed exact length");
        tb.offset[d] = flat;
        flat += int(reps.size());
        tb.reps[d] = std::move(reps);
      }
    }
  }

  // induced operator matrices
  act.act.assign(c, std::vector<MatrixF>(n_max + 1));
  for (int i = 0; i < c; ++i) {
    for (int k = 2; k <= n_max; ++k) {
      const long long rows = act.lengths[k - 2], cols = act.lengths[k];
      MatrixF m(int(rows), int(cols));
      if (rows > 0 && cols > 0 && k - 2 < int(res.operators[i].size())) {
        MatrixPoly op = tensor_map(res.operators[i][k - 2], n.ngens());
        for (const auto& [d, reps] : act.tor[k].reps) {
          const int dt = d - act.op_degrees[i];
          const auto& src_basis = pieces[k].basis(d);
          // target class space: boundaries followed by representatives
          const MatrixF& tin = boundary_at(k - 2, dt);
          const int dimT = pieces[k - 2].dim(dt);
          auto rit = act.tor[k - 2].reps.find(dt);
          const int nreps = rit == act.tor[k - 2].reps.end() ? 0 : int(rit->second.size());
          MatrixF A(dimT, tin.cols() + nreps);
          for (int j = 0; j < tin.cols(); ++j)
            for (int r = 0; r < dimT; ++r) A.at(r, j) = tin.at(r, j);
          for (int j = 0; j < nreps; ++j)
            for (int r = 0; r < dimT; ++r) A.at(r, tin.cols() + j) = rit->second[j][r];
          MatrixF img = piece_matrix(op, pieces[k], pieces[k - 2], d, dt, F);
          for (size_t ridx = 0; ridx < reps.size(); ++ridx) {
            std::vector<fp_t> w(dimT, 0);
            for (int t = 0; t < int(src_basis.size()); ++t) {
              const fp_t cv = reps[ridx][t];
              if (cv == 0) continue;
              for (int r = 0; r < dimT; ++r) w[r] = F.add(w[r], F.mul(cv, img.at(r, t)));
            }
            auto sol = solve(A, w, F);
            if (!sol) throw std::logic_error("operator image is not a cycle class");
            const int col = act.tor[k].offset.at(d) + int(ridx);
            for (int j = 0; j < nreps; ++j) {
              const int row = act.tor[k - 2].offset.at(dt) + j;
              m.at(row, col) = (*sol)[tin.cols() + j];
            }
          }
        }
      }
      act.act[i][k] = std::move(m);
    }
  }
  return act;
}

ChangeOfRingsReport change_of_rings_check(const ResolutionPrefix& res_r,
                                          const ResolutionPrefix& res_rp,
                                          const ModulePresentation& n_over_r,
                                          const ModulePresentation& n_over_rp, int window) {
  ChangeOfRingsReport rep;
  const int top = std::min(res_r.n_computed, res_rp.n_computed);
  ModuleComplex cr = tensor_complex(res_r, n_over_r, top);
  ModuleComplex crp = tensor_complex(res_rp, n_over_rp, top);
  for (int k = 0; k <= top; ++k) {
    rep.lengths_R.push_back(homology_length_exact(cr, k));
    rep.lengths_Rp.push_back(homology_length_exact(crp, k));
  }
  for (int k = 1; k <= top; ++k) {
    const long long prev2 = k >= 2 ? rep.lengths_R[k - 2] : 0;
    if (rep.lengths_Rp[k] > rep.lengths_R[k] + prev2) {
      rep.les_bounds = false;
      rep.failures.push_back("long exact sequence bound fails at n=" + std::to_string(k));
    }
  }
  for (int k = std::max(2, top - window + 1); k <= top; ++k) {
    rep.window.push_back(k);
    if (rep.lengths_Rp[k] != rep.lengths_R[k] - rep.lengths_R[k - 2]) {
      rep.ses_identity = false;
      rep.failures.push_back("length identity fails at n=" + std::to_string(k));
    }
  }
  return rep;
}

}  // namespace citheta

#include "citheta/groebner.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace citheta {

bool ModuleElem::operator==(const ModuleElem& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const ModTerm &a = terms_[i], &b = o.terms_[i];
    if (a.comp != b.comp || a.c != b.c || !(a.m == b.m)) return false;
  }
  return true;
}

ModuleOrder ModuleOrder::standard(int rank) {
  ModuleOrder ord;
  ord.priority.resize(rank);
  for (int i = 0; i < rank; ++i) ord.priority[i] = i;
  return ord;
}

ModuleElem elem_from_terms(std::vector<ModTerm> terms, const ModuleOrder& ord, const Fp& F) {
  std::sort(terms.begin(), terms.end(),
            [&](const ModTerm& a, const ModTerm& b) { return ord.cmp(a, b) > 0; });
  ModuleElem v;
  auto& out = v.raw();
  for (auto& t : terms) {
    fp_t c = F.reduce(t.c);
    if (c == 0) continue;
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, c);
      if (out.back().c == 0) out.pop_back();
    } else {
      out.push_back({t.comp, std::move(t.m), c});
    }
  }
  return v;
}

static ModuleElem elem_merge(const ModuleElem& a, const ModuleElem& b, const ModuleOrder& ord,
                             const Fp& F, bool negate_b) {
  ModuleElem v;
  auto& out = v.raw();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    int cmp = ord.cmp(ta[i], tb[j]);
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      out.push_back({tb[j].comp, tb[j].m, negate_b ? F.neg(tb[j].c) : tb[j].c});
      ++j;
    } else {
      fp_t c = negate_b ? F.sub(ta[i].c, tb[j].c) : F.add(ta[i].c, tb[j].c);
      if (c != 0) out.push_back({ta[i].comp, ta[i].m, c});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back({tb[j].comp, tb[j].m, negate_b ? F.neg(tb[j].c) : tb[j].c});
  return v;
}

ModuleElem elem_add(const ModuleElem& a, const ModuleElem& b, const ModuleOrder& ord, const Fp& F) {
  return elem_merge(a, b, ord, F, false);
}
ModuleElem elem_sub(const ModuleElem& a, const ModuleElem& b, const ModuleOrder& ord, const Fp& F) {
  return elem_merge(a, b, ord, F, true);
}

ModuleElem elem_mul_term(const ModuleElem& a, const Monomial& m, fp_t c, const Fp& F) {
  c = F.reduce(c);
  ModuleElem v;
  if (c == 0) return v;
  auto& out = v.raw();
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({t.comp, mono_mul(t.m, m), F.mul(t.c, c)});
  return v;
}

ModuleElem elem_scale(const ModuleElem& a, fp_t c, const Fp& F) {
  c = F.reduce(c);
  ModuleElem v;
  if (c == 0) return v;
  auto& out = v.raw();
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({t.comp, t.m, F.mul(t.c, c)});
  return v;
}

ModuleElem elem_component_embed(const Poly& p, int comp) {
  ModuleElem v;
  auto& out = v.raw();
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back({comp, t.m, t.c});
  return v;
}

Poly elem_extract_component(const ModuleElem& v, int comp, const Fp& F) {
  std::vector<PolyTerm> terms;
  for (const auto& t : v.terms())
    if (t.comp == comp) terms.push_back({t.m, t.c});
  return Poly::from_terms(std::move(terms), F);
}

int elem_degree(const ModuleElem& v, const std::vector<int>& shifts) {
  if (v.is_zero()) return -1;
  return v.lead().m.deg + shifts[v.lead().comp];
}

bool elem_is_homogeneous(const ModuleElem& v, const std::vector<int>& shifts) {
  if (v.is_zero()) return true;
  const int d = elem_degree(v, shifts);
  for (const auto& t : v.terms())
    if (t.m.deg + shifts[t.comp] != d) return false;
  return true;
}

void GBasis::build_index() {
  lead_index.assign(ambient_rank, {});
  for (size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) lead_index[gens[i].lead().comp].push_back(int(i));
}

namespace {

// Reduces every term with comp < max_red_comp against the basis; terms in
// higher components (syzygy tags) pass through untouched.
ModuleElem reduce_elem(ModuleElem work, const std::vector<ModuleElem>& basis,
                       const std::vector<std::vector<int>>& by_comp, int max_red_comp,
                       const ModuleOrder& ord, const Fp& F) {
  std::vector<ModTerm> done;
  while (!work.is_zero()) {
    const ModTerm& lt = work.lead();
    if (lt.comp >= max_red_comp) {
      // Everything left sorts below the reducible region.
      for (const auto& t : work.terms()) done.push_back(t);
      break;
    }
    int red = -1;
    for (int idx : by_comp[lt.comp]) {
      if (mono_divides(basis[idx].lead().m, lt.m)) {
        red = idx;
        break;
      }
    }
    if (red < 0) {
      done.push_back(lt);
      work.raw().erase(work.raw().begin());
      continue;
    }
    const ModuleElem& b = basis[red];
    Monomial q = mono_div(lt.m, b.lead().m);
    fp_t coef = F.div(lt.c, b.lead().c);
    work = elem_sub(work, elem_mul_term(b, q, coef, F), ord, F);
  }
  ModuleElem out;
  out.raw() = std::move(done);
  return out;
}

}  // namespace

GBResult buchberger(const Fp& F, const std::vector<int>& weights, int rank,
                    const std::vector<int>& shifts, const std::vector<ModuleElem>& gens,
                    const std::vector<Poly>& ring_relations, GBOptions opts) {
  GBResult res;
  const int k = int(gens.size());
  const bool track = opts.track;
  const int ext_rank = rank + (track ? k : 0);

  std::vector<int> ext_shifts = shifts;
  ModuleOrder ord = ModuleOrder::standard(ext_rank);
  if (track) {
    for (int i = 0; i < k; ++i) {
      int d = elem_degree(gens[i], shifts);
      ext_shifts.push_back(d < 0 ? 0 : d);
    }
  }

  std::vector<ModuleElem> basis;
  std::vector<bool> is_relation;  // came from ring_relations
  std::vector<std::vector<int>> by_comp(rank);
  std::vector<ModuleElem> syz;

  auto insert = [&](ModuleElem v, bool rel) -> int {
    fp_t lc = v.lead().c;
    if (lc != 1) v = elem_scale(v, F.inv(lc), F);
    basis.push_back(std::move(v));
    is_relation.push_back(rel);
    by_comp[basis.back().lead().comp].push_back(int(basis.size()) - 1);
    return int(basis.size()) - 1;
  };

  auto collect_tag = [&](const ModuleElem& v) {
    std::vector<ModTerm> tags;
    for (const auto& t : v.terms()) tags.push_back({t.comp - rank, t.m, t.c});
    if (!tags.empty()) syz.push_back(elem_from_terms(std::move(tags), ModuleOrder::standard(k), F));
  };

  // (degree, i, j) min-first
  using Pair = std::tuple<int, int, int>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;

  auto push_pairs_for = [&](int idx) {
    const auto& v = basis[idx];
    const int comp = v.lead().comp;
    for (int other : by_comp[comp]) {
      if (other == idx) continue;
      if (is_relation[other] && is_relation[idx]) continue;  // relations form a GB already
      Monomial l = mono_lcm(basis[other].lead().m, v.lead().m, weights);
      pairs.emplace(l.deg + shifts[comp], std::min(other, idx), std::max(other, idx));
    }
  };

  for (int i = 0; i < k; ++i) {
    ModuleElem v = gens[i];
    if (track) {
      auto terms = v.raw();
      terms.push_back({rank + i, one_monomial(int(weights.size())), 1});
      v = elem_from_terms(std::move(terms), ord, F);
    }
    if (v.is_zero()) continue;
    if (v.lead().comp >= rank) {
      collect_tag(v);
      continue;
    }
    v = reduce_elem(std::move(v), basis, by_comp, rank, ord, F);
    if (v.is_zero()) continue;
    if (v.lead().comp >= rank) {
      if (track) collect_tag(v);
      continue;
    }
    push_pairs_for(insert(std::move(v), false));
  }
  for (const Poly& f : ring_relations) {
    for (int s = 0; s < rank; ++s) {
      ModuleElem v = elem_component_embed(f, s);
      if (v.is_zero()) continue;
      push_pairs_for(insert(std::move(v), true));
    }
  }

  while (!pairs.empty()) {
    auto [deg, i, j] = pairs.top();
    pairs.pop();
    if (opts.degree_cap >= 0 && deg > opts.degree_cap) {
      res.capped = true;
      continue;
    }
    const ModuleElem &a = basis[i], &b = basis[j];
    const Monomial l = mono_lcm(a.lead().m, b.lead().m, weights);
    ModuleElem sp = elem_sub(elem_mul_term(a, mono_div(l, a.lead().m), 1, F),
                             elem_mul_term(b, mono_div(l, b.lead().m), 1, F), ord, F);
    sp = reduce_elem(std::move(sp), basis, by_comp, rank, ord, F);
    if (sp.is_zero()) continue;
    if (sp.lead().comp >= rank) {
      if (track) collect_tag(sp);
      continue;
    }
    push_pairs_for(insert(std::move(sp), false));
  }

  // Reduced basis: drop heads divisible by another head, tail-reduce the rest.
  const int n = int(basis.size());
  std::vector<bool> keep(n, true);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].lead().comp == basis[i].lead().comp &&
          mono_divides(basis[j].lead().m, basis[i].lead().m)) {
        if (basis[j].lead().m == basis[i].lead().m && j > i) continue;
        keep[i] = false;
      }
    }
  }
  std::vector<ModuleElem> final_basis;
  std::vector<std::vector<int>> final_by_comp(rank);
  for (int i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    final_by_comp[basis[i].lead().comp].push_back(int(final_basis.size()));
    final_basis.push_back(basis[i]);
  }
  for (auto& g : final_basis) {
    ModTerm head = g.lead();
    g.raw().erase(g.raw().begin());
    g = reduce_elem(std::move(g), final_basis, final_by_comp, rank, ord, F);
    auto terms = g.raw();
    terms.push_back(head);
    g = elem_from_terms(std::move(terms), ord, F);
  }

  res.gb.ambient_rank = rank;
  res.gb.shifts = shifts;
  res.gb.weights = weights;
  res.gb.order = ModuleOrder::standard(rank);
  for (const auto& g : final_basis) {
    std::vector<ModTerm> stripped;
    for (const auto& t : g.terms())
      if (t.comp < rank) stripped.push_back(t);
    res.gb.gens.push_back(elem_from_terms(std::move(stripped), res.gb.order, F));
  }
  std::sort(res.gb.gens.begin(), res.gb.gens.end(), [&](const ModuleElem& x, const ModuleElem& y) {
    return res.gb.order.cmp(x.lead(), y.lead()) > 0;
  });
  res.gb.build_index();
  if (track) {
    res.tagged_basis = std::move(final_basis);
    res.tag_base = rank;
  }
  res.syzygies = std::move(syz);
  return res;
}

ModuleElem normal_form(const ModuleElem& v, const GBasis& gb, const Fp& F) {
  return reduce_elem(v, gb.gens, gb.lead_index, gb.ambient_rank, gb.order, F);
}

Poly poly_normal_form(const Poly& p, const GBasis& ideal_gb, const Fp& F) {
  return elem_extract_component(normal_form(elem_component_embed(p, 0), ideal_gb, F), 0, F);
}

TaggedIdeal make_tagged_ideal(const Fp& F, const std::vector<int>& weights,
                              const std::vector<Poly>& gens) {
  TaggedIdeal ti;
  ti.gens = gens;
  ti.nvars = int(weights.size());
  std::vector<ModuleElem> cols;
  for (const Poly& f : gens) cols.push_back(elem_component_embed(f, 0));
  GBOptions opts;
  opts.track = true;
  ti.run = buchberger(F, weights, 1, {0}, cols, {}, opts);
  return ti;
}

std::optional<std::vector<Poly>> ideal_quotients(const TaggedIdeal& ti, const Poly& p, const Fp& F) {
  const int k = int(ti.gens.size());
  const ModuleOrder ord = ModuleOrder::standard(1 + k);
  std::vector<std::vector<int>> by_comp(1);
  for (size_t i = 0; i < ti.run.tagged_basis.size(); ++i)
    by_comp[0].push_back(int(i));
  ModuleElem r = reduce_elem(elem_component_embed(p, 0), ti.run.tagged_basis, by_comp, 1, ord, F);
  for (const auto& t : r.terms())
    if (t.comp == 0) return std::nullopt;
  std::vector<Poly> q(k);
  for (int i = 0; i < k; ++i)
    q[i] = poly_neg(elem_extract_component(r, 1 + i, F), F);
  return q;
}

}  // namespace citheta

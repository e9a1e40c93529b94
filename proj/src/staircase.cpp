#include "citheta/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace citheta {

bool Staircase::contains(const Monomial& m) const {
  for (const auto& g : gens)
    if (mono_divides(g, m)) return true;
  return false;
}

void Staircase::add(const Monomial& m) {
  if (contains(m)) return;
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [&](const Monomial& g) { return mono_divides(m, g); }),
             gens.end());
  gens.push_back(m);
}

bool Staircase::is_whole_ring() const {
  for (const auto& g : gens)
    if (g.is_one()) return true;
  return false;
}

namespace {

void enumerate_rec(const Staircase& st, const std::vector<int>& weights, size_t v, int rd,
                   std::vector<int>& cur, std::vector<Monomial>& out) {
  // Prune: a generator supported on the variables fixed so far already divides.
  for (const auto& g : st.gens) {
    bool applies = true;
    for (size_t i = 0; i < weights.size() && applies; ++i) {
      if (i < v) {
        if (g.e[i] > cur[i]) applies = false;
      } else if (g.e[i] > 0) {
        applies = false;
      }
    }
    if (applies) return;
  }
  if (v == weights.size()) {
    if (rd == 0) out.push_back(make_monomial(cur, weights));
    return;
  }
  if (v + 1 == weights.size()) {
    if (rd % weights[v] == 0) {
      cur[v] = rd / weights[v];
      enumerate_rec(st, weights, v + 1, 0, cur, out);
      cur[v] = 0;
    }
    return;
  }
  for (int e = 0; e * weights[v] <= rd; ++e) {
    cur[v] = e;
    enumerate_rec(st, weights, v + 1, rd - e * weights[v], cur, out);
  }
  cur[v] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const Staircase& st, const std::vector<int>& weights,
                                         int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> cur(weights.size(), 0);
  enumerate_rec(st, weights, 0, degree, cur, out);
  return out;
}

long long count_standard(const Staircase& st, const std::vector<int>& weights, int degree) {
  return (long long)standard_monomials(st, weights, degree).size();
}

int staircase_dim(const Staircase& st, int nvars) {
  if (st.is_whole_ring()) return -1;
  if (nvars > 24) throw std::runtime_error("too many variables for subset dimension scan");
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (const auto& g : st.gens) {
      bool inside = true;
      for (int i = 0; i < nvars && inside; ++i)
        if (g.e[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

long long ModuleStaircase::hilbert(int degree) const {
  long long h = 0;
  for (size_t i = 0; i < comps.size(); ++i) h += count_standard(comps[i], weights, degree - shifts[i]);
  return h;
}

int ModuleStaircase::dim() const {
  int d = -1;
  for (const auto& c : comps) d = std::max(d, staircase_dim(c, int(weights.size())));
  return d;
}

long long ModuleStaircase::total_length() const {
  if (dim() > 0) throw std::logic_error("total_length on a module of positive dimension");
  long long total = 0;
  for (int d = 0; d <= max_standard_degree(); ++d) total += hilbert(d);
  return total;
}

int ModuleStaircase::max_standard_degree() const {
  // A pure power of each variable lies in every zero-dimensional staircase, so
  // the degrees of standard monomials are bounded by the generator degrees.
  int bound = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    int gmax = 0;
    for (const auto& g : comps[i].gens) gmax = std::max(gmax, g.deg);
    bound = std::max(bound, shifts[i] + gmax * int(weights.size()));
  }
  int top = -1;
  for (int d = 0; d <= bound; ++d)
    if (hilbert(d) > 0) top = d;
  return top;
}

ModuleStaircase module_staircase(const GBasis& gb) {
  ModuleStaircase ms;
  ms.comps.assign(gb.ambient_rank, {});
  ms.shifts = gb.shifts;
  ms.weights = gb.weights;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) ms.comps[g.lead().comp].add(g.lead().m);
  return ms;
}

}  // namespace citheta

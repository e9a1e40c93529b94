#include "citheta/monomial.hpp"

#include <cassert>

namespace citheta {

Monomial make_monomial(std::vector<int> exps, const std::vector<int>& weights) {
  Monomial m;
  m.deg = 0;
  for (size_t i = 0; i < exps.size(); ++i) m.deg += exps[i] * weights[i];
  m.e = std::move(exps);
  return m;
}

Monomial one_monomial(int nvars) {
  Monomial m;
  m.e.assign(nvars, 0);
  m.deg = 0;
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  m.deg += b.deg;
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) {
    m.e[i] -= b.e[i];
    assert(m.e[i] >= 0);
  }
  m.deg -= b.deg;
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int>& weights) {
  std::vector<int> e(a.e.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
  return make_monomial(std::move(e), weights);
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace citheta

#include "citheta/fitting.hpp"

#include <stdexcept>

namespace citheta {

std::vector<long long> nabla(const std::vector<long long>& seq, int r) {
  if (r < 0) throw std::invalid_argument("negative difference order");
  if (int(seq.size()) < r + 1) throw std::invalid_argument("sequence too short for difference order");
  std::vector<long long> cur = seq;
  for (int k = 0; k < r; ++k) {
    std::vector<long long> next(cur.size() - 1);
    for (size_t i = 0; i + 1 < cur.size(); ++i) next[i] = cur[i + 1] - cur[i];
    cur = std::move(next);
  }
  return cur;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rat eval_poly(const std::vector<Rat>& coeffs, long long x) {
  Rat acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * Rat(x) + coeffs[i];
  return acc;
}

std::optional<PolyFit> fit_polynomial_tail(const std::vector<long long>& seq, int window) {
  const int n = int(seq.size());
  if (window < 1 || n < window + 1) return std::nullopt;
  int deg = -2;
  for (int d = -1; n - (d + 1) - 1 >= window - 1 && d + 1 <= n - 1; ++d) {
    auto diffs = nabla(seq, d + 1);
    if (int(diffs.size()) < window) break;
    bool zero = true;
    for (int i = int(diffs.size()) - window; i < int(diffs.size()); ++i)
      if (diffs[i] != 0) zero = false;
    if (zero) {
      deg = d;
      break;
    }
  }
  if (deg == -2) return std::nullopt;

  PolyFit fit;
  fit.degree = deg;
  if (deg >= 0) {
    auto top = nabla(seq, deg);
    fit.leading_binomial = top.back();
    // Newton backward form anchored at the last index e:
    //   P(e + u) = sum_i  (i-th difference at e) * C(u + i - 1, i)
    const int e = n - 1;
    std::vector<Rat> poly;  // in u
    for (int i = 0; i <= deg; ++i) {
      auto di = nabla(seq, i);
      Rat coef(di.back());
      // C(u + i - 1, i) = u (u+1) ... (u+i-1) / i!
      std::vector<Rat> term = {Rat(1)};
      for (int j = 0; j < i; ++j) {
        std::vector<Rat> next(term.size() + 1, Rat(0));
        for (size_t a = 0; a < term.size(); ++a) {
          next[a + 1] = next[a + 1] + term[a];          // * u
          next[a] = next[a] + term[a] * Rat(j);         // * j
        }
        term = std::move(next);
      }
      long long fact = 1;
      for (int t = 2; t <= i; ++t) fact *= t;
      for (auto& c : term) c = c * coef / Rat(fact);
      if (term.size() > poly.size()) poly.resize(term.size(), Rat(0));
      for (size_t a = 0; a < term.size(); ++a) poly[a] = poly[a] + term[a];
    }
    // substitute u = x - e
    std::vector<Rat> shifted(poly.size(), Rat(0));
    std::vector<Rat> power = {Rat(1)};  // (x - e)^a
    for (size_t a = 0; a < poly.size(); ++a) {
      for (size_t b = 0; b < power.size(); ++b) shifted[b] = shifted[b] + poly[a] * power[b];
      // power *= (x - e)
      std::vector<Rat> next(power.size() + 1, Rat(0));
      for (size_t b = 0; b < power.size(); ++b) {
        next[b + 1] = next[b + 1] + power[b];
        next[b] = next[b] + power[b] * Rat(-e);
      }
      power = std::move(next);
    }
    while (shifted.size() > 1 && shifted.back() == Rat(0)) shifted.pop_back();
    fit.coeffs = std::move(shifted);
  }
  // largest exact trailing window
  int start = n;
  for (int i = n - 1; i >= 0; --i) {
    Rat v = fit.degree < 0 ? Rat(0) : eval_poly(fit.coeffs, i);
    if (v == Rat(seq[i]))
      start = i;
    else
      break;
  }
  fit.fit_start = start;
  return fit;
}

}  // namespace citheta

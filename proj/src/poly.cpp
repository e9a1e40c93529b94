#include "citheta/poly.hpp"

#include <algorithm>
#include <map>

namespace citheta {

Poly Poly::from_terms(std::vector<PolyTerm> terms, const Fp& F) {
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return grevlex_cmp(a.m, b.m) > 0; });
  Poly p;
  for (auto& t : terms) {
    fp_t c = F.reduce(t.c);
    if (c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back({std::move(t.m), c});
    }
  }
  return p;
}

Poly Poly::monomial(Monomial m, fp_t c) {
  Poly p;
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Poly Poly::constant(int nvars, fp_t c) {
  Poly p;
  if (c != 0) p.terms_.push_back({one_monomial(nvars), c});
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().m.deg;
  for (const auto& t : terms_)
    if (t.m.deg != d) return false;
  return true;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || !(terms_[i].m == o.terms_[i].m)) return false;
  return true;
}

// Merge of two sorted term lists.
static Poly merge(const Poly& a, const Poly& b, const Fp& F, bool negate_b) {
  Poly out;
  auto& terms = const_cast<std::vector<PolyTerm>&>(out.terms());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t i = 0, j = 0;
  terms.reserve(ta.size() + tb.size());
  while (i < ta.size() && j < tb.size()) {
    int cmp = grevlex_cmp(ta[i].m, tb[j].m);
    if (cmp > 0) {
      terms.push_back(ta[i++]);
    } else if (cmp < 0) {
      fp_t c = negate_b ? F.neg(tb[j].c) : tb[j].c;
      terms.push_back({tb[j].m, c});
      ++j;
    } else {
      fp_t c = negate_b ? F.sub(ta[i].c, tb[j].c) : F.add(ta[i].c, tb[j].c);
      if (c != 0) terms.push_back({ta[i].m, c});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) terms.push_back(ta[i]);
  for (; j < tb.size(); ++j)
    terms.push_back({tb[j].m, negate_b ? F.neg(tb[j].c) : tb[j].c});
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, const Fp& F) { return merge(a, b, F, false); }
Poly poly_sub(const Poly& a, const Poly& b, const Fp& F) { return merge(a, b, F, true); }

Poly poly_neg(const Poly& a, const Fp& F) {
  Poly p = a;
  for (auto& t : p.terms_) t.c = F.neg(t.c);
  return p;
}

Poly poly_scale(const Poly& a, fp_t c, const Fp& F) {
  c = F.reduce(c);
  if (c == 0) return Poly();
  Poly p = a;
  for (auto& t : p.terms_) t.c = F.mul(t.c, c);
  return p;
}

Poly poly_mul_term(const Poly& a, const Monomial& m, fp_t c, const Fp& F) {
  c = F.reduce(c);
  if (c == 0) return Poly();
  Poly p;
  p.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) p.terms_.push_back({mono_mul(t.m, m), F.mul(t.c, c)});
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b, const Fp& F) {
  Poly acc;
  for (const auto& t : b.terms()) acc = poly_add(acc, poly_mul_term(a, t.m, t.c, F), F);
  return acc;
}

std::string poly_to_string(const Poly& a, const std::vector<std::string>& var_names) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) s += " + ";
    first = false;
    bool printed = false;
    if (t.c != 1 || t.m.is_one()) {
      s += std::to_string(t.c);
      printed = true;
    }
    for (size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (printed) s += "*";
      s += var_names[i];
      if (t.m.e[i] > 1) s += "^" + std::to_string(t.m.e[i]);
      printed = true;
    }
  }
  return s;
}

}  // namespace citheta

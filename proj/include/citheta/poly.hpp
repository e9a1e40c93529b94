#pragma once

#include <string>
#include <vector>

#include "citheta/fp.hpp"
#include "citheta/monomial.hpp"

namespace citheta {

struct PolyTerm {
  Monomial m;
  fp_t c;
};

// Polynomial in canonical form: terms strictly descending in grevlex, all
// coefficients nonzero.
class Poly {
 public:
  Poly() = default;

  static Poly from_terms(std::vector<PolyTerm> terms, const Fp& F);
  static Poly monomial(Monomial m, fp_t c = 1);
  static Poly constant(int nvars, fp_t c);

  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return int(terms_.size()); }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  const PolyTerm& lead() const { return terms_.front(); }

  // Max term degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
  bool is_homogeneous() const;

  bool operator==(const Poly& o) const;

 private:
  std::vector<PolyTerm> terms_;
  friend Poly poly_add(const Poly&, const Poly&, const Fp&);
  friend Poly poly_sub(const Poly&, const Poly&, const Fp&);
  friend Poly poly_mul(const Poly&, const Poly&, const Fp&);
  friend Poly poly_scale(const Poly&, fp_t, const Fp&);
  friend Poly poly_mul_term(const Poly&, const Monomial&, fp_t, const Fp&);
  friend Poly poly_neg(const Poly&, const Fp&);
};

Poly poly_add(const Poly& a, const Poly& b, const Fp& F);
Poly poly_sub(const Poly& a, const Poly& b, const Fp& F);
Poly poly_mul(const Poly& a, const Poly& b, const Fp& F);
Poly poly_scale(const Poly& a, fp_t c, const Fp& F);
Poly poly_mul_term(const Poly& a, const Monomial& m, fp_t c, const Fp& F);
Poly poly_neg(const Poly& a, const Fp& F);

std::string poly_to_string(const Poly& a, const std::vector<std::string>& var_names);

}  // namespace citheta

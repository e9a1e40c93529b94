#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "citheta/fp.hpp"
#include "citheta/groebner.hpp"
#include "citheta/staircase.hpp"

namespace citheta {

// Ambient graded polynomial ring S over F_p.
struct PolyRing {
  Fp field;
  std::vector<std::string> var_names;
  std::vector<int> weights;

  PolyRing(fp_t p, std::vector<std::string> names, std::vector<int> degs)
      : field(p), var_names(std::move(names)), weights(std::move(degs)) {}
  int nvars() const { return int(var_names.size()); }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

// S modulo a homogeneous regular sequence; the sequence may be empty, in
// which case this is S itself. Construction computes the reduced Gröbner
// basis of the relation ideal, which backs canonical representatives,
// dimension and all degreewise bases.
class QuotientRing {
 public:
  QuotientRing(PolyRingPtr base, std::vector<Poly> relations, bool validate = true);

  const PolyRing& base() const { return *base_; }
  PolyRingPtr base_ptr() const { return base_; }
  const Fp& field() const { return base_->field; }
  const std::vector<Poly>& relations() const { return relations_; }
  int codim() const { return int(relations_.size()); }
  int dim() const { return dim_; }

  const GBasis& ideal_gb() const { return ideal_gb_; }
  const std::vector<Poly>& ideal_gb_polys() const { return ideal_gb_polys_; }
  const Staircase& lt_ideal() const { return lt_; }

  Poly nf(const Poly& p) const { return poly_normal_form(p, ideal_gb_, field()); }

  // Monomial basis of the degree-d piece of the ring (cached).
  const std::vector<Monomial>& std_monomials(int degree) const;

 private:
  PolyRingPtr base_;
  std::vector<Poly> relations_;
  GBasis ideal_gb_;
  std::vector<Poly> ideal_gb_polys_;
  Staircase lt_;
  int dim_ = 0;
  mutable std::map<int, std::vector<Monomial>> piece_cache_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

QuotientRingPtr make_quotient(PolyRingPtr base, std::vector<Poly> relations, bool validate = true);

// The prefix quotient S/(f_1..f_k) of an existing quotient ring.
QuotientRingPtr prefix_quotient(const QuotientRing& r, int k);

bool same_ring(const QuotientRing& a, const QuotientRing& b);

}  // namespace citheta

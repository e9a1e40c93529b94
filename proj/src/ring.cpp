#include "citheta/ring.hpp"

#include <stdexcept>

namespace citheta {

QuotientRing::QuotientRing(PolyRingPtr base, std::vector<Poly> relations, bool validate)
    : base_(std::move(base)), relations_(std::move(relations)) {
  const Fp& F = base_->field;
  for (const Poly& f : relations_) {
    if (f.is_zero() || !f.is_homogeneous())
      throw std::invalid_argument("quotient relations must be nonzero and homogeneous");
    if (validate && f.degree() < 2)
      throw std::invalid_argument("quotient relations must have degree at least 2");
  }
  std::vector<ModuleElem> cols;
  for (const Poly& f : relations_) cols.push_back(elem_component_embed(f, 0));
  ideal_gb_ = buchberger(F, base_->weights, 1, {0}, cols, {}).gb;
  for (const auto& g : ideal_gb_.gens) ideal_gb_polys_.push_back(elem_extract_component(g, 0, F));
  for (const auto& g : ideal_gb_.gens) lt_.add(g.lead().m);
  dim_ = staircase_dim(lt_, base_->nvars());
  if (validate && dim_ != base_->nvars() - codim())
    throw std::invalid_argument("relations do not form a regular sequence (codimension mismatch)");
}

const std::vector<Monomial>& QuotientRing::std_monomials(int degree) const {
  auto it = piece_cache_.find(degree);
  if (it != piece_cache_.end()) return it->second;
  auto [ins, _] = piece_cache_.emplace(degree, standard_monomials(lt_, base_->weights, degree));
  return ins->second;
}

QuotientRingPtr make_quotient(PolyRingPtr base, std::vector<Poly> relations, bool validate) {
  return std::make_shared<QuotientRing>(std::move(base), std::move(relations), validate);
}

QuotientRingPtr prefix_quotient(const QuotientRing& r, int k) {
  if (k < 0 || k > r.codim()) throw std::invalid_argument("prefix length out of range");
  std::vector<Poly> rels(r.relations().begin(), r.relations().begin() + k);
  return make_quotient(r.base_ptr(), std::move(rels));
}

bool same_ring(const QuotientRing& a, const QuotientRing& b) {
  if (&a == &b) return true;
  if (a.base().nvars() != b.base().nvars() || a.field().p() != b.field().p()) return false;
  if (a.relations().size() != b.relations().size()) return false;
  for (size_t i = 0; i < a.relations().size(); ++i)
    if (!(a.relations()[i] == b.relations()[i])) return false;
  return true;
}

}  // namespace citheta

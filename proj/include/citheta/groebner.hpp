#pragma once

#include <optional>
#include <vector>

#include "citheta/poly.hpp"

namespace citheta {

struct ModTerm {
  int comp;
  Monomial m;
  fp_t c;
};

// Element of a free module, terms strictly descending in the module order.
class ModuleElem {
 public:
  ModuleElem() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::vector<ModTerm>& terms() const { return terms_; }
  const ModTerm& lead() const { return terms_.front(); }
  std::vector<ModTerm>& raw() { return terms_; }

  bool operator==(const ModuleElem& o) const;

 private:
  std::vector<ModTerm> terms_;
};

// Position-over-term: components compared first through a priority table
// (smaller value ranks higher), monomials by grevlex.
struct ModuleOrder {
  std::vector<int> priority;

  static ModuleOrder standard(int rank);
  int cmp(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) {
      int pa = priority[a.comp], pb = priority[b.comp];
      if (pa != pb) return pa < pb ? 1 : -1;
    }
    return grevlex_cmp(a.m, b.m);
  }
};

ModuleElem elem_from_terms(std::vector<ModTerm> terms, const ModuleOrder& ord, const Fp& F);
ModuleElem elem_add(const ModuleElem& a, const ModuleElem& b, const ModuleOrder& ord, const Fp& F);
ModuleElem elem_sub(const ModuleElem& a, const ModuleElem& b, const ModuleOrder& ord, const Fp& F);
ModuleElem elem_mul_term(const ModuleElem& a, const Monomial& m, fp_t c, const Fp& F);
ModuleElem elem_scale(const ModuleElem& a, fp_t c, const Fp& F);
ModuleElem elem_component_embed(const Poly& p, int comp);
Poly elem_extract_component(const ModuleElem& v, int comp, const Fp& F);

// Degree of a homogeneous element with respect to ambient shifts; -1 if zero.
int elem_degree(const ModuleElem& v, const std::vector<int>& shifts);
bool elem_is_homogeneous(const ModuleElem& v, const std::vector<int>& shifts);

struct GBasis {
  int ambient_rank = 0;
  std::vector<int> shifts;
  std::vector<int> weights;
  ModuleOrder order;
  std::vector<ModuleElem> gens;  // reduced, monic leads

  std::vector<std::vector<int>> lead_index;  // per component, generators leading there
  void build_index();
};

struct GBOptions {
  int degree_cap = -1;  // < 0 means no cap
  bool track = false;   // collect syzygies of the input columns
};

struct GBResult {
  GBasis gb;
  std::vector<ModuleElem> syzygies;   // in free module of rank = #input columns
  std::vector<ModuleElem> tagged_basis;  // extended-rank elements kept when track
  int tag_base = 0;
  bool capped = false;
};

// Buchberger for homogeneous submodules of a shifted free module over S.
// ring_relations, when nonempty, must be a reduced Gröbner basis of the
// quotient ideal; they are appended as f_j * e_i, making the output a Gröbner
// basis of the submodule's preimage over S/(ring_relations). Syzygy tags are
// attached to the input columns only, so tracked runs compute syzygies over
// the quotient ring.
GBResult buchberger(const Fp& F, const std::vector<int>& weights, int rank,
                    const std::vector<int>& shifts, const std::vector<ModuleElem>& gens,
                    const std::vector<Poly>& ring_relations, GBOptions opts = {});

ModuleElem normal_form(const ModuleElem& v, const GBasis& gb, const Fp& F);
Poly poly_normal_form(const Poly& p, const GBasis& ideal_gb, const Fp& F);

// Expresses p as sum q_i * gens_i from a tracked rank-1 run over the ideal
// generated by gens; nullopt when p is not in the ideal.
struct TaggedIdeal {
  std::vector<Poly> gens;
  GBResult run;
  int nvars = 0;
};
TaggedIdeal make_tagged_ideal(const Fp& F, const std::vector<int>& weights,
                              const std::vector<Poly>& gens);
std::optional<std::vector<Poly>> ideal_quotients(const TaggedIdeal& ti, const Poly& p, const Fp& F);

}  // namespace citheta

#pragma once

#include <utility>
#include <vector>

#include "cforge/formspec.hpp"
#include "cforge/mixed.hpp"
#include "cforge/ncpoly.hpp"

namespace cforge {

/// Generator set and defining relations of a Clifford presentation.
/// `relations` pairs each x-monomial of degree m*d with the nonzero
/// free-algebra coefficient it contributes; monomials whose coefficient
/// vanishes are kept in `zero_slots` so the slot count stays checkable.
template <class F>
struct Presentation {
  FormSpec<F> spec;
  std::vector<Exps> gens;  // deglex order, |J| = m
  std::vector<std::pair<Exps, NCPoly<F>>> relations;
  std::vector<Exps> zero_slots;

  std::size_t slot_count() const {
    return relations.size() + zero_slots.size();
  }
};

/// Extracts the defining relations: with S = sum_J a_J ⊗ x^J, forms
///   Delta = S^d - sum_{ell=1..d} S^{d-ell} * (1 ⊗ f_{ell*m})
/// and reads off the free-algebra coefficient of every x-monomial of
/// degree m*d.
template <class F>
Presentation<F> clifford_relations(const FormSpec<F>& spec) {
  spec.validate();
  const F& field = spec.field;
  Presentation<F> pres{spec, generators(spec), {}, {}};

  MixedPoly<F> s(field, spec.n);
  for (std::size_t i = 0; i < pres.gens.size(); ++i)
    s.add_term({static_cast<int>(i)}, pres.gens[i], field.one());

  // powers S^0..S^d, computed once
  std::vector<MixedPoly<F>> pow;
  pow.push_back(MixedPoly<F>::one(field, spec.n));
  for (int e = 1; e <= spec.d; ++e)
    pow.push_back(mixed_mul(pow.back(), s));

  MixedPoly<F> delta = pow[spec.d];
  for (int ell = 1; ell <= spec.d; ++ell) {
    if (spec.forms[ell - 1].is_zero()) continue;
    delta = delta - mixed_mul(pow[spec.d - ell],
                              MixedPoly<F>::from_cpoly(spec.forms[ell - 1]));
  }

  for (const Exps& alpha : monomials_of_degree(spec.n, spec.m * spec.d)) {
    NCPoly<F> rel = coeff_of_xmonomial(delta, alpha);
    if (rel.is_zero())
      pres.zero_slots.push_back(alpha);
    else
      pres.relations.emplace_back(alpha, std::move(rel));
  }
  return pres;
}

}  // namespace cforge

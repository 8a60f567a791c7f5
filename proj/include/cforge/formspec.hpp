#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cforge/cpoly.hpp"
#include "cforge/field.hpp"

namespace cforge {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Input data of a Clifford presentation: x-variable count n, weight m,
/// degree d, and forms f_m, f_{2m}, ..., f_{dm} (entry ell is zero or
/// homogeneous of degree ell*m).
template <class F>
struct FormSpec {
  F field{};
  int n = 1;
  int m = 1;
  int d = 1;
  std::vector<CPoly<F>> forms;  // forms[ell-1] = f_{ell*m}

  void validate() const {
    if (n < 1 || m < 1 || d < 1)
      throw Error(ErrorCode::InvalidInput, "n, m, d must be positive");
    if (static_cast<int>(forms.size()) != d)
      throw Error(ErrorCode::InvalidInput, "form list must have d entries");
    for (int ell = 1; ell <= d; ++ell) {
      const auto& f = forms[ell - 1];
      if (f.var_count() != n)
        throw Error(ErrorCode::ArityMismatch,
                    "form entry " + std::to_string(ell) +
                        " has wrong variable count");
      if (!f.is_zero() && !f.is_homogeneous_of_degree(ell * m))
        throw Error(ErrorCode::NotHomogeneous,
                    "form entry " + std::to_string(ell) +
                        " is not homogeneous of degree " +
                        std::to_string(ell * m));
    }
  }
};

/// All exponent vectors of total degree deg in n variables, in
/// ascending deglex order.
inline std::vector<Exps> monomials_of_degree(int n, int deg) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  // recursive composition enumeration, then a deglex sort
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), DeglexLess{});
  return out;
}

/// Generator index list of the presentation: all weight-m monomials in
/// deglex order. The position in this list is the generator index used
/// by Word.
template <class F>
std::vector<Exps> generators(const FormSpec<F>& spec) {
  spec.validate();
  return monomials_of_degree(spec.n, spec.m);
}

/// Classical (Roby) Clifford data: m = 1, single form of degree d.
template <class F>
FormSpec<F> roby(const CPoly<F>& f, int d) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  if (f.is_zero() || !f.is_homogeneous_of_degree(d))
    throw Error(ErrorCode::DegreeMismatch,
                "form is not homogeneous of degree " + std::to_string(d));
  FormSpec<F> spec{f.field(), f.var_count(), 1, d, {}};
  for (int ell = 1; ell < d; ++ell)
    spec.forms.push_back(CPoly<F>::zero(f.field(), f.var_count()));
  spec.forms.push_back(f);
  return spec;
}

/// Weighted Clifford data: generators indexed by weight-m monomials,
/// single top form of degree m*d.
template <class F>
FormSpec<F> weighted(int m, const CPoly<F>& f, int d) {
  if (m < 1 || d < 1)
    throw Error(ErrorCode::InvalidInput, "weight and degree must be positive");
  if (f.is_zero() || !f.is_homogeneous_of_degree(m * d))
    throw Error(ErrorCode::DegreeMismatch,
                "form is not homogeneous of degree " + std::to_string(m * d));
  FormSpec<F> spec{f.field(), f.var_count(), m, d, {}};
  for (int ell = 1; ell < d; ++ell)
    spec.forms.push_back(CPoly<F>::zero(f.field(), f.var_count()));
  spec.forms.push_back(f);
  return spec;
}

/// Non-diagonal Clifford data: m = 1 with lower-order forms, entry i of
/// the list homogeneous of degree i (or zero).
template <class F>
FormSpec<F> nondiagonal(const std::vector<CPoly<F>>& f_list) {
  if (f_list.empty())
    throw Error(ErrorCode::InvalidInput, "empty form list");
  int d = static_cast<int>(f_list.size());
  FormSpec<F> spec{f_list[0].field(), f_list[0].var_count(), 1, d, f_list};
  spec.validate();
  return spec;
}

/// The hypersurface x0^d - sum_ell x0^{d-ell} f_{ell*m}, a polynomial
/// in x0, x1, ..., xn with x0 of weight m. Variable index 0 is x0.
template <class F>
struct HypersurfaceData {
  CPoly<F> equation;  // n+1 variables, x0 first
  int weight_x0 = 1;
  std::optional<int> genus_hint;
};

template <class F>
HypersurfaceData<F> hypersurface_equation(const FormSpec<F>& spec) {
  spec.validate();
  const F& field = spec.field;
  int n1 = spec.n + 1;
  CPoly<F> eq(field, n1);
  Exps lead(n1, 0);
  lead[0] = spec.d;
  eq.add_term(lead, field.one());
  for (int ell = 1; ell <= spec.d; ++ell) {
    for (const auto& [e, c] : spec.forms[ell - 1].terms()) {
      Exps e1(n1, 0);
      e1[0] = spec.d - ell;
      for (int i = 0; i < spec.n; ++i) e1[i + 1] = e[i];
      eq.add_term(e1, field.neg(c));
    }
  }
  return HypersurfaceData<F>{std::move(eq), spec.m, std::nullopt};
}

}  // namespace cforge

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "cforge/matrep.hpp"

namespace cforge {

/// Graded free module over k[x1,x2] with an x0-action: generator
/// degree shifts s_i and a square action matrix whose (i,j) entry is
/// zero or homogeneous of degree m + s_i - s_j. The action satisfies
/// the hypersurface identity M^d = sum_ell M^{d-ell} f_{ell*m}, making
/// the module a module over the coordinate ring of the curve.
template <class F>
struct GradedModule {
  FormSpec<F> spec;  // n = 2
  std::vector<int> shifts;
  PolyMatrix<F> action;

  void validate() const {
    spec.validate();
    if (spec.n != 2)
      throw Error(ErrorCode::ArityMismatch,
                  "graded modules require the curve case n = 2");
    if (shifts.empty())
      throw Error(ErrorCode::InvalidInput, "degenerate rank-0 module");
    std::size_t r = shifts.size();
    if (action.size() != r)
      throw Error(ErrorCode::InvalidInput,
                  "action matrix size does not match rank");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        const CPoly<F>& e = action.at(i, j);
        int deg = spec.m + shifts[i] - shifts[j];
        if (!e.is_zero() && !(deg >= 0 && e.is_homogeneous_of_degree(deg)))
          throw Error(ErrorCode::NotHomogeneous,
                      "action entry is not homogeneous of the graded degree");
      }
    // the module axiom: M^d - sum_ell M^{d-ell} f_{ell*m} Id = 0
    std::vector<PolyMatrix<F>> powers;
    powers.push_back(PolyMatrix<F>::identity(spec.field, r, 2));
    for (int e = 1; e <= spec.d; ++e) powers.push_back(powers.back() * action);
    PolyMatrix<F> residue = powers[spec.d];
    for (int ell = 1; ell <= spec.d; ++ell) {
      if (spec.forms[ell - 1].is_zero()) continue;
      residue = residue - powers[spec.d - ell].scaled(spec.forms[ell - 1]);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (!residue.at(i, j).is_zero())
          throw Error(ErrorCode::InvalidInput,
                      "action does not satisfy the hypersurface identity");
  }
};

/// Multiset {n_i} of the Birkhoff-Grothendieck decomposition of the
/// pushforward, stored sorted ascending.
struct SplittingType {
  std::vector<int> parts;

  bool all_zero() const {
    return std::all_of(parts.begin(), parts.end(),
                       [](int n) { return n == 0; });
  }
  bool operator==(const SplittingType&) const = default;
};

struct CurveData {
  enum class Source { Formula, UserSupplied };
  int genus = 0;
  int degree = 1;
  Source source = Source::Formula;
};

struct UlrichReport {
  SplittingType splitting;
  bool is_ulrich = false;
  Rational slope;
  int genus = 0;
  std::size_t h0_of_minus_one = 0;
};

/// The triple-(W, V, f) direction of the representation-module
/// correspondence: shifts all zero, action sum_J A_J x^J.
template <class F>
GradedModule<F> module_from_rep(const MatrixRep<F>& rep) {
  if (rep.spec.n != 2)
    throw Error(ErrorCode::ArityMismatch,
                "module_from_rep requires n = 2 (a map to the projective line)");
  if (!verify_rep(rep).valid)
    throw Error(ErrorCode::Unverified,
                "module_from_rep requires a verified representation");
  const F& field = rep.spec.field;
  auto gens = generators(rep.spec);
  PolyMatrix<F> action(field, rep.size, 2);
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::size_t i = 0; i < rep.size; ++i)
      for (std::size_t j = 0; j < rep.size; ++j) {
        const auto& c = rep.matrices[gi].at(i, j);
        if (!field.is_zero(c))
          action.at(i, j) =
              action.at(i, j) + CPoly<F>::monomial(field, gens[gi], c);
      }
  return GradedModule<F>{rep.spec, std::vector<int>(rep.size, 0),
                         std::move(action)};
}

/// Dimension of the degree-t piece of the underlying free bivariate
/// module: sum_i max(0, t - s_i + 1).
template <class F>
std::size_t graded_dimension(const GradedModule<F>& mod, int t) {
  std::size_t total = 0;
  for (int s : mod.shifts)
    if (t - s + 1 > 0) total += static_cast<std::size_t>(t - s + 1);
  return total;
}

/// Recovers the splitting multiset from the graded Hilbert function by
/// first differences: h(t) - h(t-1) = #{i : n_i >= -t}, with n_i = -s_i.
template <class F>
SplittingType splitting_type(const GradedModule<F>& mod) {
  mod.validate();
  int t_lo = *std::min_element(mod.shifts.begin(), mod.shifts.end()) - 1;
  int t_hi = *std::max_element(mod.shifts.begin(), mod.shifts.end());
  SplittingType st;
  std::size_t prev_diff = 0;
  for (int t = t_lo; t <= t_hi; ++t) {
    std::size_t diff = graded_dimension(mod, t) - graded_dimension(mod, t - 1);
    for (std::size_t k = prev_diff; k < diff; ++k) st.parts.push_back(-t);
    prev_diff = diff;
  }
  std::sort(st.parts.begin(), st.parts.end());
  // consistency: h(t) = sum_i max(0, n_i + t + 1) across the window
  for (int t = t_lo - 1; t <= t_hi; ++t) {
    std::size_t h = 0;
    for (int ni : st.parts)
      if (ni + t + 1 > 0) h += static_cast<std::size_t>(ni + t + 1);
    if (h != graded_dimension(mod, t))
      throw Error(ErrorCode::InvalidInput,
                  "internal: splitting recovery failed the Hilbert check");
  }
  return st;
}

namespace detail {

/// Univariate polynomial utilities for the squarefreeness test.
template <class F>
using UniPoly = std::vector<typename F::Elem>;  // coeffs, low to high

template <class F>
void uni_trim(const F& field, UniPoly<F>& p) {
  while (!p.empty() && field.is_zero(p.back())) p.pop_back();
}

template <class F>
UniPoly<F> uni_rem(const F& field, UniPoly<F> a, const UniPoly<F>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    typename F::Elem q = field.div(a.back(), b.back());
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[off + i] = field.sub(a[off + i], field.mul(q, b[i]));
    uni_trim(field, a);
  }
  return a;
}

template <class F>
UniPoly<F> uni_gcd(const F& field, UniPoly<F> a, UniPoly<F> b) {
  uni_trim(field, a);
  uni_trim(field, b);
  while (!b.empty()) {
    UniPoly<F> r = uni_rem(field, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Degree of the gcd of two nonzero homogeneous binary forms:
/// min(x2-multiplicity) plus the degree of the gcd of the
/// dehomogenizations at x2 = 1.
template <class F>
int hom_binary_gcd_degree(const CPoly<F>& f, const CPoly<F>& g) {
  const F& field = f.field();
  auto split = [&](const CPoly<F>& p, int& x2_mult) -> UniPoly<F> {
    x2_mult = std::numeric_limits<int>::max();
    int max_e1 = 0;
    for (const auto& [e, c] : p.terms()) {
      x2_mult = std::min(x2_mult, e[1]);
      max_e1 = std::max(max_e1, e[0]);
    }
    UniPoly<F> u(max_e1 + 1, field.zero());
    for (const auto& [e, c] : p.terms()) u[e[0]] = c;
    uni_trim(field, u);
    return u;
  };
  int mf = 0, mg = 0;
  UniPoly<F> uf = split(f, mf), ug = split(g, mg);
  UniPoly<F> gg = uni_gcd(field, uf, ug);
  return std::min(mf, mg) + static_cast<int>(gg.size()) - 1;
}

}  // namespace detail

/// Squarefreeness of a nonzero homogeneous binary form, checked via
/// gcds with both partial derivatives. Returns nullopt when a partial
/// derivative vanishes identically (small characteristic), in which
/// case the test is inconclusive.
template <class F>
std::optional<bool> is_squarefree_binary(const CPoly<F>& f) {
  for (int i = 0; i < 2; ++i) {
    CPoly<F> df = f.derivative(i);
    if (df.is_zero()) return std::nullopt;
    if (detail::hom_binary_gcd_degree(f, df) > 0) return false;
  }
  return true;
}

/// Genus of the curve x0^d = f_{dm}(x1, x2) for a diagonal squarefree
/// spec: the degree-d cover of the projective line is totally ramified
/// over the md roots of f_{dm} and unramified over infinity, so
/// Riemann-Hurwitz gives 2g - 2 = -2d + md(d-1).
template <class F>
CurveData genus(const FormSpec<F>& spec,
                std::optional<int> user_genus = std::nullopt) {
  spec.validate();
  if (spec.n != 2)
    throw Error(ErrorCode::ArityMismatch, "genus requires n = 2");
  if (user_genus) {
    if (*user_genus < 0)
      throw Error(ErrorCode::InvalidInput, "genus must be nonnegative");
    return CurveData{*user_genus, spec.d, CurveData::Source::UserSupplied};
  }
  for (int ell = 1; ell < spec.d; ++ell)
    if (!spec.forms[ell - 1].is_zero())
      throw Error(ErrorCode::InvalidInput,
                  "genus formula needs a diagonal spec; supply the genus");
  const CPoly<F>& top = spec.forms[spec.d - 1];
  if (top.is_zero())
    throw Error(ErrorCode::InvalidInput,
                "genus formula needs a nonzero top form");
  std::optional<bool> sf = is_squarefree_binary(top);
  if (!sf || !*sf)
    throw Error(ErrorCode::InvalidInput,
                "genus formula needs a squarefree top form; supply the genus");
  int g = (spec.d - 1) * (spec.m * spec.d - 2) / 2;
  return CurveData{g, spec.d, CurveData::Source::Formula};
}

/// Ulrich criterion via the splitting type: Ulrich iff all n_i = 0;
/// slope from chi(V) = deg V - r(g - 1) with chi = sum(n_i + 1) and
/// r = (free rank)/d; h0(V(-1)) = sum max(0, n_i).
template <class F>
UlrichReport ulrich_check(const GradedModule<F>& mod, const CurveData& curve) {
  mod.validate();
  if (curve.degree != mod.spec.d)
    throw Error(ErrorCode::DegreeMismatch,
                "curve degree does not match the spec degree");
  std::size_t free_rank = mod.shifts.size();
  std::size_t d = static_cast<std::size_t>(mod.spec.d);
  if (free_rank % d != 0)
    throw Error(ErrorCode::InvalidInput,
                "free rank is not a multiple of the degree d");
  UlrichReport report;
  report.splitting = splitting_type(mod);
  report.genus = curve.genus;
  long long chi = 0, h0m1 = 0;
  for (int ni : report.splitting.parts) {
    chi += ni + 1;
    if (ni > 0) h0m1 += ni;
  }
  long long r = static_cast<long long>(free_rank / d);
  long long deg = chi + r * (curve.genus - 1);
  report.slope = Rational(deg, r);
  report.h0_of_minus_one = static_cast<std::size_t>(h0m1);
  report.is_ulrich = report.splitting.all_zero();
  return report;
}

/// Twist by the pullback of O(t): shifts drop by t, the action is
/// unchanged, the splitting type rises by t uniformly.
template <class F>
GradedModule<F> twist(const GradedModule<F>& mod, int t) {
  GradedModule<F> r = mod;
  for (int& s : r.shifts) s -= t;
  return r;
}

/// Inverse direction of the correspondence: for a module with trivial
/// pushforward (all shifts zero), reads the coefficient matrices A_J
/// off the degree-m action. Exact round trip with module_from_rep.
template <class F>
MatrixRep<F> rep_from_module(const GradedModule<F>& mod) {
  mod.validate();
  for (int s : mod.shifts)
    if (s != 0)
      throw Error(ErrorCode::InvalidInput,
                  "rep_from_module needs an all-zero splitting "
                  "(zero shifts in the given basis)");
  const F& field = mod.spec.field;
  auto gens = generators(mod.spec);
  std::size_t r = mod.shifts.size();
  MatrixRep<F> rep{mod.spec, r, {}};
  for (const Exps& J : gens) {
    Matrix<F> a(field, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a.at(i, j) = mod.action.at(i, j).coeff(J);
    rep.matrices.push_back(std::move(a));
  }
  VerifyResult<F> v = verify_rep(rep);
  if (!v.valid)
    throw Error(ErrorCode::InvalidInput,
                "internal: extracted matrices fail verification");
  return rep;
}

}  // namespace cforge

// Test-only oracles, kept independent of the library's polynomial
// containers: plain vectors of (word, x-exponent, coefficient) triples
// and default-ordered std::maps.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "cforge/field.hpp"

namespace oracle {

template <class F>
struct NaiveTerm {
  std::vector<int> word;   // generator indices, order significant
  std::vector<int> xe;     // commuting exponents
  typename F::Elem coeff;
};

template <class F>
using NaiveList = std::vector<NaiveTerm<F>>;

template <class F>
NaiveList<F> naive_mul(const F& field, const NaiveList<F>& a,
                       const NaiveList<F>& b) {
  NaiveList<F> out;
  for (const auto& s : a)
    for (const auto& t : b) {
      NaiveTerm<F> r;
      r.word = s.word;
      r.word.insert(r.word.end(), t.word.begin(), t.word.end());
      r.xe.resize(s.xe.size());
      for (std::size_t i = 0; i < s.xe.size(); ++i)
        r.xe[i] = s.xe[i] + t.xe[i];
      r.coeff = field.mul(s.coeff, t.coeff);
      out.push_back(std::move(r));
    }
  return out;
}

/// Collected coefficients of the x-monomials: for each exponent vector,
/// the word -> coefficient map, zero entries dropped.
template <class F>
using Collected =
    std::map<std::vector<int>, std::map<std::vector<int>, typename F::Elem>>;

template <class F>
Collected<F> collect(const F& field, const NaiveList<F>& terms) {
  Collected<F> grouped;
  for (const auto& t : terms) {
    auto& slot = grouped[t.xe][t.word];  // default-constructed Elem is 0
    slot = field.add(slot, t.coeff);
  }
  Collected<F> cleaned;
  for (auto& [xe, words] : grouped)
    for (auto& [w, c] : words)
      if (!field.is_zero(c)) cleaned[xe][w] = c;
  return cleaned;
}

/// Expands (sum_J a_J x^J)^d - sum_ell (sum_J a_J x^J)^{d-ell} f_{ell m}
/// term by term and groups by x-monomial. Generators are the weight-m
/// exponent vectors in the order given by `gens`; forms[ell-1] is the
/// term list of f_{ell*m} (word part empty).
template <class F>
Collected<F> naive_clifford_relations(
    const F& field, int n, int d, const std::vector<std::vector<int>>& gens,
    const std::vector<NaiveList<F>>& forms) {
  NaiveList<F> s;
  for (std::size_t i = 0; i < gens.size(); ++i)
    s.push_back(NaiveTerm<F>{{static_cast<int>(i)}, gens[i], field.one()});

  std::vector<NaiveList<F>> powers;
  powers.push_back(NaiveList<F>{
      NaiveTerm<F>{{}, std::vector<int>(n, 0), field.one()}});
  for (int e = 1; e <= d; ++e)
    powers.push_back(naive_mul(field, powers.back(), s));

  NaiveList<F> delta = powers[d];
  for (int ell = 1; ell <= d; ++ell) {
    NaiveList<F> prod = naive_mul(field, powers[d - ell], forms[ell - 1]);
    for (auto& t : prod) {
      t.coeff = field.neg(t.coeff);
      delta.push_back(t);
    }
  }
  return collect(field, delta);
}

}  // namespace oracle

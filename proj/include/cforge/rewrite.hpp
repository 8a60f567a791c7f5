#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <vector>

#include "cforge/linalg.hpp"
#include "cforge/ncpoly.hpp"
#include "cforge/presentation.hpp"

namespace cforge {

/// One oriented rewrite rule: lead -> tail, with lead deglex-greater
/// than every word of the tail.
template <class F>
struct Rule {
  Word lead;
  NCPoly<F> tail;
};

/// Degree-truncated two-sided rewriting system for k<a_J>/I. All
/// overlap ambiguities of combined degree <= complete_below have been
/// resolved, so reduction below that degree is confluent.
template <class F>
struct RewriteSystem {
  Presentation<F> pres;
  int bound = 0;           // truncation degree N
  int complete_below = 0;  // confluence certified up to this degree
  std::vector<Rule<F>> rules;

  std::size_t generator_count() const { return pres.gens.size(); }

  /// Fully reduces p with respect to the rule list. Deterministic:
  /// always rewrites the deglex-largest term, at the leftmost position
  /// admitting the earliest-created rule.
  NCPoly<F> reduce(NCPoly<F> p) const {
    const F& field = p.field();
    NCPoly<F> result(field);
    while (!p.is_zero()) {
      auto [w, c] = p.leading_term();
      std::size_t pos = 0;
      const Rule<F>* hit = nullptr;
      for (std::size_t at = 0; at < w.size() && !hit; ++at) {
        for (const Rule<F>& r : rules) {
          if (r.lead.size() > w.size() - at) continue;
          if (std::equal(r.lead.begin(), r.lead.end(), w.begin() + at)) {
            hit = &r;
            pos = at;
            break;
          }
        }
      }
      p.add_term(w, field.neg(c));
      if (!hit) {
        result.add_term(w, c);
        continue;
      }
      Word prefix(w.begin(), w.begin() + pos);
      Word suffix(w.begin() + pos + hit->lead.size(), w.end());
      for (const auto& [tw, tc] : hit->tail.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), tw.begin(), tw.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        p.add_term(nw, field.mul(c, tc));
      }
    }
    return result;
  }
};

namespace detail {

template <class F>
NCPoly<F> left_right_mul(const F& field, const Word& left,
                         const NCPoly<F>& mid, const Word& right) {
  NCPoly<F> r(field);
  for (const auto& [w, c] : mid.terms()) {
    Word nw = left;
    nw.insert(nw.end(), w.begin(), w.end());
    nw.insert(nw.end(), right.begin(), right.end());
    r.add_term(nw, c);
  }
  return r;
}

/// S-polynomials of the ambiguities between rules u and v, restricted
/// to combined degree <= bound. Proper overlaps first (by increasing
/// overlap length), then inclusions of v.lead inside u.lead.
template <class F>
void collect_ambiguities(const F& field, const Rule<F>& u, const Rule<F>& v,
                         int bound, std::deque<NCPoly<F>>& out) {
  const Word& a = u.lead;
  const Word& b = v.lead;
  for (std::size_t s = 1; s < a.size() && s < b.size(); ++s) {
    if (!std::equal(a.end() - s, a.end(), b.begin())) continue;
    if (a.size() + b.size() - s > static_cast<std::size_t>(bound)) continue;
    Word suffix(b.begin() + s, b.end());
    Word prefix(a.begin(), a.end() - s);
    // overlap word = prefix . (shared) . suffix; two reductions:
    //   tail_u * suffix  vs  prefix * tail_v
    out.push_back(left_right_mul(field, Word{}, u.tail, suffix) -
                  left_right_mul(field, prefix, v.tail, Word{}));
  }
  if (b.size() < a.size()) {
    for (std::size_t at = 0; at + b.size() <= a.size(); ++at) {
      if (!std::equal(b.begin(), b.end(), a.begin() + at)) continue;
      Word prefix(a.begin(), a.begin() + at);
      Word suffix(a.begin() + at + b.size(), a.end());
      out.push_back(u.tail - left_right_mul(field, prefix, v.tail, suffix));
    }
  }
}

}  // namespace detail

/// Truncated overlap completion of the relation set: resolves every
/// ambiguity of combined degree <= N, FIFO by creation order. Throws
/// when the rule count exceeds rule_cap.
template <class F>
RewriteSystem<F> truncated_completion(const Presentation<F>& pres, int N,
                                      std::size_t rule_cap = 200000) {
  if (N < pres.spec.d)
    throw Error(ErrorCode::InvalidInput,
                "truncation bound must be at least the degree d");
  const F& field = pres.spec.field;
  RewriteSystem<F> rs{pres, N, 0, {}};
  std::deque<NCPoly<F>> pending;
  for (const auto& [alpha, rel] : pres.relations) pending.push_back(rel);

  while (!pending.empty()) {
    NCPoly<F> p = rs.reduce(std::move(pending.front()));
    pending.pop_front();
    if (p.is_zero()) continue;
    auto [lead, c] = p.leading_term();
    if (static_cast<int>(lead.size()) > N) continue;  // above the bound
    NCPoly<F> monic = p.scaled(field.inv(c));
    NCPoly<F> tail = NCPoly<F>::term(field, lead, field.one()) - monic;
    rs.rules.push_back(Rule<F>{lead, std::move(tail)});
    if (rs.rules.size() > rule_cap)
      throw Error(ErrorCode::ResourceBudget,
                  "rule-count cap exceeded during completion");
    std::size_t k = rs.rules.size() - 1;
    for (std::size_t j = 0; j <= k; ++j) {
      detail::collect_ambiguities(field, rs.rules[k], rs.rules[j], N,
                                  pending);
      if (j != k)
        detail::collect_ambiguities(field, rs.rules[j], rs.rules[k], N,
                                    pending);
    }
  }
  rs.complete_below = N;
  return rs;
}

/// Unique reduced representative of p modulo the truncated ideal.
/// Refused above the confluence bound rather than approximated.
template <class F>
NCPoly<F> normal_form(const RewriteSystem<F>& rs, const NCPoly<F>& p) {
  if (p.degree() > rs.complete_below)
    throw Error(ErrorCode::DegreeAboveBound,
                "polynomial degree exceeds the completed bound");
  return rs.reduce(p);
}

/// Dimensions of the filtered pieces F_t of the truncated quotient.
/// dims[t] counts irreducible words of length <= t; the stable flag
/// marks entries certified exact (completion quiescent two degrees
/// beyond t).
struct FilteredDims {
  std::vector<std::size_t> dims;
  std::vector<bool> stable;
};

template <class F>
std::vector<Word> irreducible_words(const RewriteSystem<F>& rs, int max_len,
                                    std::size_t word_cap = 2000000) {
  int g = static_cast<int>(rs.generator_count());
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  for (int t = 1; t <= max_len; ++t) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int letter = 0; letter < g; ++letter) {
        Word nw = w;
        nw.push_back(letter);
        // the prefix is irreducible, so only suffixes need checking
        bool reducible = false;
        for (const Rule<F>& r : rs.rules) {
          if (r.lead.size() > nw.size()) continue;
          if (std::equal(r.lead.begin(), r.lead.end(),
                         nw.end() - r.lead.size())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(nw));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    if (all.size() > word_cap)
      throw Error(ErrorCode::ResourceBudget,
                  "irreducible word enumeration exceeded cap");
    level = std::move(next);
  }
  return all;
}

template <class F>
FilteredDims filtered_dimension(const RewriteSystem<F>& rs) {
  FilteredDims fd;
  std::vector<Word> words = irreducible_words(rs, rs.bound);
  fd.dims.assign(rs.bound + 1, 0);
  for (const Word& w : words)
    for (int t = static_cast<int>(w.size()); t <= rs.bound; ++t)
      fd.dims[t] += 1;
  for (int t = 0; t <= rs.bound; ++t)
    fd.stable.push_back(t + 2 <= rs.complete_below);
  return fd;
}

/// Basis of the degree-<=t part of the center of the truncated
/// quotient: all z with normal_form(z a_J - a_J z) = 0 for every
/// generator. The identity is always the first element.
template <class F>
std::vector<NCPoly<F>> center_basis(const RewriteSystem<F>& rs, int t) {
  if (t > rs.complete_below - 1)
    throw Error(ErrorCode::DegreeAboveBound,
                "center degree bound too large for the completed system");
  if (t < 0) throw Error(ErrorCode::InvalidInput, "negative degree bound");
  const F& field = rs.pres.spec.field;
  int g = static_cast<int>(rs.generator_count());

  std::vector<Word> basis_words = irreducible_words(rs, t);
  std::vector<Word> target_words = irreducible_words(rs, t + 1);
  std::map<Word, std::size_t, WordLess> target_index;
  for (std::size_t i = 0; i < target_words.size(); ++i)
    target_index.emplace(target_words[i], i);

  std::size_t ncols = basis_words.size();
  std::size_t nrows = static_cast<std::size_t>(g) * target_words.size();
  Matrix<F> constraints(field, nrows, ncols);
  for (std::size_t col = 0; col < ncols; ++col) {
    for (int gi = 0; gi < g; ++gi) {
      NCPoly<F> w = NCPoly<F>::term(field, basis_words[col], field.one());
      NCPoly<F> a = NCPoly<F>::generator(field, gi);
      NCPoly<F> comm = rs.reduce(w * a - a * w);
      for (const auto& [u, c] : comm.terms()) {
        std::size_t row =
            static_cast<std::size_t>(gi) * target_words.size() +
            target_index.at(u);
        constraints.at(row, col) = c;
      }
    }
  }

  auto null_vecs = nullspace(std::move(constraints));

  // re-echelonize with the identity seeded first, so 1 is literally in
  // the returned basis
  EchelonSpan<F> span(field, ncols);
  std::vector<std::vector<typename F::Elem>> vecs;
  std::vector<typename F::Elem> unit(ncols, field.zero());
  unit[0] = field.one();  // basis_words[0] is the empty word
  span.insert(unit);
  vecs.push_back(unit);
  for (auto& v : null_vecs) {
    auto r = span.reduce(v);
    std::size_t piv = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
      if (!field.is_zero(r[j])) {
        piv = j;
        break;
      }
    if (piv == ncols) continue;
    typename F::Elem inv = field.inv(r[piv]);
    for (auto& x : r) x = field.mul(x, inv);
    span.insert(r);
    vecs.push_back(std::move(r));
  }

  std::vector<NCPoly<F>> out;
  for (const auto& v : vecs) {
    NCPoly<F> z(field);
    for (std::size_t i = 0; i < ncols; ++i) z.add_term(basis_words[i], v[i]);
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace cforge

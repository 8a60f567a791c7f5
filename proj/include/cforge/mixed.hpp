#pragma once

#include <map>
#include <utility>

#include "cforge/cpoly.hpp"
#include "cforge/ncpoly.hpp"

namespace cforge {

/// Ordering on (word, x-exponent) pairs: deglex on the word, then
/// deglex on the commutative part.
struct MixedLess {
  bool operator()(const std::pair<Word, Exps>& a,
                  const std::pair<Word, Exps>& b) const {
    WordLess wl;
    if (wl(a.first, b.first)) return true;
    if (wl(b.first, a.first)) return false;
    return DeglexLess{}(a.second, b.second);
  }
};

/// Element of the mixed ring: the free algebra on the a-generators with
/// commuting polynomial variables x1..xn adjoined. x-monomials commute
/// with everything; a-words multiply by concatenation.
template <class F>
class MixedPoly {
 public:
  using Elem = typename F::Elem;
  using Key = std::pair<Word, Exps>;
  using Terms = std::map<Key, Elem, MixedLess>;

  MixedPoly() = default;
  MixedPoly(F field, int n) : field_(field), n_(n) {}

  static MixedPoly zero(F field, int n) { return MixedPoly(field, n); }
  static MixedPoly one(F field, int n) {
    MixedPoly p(field, n);
    p.add_term({}, Exps(n, 0), field.one());
    return p;
  }
  /// a_i ⊗ x^e
  static MixedPoly generator_times_monomial(F field, int n, int i,
                                            const Exps& e) {
    MixedPoly p(field, n);
    p.add_term({i}, e, field.one());
    return p;
  }
  /// 1 ⊗ f
  static MixedPoly from_cpoly(const CPoly<F>& f) {
    MixedPoly p(f.field(), f.var_count());
    for (const auto& [e, c] : f.terms()) p.add_term({}, e, c);
    return p;
  }

  const F& field() const { return field_; }
  int var_count() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Exps& e, const Elem& c) {
    if (field_.is_zero(c)) return;
    if (static_cast<int>(e.size()) != n_)
      throw Error(ErrorCode::ArityMismatch, "exponent vector length mismatch");
    Key k{w, e};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  MixedPoly operator+(const MixedPoly& o) const {
    check_compatible(o);
    MixedPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  MixedPoly operator-(const MixedPoly& o) const {
    check_compatible(o);
    MixedPoly r = *this;
    for (const auto& [k, c] : o.terms_)
      r.add_term(k.first, k.second, field_.neg(c));
    return r;
  }

  bool operator==(const MixedPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  void check_compatible(const MixedPoly& o) const {
    if (n_ != o.n_)
      throw Error(ErrorCode::ArityMismatch, "x-variable count mismatch");
    if (!(field_ == o.field_))
      throw Error(ErrorCode::FieldMismatch, "mixed base fields");
  }

 private:
  F field_{};
  int n_ = 0;
  Terms terms_;
};

/// Bilinear product: a-words concatenate in order, x-exponents add.
template <class F>
MixedPoly<F> mixed_mul(const MixedPoly<F>& p, const MixedPoly<F>& q) {
  p.check_compatible(q);
  MixedPoly<F> r(p.field(), p.var_count());
  const F& f = p.field();
  for (const auto& [k1, c1] : p.terms())
    for (const auto& [k2, c2] : q.terms())
      r.add_term(word_concat(k1.first, k2.first),
                 exps_add(k1.second, k2.second), f.mul(c1, c2));
  return r;
}

template <class F>
MixedPoly<F> mixed_pow(const MixedPoly<F>& p, int e) {
  if (e < 0) throw Error(ErrorCode::InvalidInput, "negative power");
  MixedPoly<F> r = MixedPoly<F>::one(p.field(), p.var_count());
  for (int i = 0; i < e; ++i) r = mixed_mul(r, p);
  return r;
}

/// The free-algebra coefficient of x^exps in p, so that
/// p = sum_alpha coeff_of_xmonomial(p, alpha) ⊗ x^alpha.
template <class F>
NCPoly<F> coeff_of_xmonomial(const MixedPoly<F>& p, const Exps& exps) {
  if (static_cast<int>(exps.size()) != p.var_count())
    throw Error(ErrorCode::ArityMismatch, "exponent vector length mismatch");
  NCPoly<F> r(p.field());
  for (const auto& [k, c] : p.terms())
    if (k.second == exps) r.add_term(k.first, c);
  return r;
}

}  // namespace cforge

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cforge/error.hpp"
#include "cforge/field.hpp"

namespace cforge {

/// Exponent vector of a commutative monomial, one entry per variable.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Degree-lexicographic order with x1 < x2 < ... : compare total degree
/// first, then exponent vectors read from the last (largest) variable.
struct DeglexLess {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
  }
};

inline Exps exps_add(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] < 0) throw Error(ErrorCode::Overflow, "exponent overflow");
  }
  return r;
}

/// Sparse multivariate polynomial over a field F, in a fixed number of
/// commuting variables. Zero coefficients are never stored; the zero
/// polynomial is the empty term map. Immutable in spirit: operations
/// return new values.
template <class F>
class CPoly {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<Exps, Elem, DeglexLess>;

  CPoly() = default;
  CPoly(F field, int n) : field_(field), n_(n) {}

  static CPoly zero(F field, int n) { return CPoly(field, n); }
  static CPoly constant(F field, int n, const Elem& c) {
    CPoly p(field, n);
    p.add_term(Exps(n, 0), c);
    return p;
  }
  static CPoly one(F field, int n) { return constant(field, n, field.one()); }
  static CPoly variable(F field, int n, int i) {
    CPoly p(field, n);
    Exps e(n, 0);
    e[i] = 1;
    p.add_term(e, field.one());
    return p;
  }
  static CPoly monomial(F field, const Exps& e, const Elem& c) {
    CPoly p(field, static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  const F& field() const { return field_; }
  int var_count() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^e into the term map, erasing the slot if it cancels.
  void add_term(const Exps& e, const Elem& c) {
    if (field_.is_zero(c)) return;
    if (static_cast<int>(e.size()) != n_)
      throw Error(ErrorCode::ArityMismatch, "exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Elem coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  int degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous_of_degree(int d) const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  CPoly operator+(const CPoly& o) const {
    check_compatible(o);
    CPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  CPoly operator-(const CPoly& o) const {
    check_compatible(o);
    CPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, field_.neg(c));
    return r;
  }
  CPoly operator-() const {
    CPoly r(field_, n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_.neg(c));
    return r;
  }
  CPoly operator*(const CPoly& o) const {
    check_compatible(o);
    CPoly r(field_, n_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_)
        r.add_term(exps_add(e1, e2), field_.mul(c1, c2));
    return r;
  }
  CPoly scaled(const Elem& c) const {
    CPoly r(field_, n_);
    if (field_.is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, field_.mul(k, c));
    return r;
  }

  bool operator==(const CPoly& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  /// Partial derivative with respect to variable i.
  CPoly derivative(int i) const {
    CPoly r(field_, n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exps e2 = e;
      e2[i] -= 1;
      r.add_term(e2, field_.mul(c, field_.from_int(e[i])));
    }
    return r;
  }

 private:
  void check_compatible(const CPoly& o) const {
    if (n_ != o.n_)
      throw Error(ErrorCode::ArityMismatch, "variable count mismatch");
    if (!(field_ == o.field_))
      throw Error(ErrorCode::FieldMismatch, "mixed base fields");
  }

  F field_{};
  int n_ = 0;
  Terms terms_;
};

}  // namespace cforge

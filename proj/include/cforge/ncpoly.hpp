#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "cforge/error.hpp"
#include "cforge/field.hpp"

namespace cforge {

/// Monomial of the free associative algebra: a sequence of generator
/// indices. Order of letters is significant; the empty word is 1.
using Word = std::vector<int>;

/// Deglex on words: shorter first, ties broken by left-to-right index
/// comparison. Compatible with concatenation on both sides.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  }
};

inline Word word_concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Element of the free associative algebra over F on an indexed
/// generator set. Empty term map is zero.
template <class F>
class NCPoly {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<Word, Elem, WordLess>;

  NCPoly() = default;
  explicit NCPoly(F field) : field_(field) {}

  static NCPoly zero(F field) { return NCPoly(field); }
  static NCPoly one(F field) {
    NCPoly p(field);
    p.add_term({}, field.one());
    return p;
  }
  static NCPoly generator(F field, int i) {
    NCPoly p(field);
    p.add_term({i}, field.one());
    return p;
  }
  static NCPoly term(F field, const Word& w, const Elem& c) {
    NCPoly p(field);
    p.add_term(w, c);
    return p;
  }

  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Elem& c) {
    if (field_.is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Elem coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  int degree() const {  // word length; -1 for zero
    int d = -1;
    for (const auto& [w, c] : terms_)
      d = std::max(d, static_cast<int>(w.size()));
    return d;
  }

  /// Largest term in deglex; only valid on nonzero polynomials.
  const std::pair<const Word, Elem>& leading_term() const {
    if (terms_.empty())
      throw Error(ErrorCode::InvalidInput, "leading term of zero");
    return *terms_.rbegin();
  }

  NCPoly operator+(const NCPoly& o) const {
    check_field(o);
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
  }
  NCPoly operator-(const NCPoly& o) const {
    check_field(o);
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, field_.neg(c));
    return r;
  }
  NCPoly operator-() const {
    NCPoly r(field_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, field_.neg(c));
    return r;
  }
  NCPoly operator*(const NCPoly& o) const {
    check_field(o);
    NCPoly r(field_);
    for (const auto& [w1, c1] : terms_)
      for (const auto& [w2, c2] : o.terms_)
        r.add_term(word_concat(w1, w2), field_.mul(c1, c2));
    return r;
  }
  NCPoly scaled(const Elem& c) const {
    NCPoly r(field_);
    if (field_.is_zero(c)) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, field_.mul(k, c));
    return r;
  }

  bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

 private:
  void check_field(const NCPoly& o) const {
    if (!(field_ == o.field_))
      throw Error(ErrorCode::FieldMismatch, "mixed base fields");
  }

  F field_{};
  Terms terms_;
};

}  // namespace cforge

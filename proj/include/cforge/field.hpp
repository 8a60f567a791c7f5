#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "cforge/error.hpp"

namespace cforge {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Field of rational numbers. Elements are exact arbitrary-precision
/// rationals, stored in lowest terms with positive denominator (the
/// cpp_rational invariant).
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem from_int(long long v) const { return Elem(v); }
  Elem from_fraction(const BigInt& num, const BigInt& den) const {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return Elem(num, den);
  }
  std::string to_string(const Elem& a) const { return a.str(); }

  bool operator==(const RationalField&) const = default;
};

/// Prime field F_p with p < 2^61, elements as canonical residues in
/// [0, p). Products fit in unsigned 128-bit arithmetic.
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 2;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0)
      throw Error(ErrorCode::DivisionByZero, "non-invertible element in F_p");
    // extended Euclid on (a, p); p prime so gcd = 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p),
                 new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }
  Elem from_fraction(const BigInt& num, const BigInt& den) const {
    BigInt pn = num % p;
    if (pn < 0) pn += p;
    BigInt pd = den % p;
    if (pd < 0) pd += p;
    Elem d = static_cast<Elem>(pd);
    if (d == 0)
      throw Error(ErrorCode::DivisionByZero,
                  "denominator not invertible in F_" + std::to_string(p));
    return mul(static_cast<Elem>(pn), inv(d));
  }
  std::string to_string(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin, valid for n < 3.3e24
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b %
                                      n);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a :
       {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
        31ull, 37ull}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Runtime descriptor of the base field: the rationals, or F_p for a
/// prime p < 2^61. Used at the I/O boundary to pick the template
/// instantiation.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) {
    if (p >= (1ull << 61) || !is_prime_u64(p))
      throw Error(ErrorCode::BadField,
                  "characteristic must be a prime below 2^61");
    return {Kind::Prime, p};
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace cforge

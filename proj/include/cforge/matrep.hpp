#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cforge/linalg.hpp"
#include "cforge/presentation.hpp"

namespace cforge {

/// Candidate representation a_J -> A_J: one square matrix per
/// generator, in generator order.
template <class F>
struct MatrixRep {
  FormSpec<F> spec;
  std::size_t size = 0;
  std::vector<Matrix<F>> matrices;

  void validate() const {
    spec.validate();
    auto gens = generators(spec);
    if (matrices.size() != gens.size())
      throw Error(ErrorCode::InvalidInput,
                  "matrix count does not match generator count");
    for (const auto& a : matrices)
      if (a.rows() != size || a.cols() != size)
        throw Error(ErrorCode::InvalidInput, "matrices must be square of the declared size");
  }
};

/// Square matrix with commutative-polynomial entries, just enough for
/// expanding M(x)^d exactly.
template <class F>
class PolyMatrix {
 public:
  PolyMatrix(F field, std::size_t n, int vars)
      : field_(field),
        n_(n),
        vars_(vars),
        entries_(n * n, CPoly<F>::zero(field, vars)) {}

  static PolyMatrix identity(F field, std::size_t n, int vars) {
    PolyMatrix m(field, n, vars);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = CPoly<F>::one(field, vars);
    return m;
  }

  std::size_t size() const { return n_; }
  CPoly<F>& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const CPoly<F>& at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  PolyMatrix operator*(const PolyMatrix& o) const {
    PolyMatrix r(field_, n_, vars_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }
  PolyMatrix operator-(const PolyMatrix& o) const {
    PolyMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = r.entries_[i] - o.entries_[i];
    return r;
  }
  PolyMatrix scaled(const CPoly<F>& f) const {
    PolyMatrix r(field_, n_, vars_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = entries_[i] * f;
    return r;
  }

  PolyMatrix pow(int e) const {  // binary powering
    PolyMatrix base = *this;
    PolyMatrix acc = identity(field_, n_, vars_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

 private:
  F field_;
  std::size_t n_;
  int vars_;
  std::vector<CPoly<F>> entries_;
};

/// Failure witness of verify_rep: the first nonzero entry of the
/// polynomial matrix identity, with the offending monomial.
struct VerifyWitness {
  std::size_t row = 0, col = 0;
  Exps monomial;
  std::string value;
};

template <class F>
struct VerifyResult {
  bool valid = false;
  bool routes_agree = true;
  std::optional<VerifyWitness> witness;
};

/// Evaluates a free-algebra polynomial at the matrices.
template <class F>
Matrix<F> evaluate_ncpoly(const NCPoly<F>& p,
                          const std::vector<Matrix<F>>& mats,
                          std::size_t size) {
  const F& field = p.field();
  Matrix<F> acc(field, size, size);
  for (const auto& [w, c] : p.terms()) {
    Matrix<F> prod = Matrix<F>::identity(field, size);
    for (int letter : w) prod = prod * mats[letter];
    acc = acc + prod.scaled(c);
  }
  return acc;
}

/// Checks the defining matrix identity
///   M(x)^d = sum_ell M(x)^{d-ell} f_{ell*m}(x) Id,  M(x) = sum_J A_J x^J
/// and cross-checks by evaluating every extracted relation at the
/// matrices. A precomputed presentation may be supplied to avoid
/// re-extraction.
template <class F>
VerifyResult<F> verify_rep(const MatrixRep<F>& rep,
                           const Presentation<F>* pres = nullptr) {
  rep.validate();
  const F& field = rep.spec.field;
  const int n = rep.spec.n;
  auto gens = generators(rep.spec);

  // route 1: polynomial matrix identity
  PolyMatrix<F> mx(field, rep.size, n);
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::size_t i = 0; i < rep.size; ++i)
      for (std::size_t j = 0; j < rep.size; ++j) {
        const auto& c = rep.matrices[gi].at(i, j);
        if (!field.is_zero(c))
          mx.at(i, j) = mx.at(i, j) +
                        CPoly<F>::monomial(field, gens[gi], c);
      }
  std::vector<PolyMatrix<F>> powers;  // M^0..M^d
  powers.push_back(PolyMatrix<F>::identity(field, rep.size, n));
  for (int e = 1; e <= rep.spec.d; ++e)
    powers.push_back(powers.back() * mx);
  PolyMatrix<F> residue = powers[rep.spec.d];
  for (int ell = 1; ell <= rep.spec.d; ++ell) {
    if (rep.spec.forms[ell - 1].is_zero()) continue;
    residue = residue -
              PolyMatrix<F>::identity(field, rep.size, n)
                  .scaled(rep.spec.forms[ell - 1]) *
                  powers[rep.spec.d - ell];
  }
  VerifyResult<F> result;
  bool route1 = true;
  for (std::size_t i = 0; i < rep.size && route1; ++i)
    for (std::size_t j = 0; j < rep.size && route1; ++j) {
      const CPoly<F>& e = residue.at(i, j);
      if (!e.is_zero()) {
        route1 = false;
        const auto& [mono, val] = *e.terms().begin();
        result.witness =
            VerifyWitness{i, j, mono, field.to_string(val)};
      }
    }

  // route 2: every relation evaluates to the zero matrix
  Presentation<F> local;
  if (!pres) {
    local = clifford_relations(rep.spec);
    pres = &local;
  }
  bool route2 = true;
  for (const auto& [alpha, rel] : pres->relations) {
    if (!evaluate_ncpoly(rel, rep.matrices, rep.size).is_zero()) {
      route2 = false;
      break;
    }
  }

  result.valid = route1;
  result.routes_agree = (route1 == route2);
  return result;
}

/// Every representation has rank a multiple of d; cheap rejection gate.
template <class F>
bool check_rank_divisibility(std::size_t N, const FormSpec<F>& spec) {
  return N % static_cast<std::size_t>(spec.d) == 0;
}

/// Burnside surjectivity test: the representation is a specialization
/// iff the span of all products of the A_J reaches full dimension N^2.
template <class F>
bool is_specialization(const MatrixRep<F>& rep) {
  if (!verify_rep(rep).valid)
    throw Error(ErrorCode::Unverified,
                "is_specialization requires a verified representation");
  return burnside_span_dimension(rep) == rep.size * rep.size;
}

/// Dimension of the unital algebra generated by the matrices, grown
/// word length by word length until the span stabilizes (a stable span
/// is multiplicatively closed) or length N^2 is reached.
template <class F>
std::size_t burnside_span_dimension(const MatrixRep<F>& rep) {
  const F& field = rep.spec.field;
  std::size_t n2 = rep.size * rep.size;
  EchelonSpan<F> span(field, n2);
  std::vector<Matrix<F>> layer{Matrix<F>::identity(field, rep.size)};
  span.insert(layer[0].data());
  for (std::size_t len = 1; len <= n2; ++len) {
    std::vector<Matrix<F>> next;
    std::size_t before = span.dim();
    for (const auto& w : layer)
      for (const auto& a : rep.matrices) {
        Matrix<F> prod = w * a;
        if (span.insert(prod.data())) next.push_back(std::move(prod));
      }
    if (span.dim() == before || span.dim() == n2) break;
    layer = std::move(next);
  }
  return span.dim();
}

enum class ReducedGate { SizeD, DivisibilityOnly };

struct ReducedCompatibility {
  bool compatible = false;
  ReducedGate gate = ReducedGate::SizeD;
};

/// Size-d representations factor through the reduced Clifford algebra
/// tautologically (all d x d matrix identities hold in Mat_d). For
/// larger sizes only the rank-divisibility gate is decidable here, and
/// the result is flagged as such.
template <class F>
ReducedCompatibility reduced_compatible(const MatrixRep<F>& rep) {
  if (!verify_rep(rep).valid)
    throw Error(ErrorCode::Unverified,
                "reduced_compatible requires a verified representation");
  std::size_t d = static_cast<std::size_t>(rep.spec.d);
  if (rep.size == d) return {true, ReducedGate::SizeD};
  return {rep.size % d == 0, ReducedGate::DivisibilityOnly};
}

struct SearchMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;       // random mode
  std::uint64_t trials = 0;     // random mode
};

template <class F>
struct SearchReport {
  FormSpec<F> spec;
  std::size_t size = 0;
  SearchMode mode;
  std::uint64_t cap = 0;
  std::vector<MatrixRep<F>> found;
  bool exhausted = false;
};

namespace detail {

inline unsigned search_thread_count() {
  if (const char* env = std::getenv("CLIFFORD_FORGE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Decodes candidate index -> matrix tuple. Entries are digits base q
/// in generator-major, row-major order; the last entry varies fastest.
inline void decode_candidate(std::uint64_t index, std::uint64_t q,
                             std::vector<std::uint64_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = index % q;
    index /= q;
  }
}

template <class F>
bool passes_relations(const Presentation<F>& pres,
                      const std::vector<Matrix<F>>& mats, std::size_t size) {
  for (const auto& [alpha, rel] : pres.relations)
    if (!evaluate_ncpoly(rel, mats, size).is_zero()) return false;
  return true;
}

}  // namespace detail

/// Exhaustive or seeded-random search for verified representations of
/// the given size. Exhaustive mode requires a prime field and a
/// candidate space of at most `cap` tuples; it enumerates all q^(g*N^2)
/// matrix tuples and every returned representation passes verify_rep.
template <class F>
SearchReport<F> search_reps(const FormSpec<F>& spec, std::size_t N,
                            SearchMode mode,
                            std::uint64_t cap = (1ull << 26)) {
  spec.validate();
  Presentation<F> pres = clifford_relations(spec);
  std::size_t g = pres.gens.size();
  SearchReport<F> report{spec, N, mode, cap, {}, false};
  const F& field = spec.field;

  auto rep_from_digits =
      [&](const std::vector<std::uint64_t>& digits) -> MatrixRep<F> {
    MatrixRep<F> rep{spec, N, {}};
    std::size_t k = 0;
    for (std::size_t gi = 0; gi < g; ++gi) {
      Matrix<F> a(field, N, N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          a.at(i, j) = static_cast<typename F::Elem>(digits[k++]);
      rep.matrices.push_back(std::move(a));
    }
    return rep;
  };

  if (mode.kind == SearchMode::Kind::Exhaustive) {
    if constexpr (!std::is_same_v<F, PrimeField>) {
      throw Error(ErrorCode::InvalidInput,
                  "exhaustive search requires a prime field");
    } else {
      std::uint64_t q = field.p;
      std::size_t entries = g * N * N;
      // candidate count q^entries, overflow-checked against the cap
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < entries; ++i) {
        if (total > cap / q + 1) {
          total = cap + 1;
          break;
        }
        total *= q;
      }
      if (total > cap)
        throw Error(ErrorCode::ResourceBudget,
                    "exhaustive candidate space exceeds the cap");

      unsigned threads = detail::search_thread_count();
      std::vector<std::vector<std::pair<std::uint64_t, MatrixRep<F>>>>
          found_per_thread(threads);
      auto worker = [&](unsigned tid) {
        std::uint64_t begin = total * tid / threads;
        std::uint64_t end = total * (tid + 1) / threads;
        std::vector<std::uint64_t> digits(entries);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          detail::decode_candidate(idx, q, digits);
          MatrixRep<F> rep = rep_from_digits(digits);
          if (detail::passes_relations(pres, rep.matrices, N))
            found_per_thread[tid].emplace_back(idx, std::move(rep));
        }
      };
      std::vector<std::thread> pool;
      for (unsigned tid = 1; tid < threads; ++tid)
        pool.emplace_back(worker, tid);
      worker(0);
      for (auto& th : pool) th.join();
      // deterministic merge in enumeration order
      for (auto& chunk : found_per_thread)
        for (auto& [idx, rep] : chunk)
          report.found.push_back(std::move(rep));
      report.exhausted = true;
    }
  } else {
    if constexpr (!std::is_same_v<F, PrimeField>) {
      throw Error(ErrorCode::InvalidInput,
                  "random search requires a prime field");
    } else {
      std::uint64_t q = field.p;
      std::size_t entries = g * N * N;
      std::mt19937_64 rng(mode.seed);
      std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
      std::vector<std::uint64_t> digits(entries);
      for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
        for (auto& dgt : digits) dgt = dist(rng);
        MatrixRep<F> rep = rep_from_digits(digits);
        if (detail::passes_relations(pres, rep.matrices, N))
          report.found.push_back(std::move(rep));
      }
    }
  }

  // search filters on the relation route; confirm each hit on the
  // matrix-identity route as well
  for (const auto& rep : report.found) {
    VerifyResult<F> v = verify_rep(rep, &pres);
    if (!v.valid || !v.routes_agree)
      throw Error(ErrorCode::InvalidInput,
                  "internal: search hit fails the matrix-identity route");
  }
  return report;
}

}  // namespace cforge

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cforge/mixed.hpp"

#include "oracle.hpp"

using namespace cforge;

namespace {

using MP = MixedPoly<RationalField>;

MP gen_x(const RationalField& q, int n, int gen, int var) {
  Exps e(n, 0);
  e[var] = 1;
  return MP::generator_times_monomial(q, n, gen, e);
}

MixedPoly<PrimeField> random_mixed(std::mt19937_64& rng, const PrimeField& f,
                                   int n, int gens) {
  std::uniform_int_distribution<int> nterms(0, 4), wlen(0, 3), letter(0, gens - 1),
      exp(0, 2);
  std::uniform_int_distribution<std::uint64_t> coeff(0, f.p - 1);
  MixedPoly<PrimeField> p(f, n);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Word w(wlen(rng));
    for (int& l : w) l = letter(rng);
    Exps e(n);
    for (int& x : e) x = exp(rng);
    p.add_term(w, e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("single-term products and noncommutativity") {
  RationalField q;
  MP a1x1 = gen_x(q, 2, 0, 0);
  MP a2x2 = gen_x(q, 2, 1, 1);
  MP p = mixed_mul(a1x1, a2x2);
  MP expected(q, 2);
  expected.add_term({0, 1}, {1, 1}, q.one());
  CHECK(p == expected);

  MP p2 = mixed_mul(a2x2, a1x1);
  MP expected2(q, 2);
  expected2.add_term({1, 0}, {1, 1}, q.one());
  CHECK(p2 == expected2);
  CHECK_FALSE(p == p2);  // a-letters do not commute

  CHECK(mixed_mul(MP::one(q, 2), p) == p);
}

TEST_CASE("squaring a two-term element") {
  RationalField q;
  MP s = gen_x(q, 2, 0, 0) + gen_x(q, 2, 1, 1);
  MP sq = mixed_pow(s, 2);
  MP expected(q, 2);
  expected.add_term({0, 0}, {2, 0}, q.one());
  expected.add_term({0, 1}, {1, 1}, q.one());
  expected.add_term({1, 0}, {1, 1}, q.one());
  expected.add_term({1, 1}, {0, 2}, q.one());
  CHECK(sq == expected);
  CHECK(mixed_pow(s, 0) == MP::one(q, 2));
  CHECK(mixed_pow(s, 1) == s);
}

TEST_CASE("coefficient extraction") {
  RationalField q;
  MP s = gen_x(q, 2, 0, 0) + gen_x(q, 2, 1, 1);
  MP sq = mixed_pow(s, 2);
  NCPoly<RationalField> mixed_coeff = coeff_of_xmonomial(sq, {1, 1});
  NCPoly<RationalField> expected(q);
  expected.add_term({0, 1}, q.one());
  expected.add_term({1, 0}, q.one());
  CHECK(mixed_coeff == expected);

  CHECK(coeff_of_xmonomial(sq, {3, 0}).is_zero());
  CHECK_THROWS_AS(coeff_of_xmonomial(sq, {1, 1, 0}), Error);

  // cube: coefficient of x1^2 x2 is a1^2 a2 + a1 a2 a1 + a2 a1^2
  NCPoly<RationalField> c = coeff_of_xmonomial(mixed_pow(s, 3), {2, 1});
  NCPoly<RationalField> exp3(q);
  exp3.add_term({0, 0, 1}, q.one());
  exp3.add_term({0, 1, 0}, q.one());
  exp3.add_term({1, 0, 0}, q.one());
  CHECK(c == exp3);
}

TEST_CASE("extraction reassembles the polynomial") {
  PrimeField f{5};
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_mixed(rng, f, 2, 2);
    std::set<Exps> xmons;
    for (const auto& [k, c] : p.terms()) xmons.insert(k.second);
    MixedPoly<PrimeField> rebuilt(f, 2);
    for (const Exps& e : xmons) {
      NCPoly<PrimeField> c = coeff_of_xmonomial(p, e);
      for (const auto& [w, cc] : c.terms()) rebuilt.add_term(w, e, cc);
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("mixed ring axioms on random elements over F_5") {
  PrimeField f{5};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_mixed(rng, f, 2, 2);
    auto q = random_mixed(rng, f, 2, 2);
    auto r = random_mixed(rng, f, 2, 2);
    CHECK(mixed_mul(mixed_mul(p, q), r) == mixed_mul(p, mixed_mul(q, r)));
    CHECK(mixed_mul(p, q + r) == mixed_mul(p, q) + mixed_mul(p, r));
  }
}

TEST_CASE("naive expander agrees with mixed_pow") {
  // cross-check the test oracle itself on a small cube
  RationalField q;
  MP s = gen_x(q, 2, 0, 0) + gen_x(q, 2, 1, 1);
  MP cube = mixed_pow(s, 3);

  oracle::NaiveList<RationalField> ns{
      {{0}, {1, 0}, q.one()}, {{1}, {0, 1}, q.one()}};
  auto prod = oracle::naive_mul(q, oracle::naive_mul(q, ns, ns), ns);
  auto grouped = oracle::collect(q, prod);
  std::size_t nterms = 0;
  for (const auto& [xe, words] : grouped) {
    for (const auto& [w, c] : words) {
      CHECK(cube.terms().count({w, xe}) == 1);
      CHECK(cube.terms().at({w, xe}) == c);
      ++nterms;
    }
  }
  CHECK(nterms == cube.terms().size());
}

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "cforge/parse.hpp"
#include "cforge/rewrite.hpp"

using namespace cforge;

namespace {

template <class F>
RewriteSystem<F> complete_roby(const F& field, const std::string& form,
                               int n, int d, int N) {
  auto f = parse_cpoly(form, x_names(n), field);
  return truncated_completion(clifford_relations(roby(f, d)), N);
}

/// Confluence audit: every overlap of rule leads with combined degree
/// within the bound reduces to zero.
template <class F>
bool all_overlaps_resolve(const RewriteSystem<F>& rs) {
  const F& field = rs.pres.spec.field;
  for (const auto& u : rs.rules)
    for (const auto& v : rs.rules) {
      const Word& a = u.lead;
      const Word& b = v.lead;
      for (std::size_t s = 1; s < a.size() && s < b.size(); ++s) {
        if (!std::equal(a.end() - s, a.end(), b.begin())) continue;
        if (a.size() + b.size() - s >
            static_cast<std::size_t>(rs.complete_below))
          continue;
        Word suffix(b.begin() + s, b.end());
        Word prefix(a.begin(), a.end() - s);
        NCPoly<F> left = u.tail * NCPoly<F>::term(field, suffix, field.one());
        NCPoly<F> right =
            NCPoly<F>::term(field, prefix, field.one()) * v.tail;
        if (!rs.reduce(left - right).is_zero()) return false;
      }
      if (b.size() < a.size()) {
        for (std::size_t at = 0; at + b.size() <= a.size(); ++at) {
          if (!std::equal(b.begin(), b.end(), a.begin() + at)) continue;
          Word prefix(a.begin(), a.begin() + at);
          Word suffix(a.begin() + at + b.size(), a.end());
          NCPoly<F> inner = NCPoly<F>::term(field, prefix, field.one()) *
                            v.tail *
                            NCPoly<F>::term(field, suffix, field.one());
          if (!rs.reduce(u.tail - inner).is_zero()) return false;
        }
      }
    }
  return true;
}

}  // namespace

TEST_CASE("single relation a1^2 -> 1") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2", 1, 2, 4);
  REQUIRE(rs.rules.size() == 1);
  CHECK(rs.rules[0].lead == Word{0, 0});
  CHECK(rs.rules[0].tail == NCPoly<RationalField>::one(q));
  CHECK(rs.complete_below == 4);
  CHECK(all_overlaps_resolve(rs));
}

TEST_CASE("anticommutation rules for the diagonal binary quadratic") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2 + x2^2", 2, 2, 6);
  REQUIRE(rs.rules.size() == 3);
  // a1^2 -> 1, a2 a1 -> -a1 a2, a2^2 -> 1
  std::map<Word, NCPoly<RationalField>, WordLess> by_lead;
  for (const auto& r : rs.rules) by_lead.emplace(r.lead, r.tail);
  REQUIRE(by_lead.count({0, 0}) == 1);
  REQUIRE(by_lead.count({1, 1}) == 1);
  REQUIRE(by_lead.count({1, 0}) == 1);
  CHECK(by_lead.at({0, 0}) == NCPoly<RationalField>::one(q));
  CHECK(by_lead.at({1, 1}) == NCPoly<RationalField>::one(q));
  CHECK(by_lead.at({1, 0}) ==
        parse_ncpoly("-a1*a2", rs.pres.gens, q));
  CHECK(all_overlaps_resolve(rs));
}

TEST_CASE("empty ideal gives the free algebra truncation") {
  RationalField q;
  FormSpec<RationalField> spec{q, 2, 1, 2,
                               {CPoly<RationalField>::zero(q, 2),
                                CPoly<RationalField>::zero(q, 2)}};
  auto pres = clifford_relations(spec);
  CHECK(pres.relations.size() == 3);  // coefficients of S^2 itself
  // an empty relation list is formally allowed input to completion
  pres.relations.clear();
  auto rs = truncated_completion(pres, 5);
  CHECK(rs.rules.empty());
  auto fd = filtered_dimension(rs);
  // free algebra on 2 letters: 1, 3, 7, 15, 31, 63
  std::vector<std::size_t> expected{1, 3, 7, 15, 31, 63};
  CHECK(fd.dims == expected);
}

TEST_CASE("normal forms") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2 + x2^2", 2, 2, 6);
  auto gens = rs.pres.gens;
  CHECK(normal_form(rs, parse_ncpoly("a2*a1", gens, q)) ==
        parse_ncpoly("-a1*a2", gens, q));
  auto already = parse_ncpoly("a1*a2 + 3", gens, q);
  CHECK(normal_form(rs, already) == already);
  for (const auto& [alpha, rel] : rs.pres.relations)
    CHECK(normal_form(rs, rel).is_zero());

  auto too_big = parse_ncpoly("a1^7", gens, q);
  CHECK_THROWS_AS(normal_form(rs, too_big), Error);
}

TEST_CASE("congruent inputs share a normal form") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2 + x2^2", 2, 2, 6);
  auto gens = rs.pres.gens;
  auto p = parse_ncpoly("a1*a2*a1*a2", gens, q);
  // rewrite by hand: a1 (a2 a1) a2 = -a1 a1 a2 a2 = -1
  CHECK(normal_form(rs, p) == -NCPoly<RationalField>::one(q));
  // add a random ideal element; the normal form must not move
  auto noise = parse_ncpoly("a2", gens, q) * rs.pres.relations[1].second *
               parse_ncpoly("a1", gens, q);
  CHECK(normal_form(rs, p + noise) == normal_form(rs, p));
}

TEST_CASE("ideal membership: products around relations reduce to zero") {
  RationalField q;
  auto rs = complete_roby(q, "x1^3 + x2^3", 2, 3, 7);
  auto gens = rs.pres.gens;
  std::vector<NCPoly<RationalField>> frames{
      NCPoly<RationalField>::one(q), parse_ncpoly("a1", gens, q),
      parse_ncpoly("a2*a1", gens, q)};
  for (const auto& [alpha, rel] : rs.pres.relations)
    for (const auto& u : frames)
      for (const auto& v : frames) {
        auto p = u * rel * v;
        if (p.degree() <= rs.complete_below)
          CHECK(normal_form(rs, p).is_zero());
      }
}

TEST_CASE("clifford dimensions for diagonal quadratics are 2^n") {
  for (int n = 1; n <= 3; ++n) {
    std::string form = "x1^2";
    for (int i = 2; i <= n; ++i)
      form += " + x" + std::to_string(i) + "^2";
    RationalField q;
    auto rs = complete_roby(q, form, n, 2, n + 3);
    auto fd = filtered_dimension(rs);
    CHECK(fd.dims.back() == (1u << n));
    CHECK(fd.stable[n] == true);
    CHECK(all_overlaps_resolve(rs));

    PrimeField f5{5};
    auto rs5 = complete_roby(f5, form, n, 2, n + 3);
    CHECK(filtered_dimension(rs5).dims.back() == (1u << n));
  }
}

TEST_CASE("binary cubic algebra keeps growing") {
  RationalField q;
  auto rs = complete_roby(q, "x1^3 + x2^3", 2, 3, 8);
  auto fd = filtered_dimension(rs);
  for (int t = 1; t <= 8; ++t) CHECK(fd.dims[t] > fd.dims[t - 1]);
  CHECK(all_overlaps_resolve(rs));
}

TEST_CASE("dims are nondecreasing and dims[0] is 1") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2 + x2^2", 2, 2, 6);
  auto fd = filtered_dimension(rs);
  CHECK(fd.dims[0] == 1);
  for (std::size_t t = 1; t < fd.dims.size(); ++t)
    CHECK(fd.dims[t] >= fd.dims[t - 1]);
}

TEST_CASE("center of the rank-4 clifford algebra over Q is trivial") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2 + x2^2", 2, 2, 6);
  auto basis = center_basis(rs, 2);
  // a1 a2 anticommutes with both generators over Q, so only scalars
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == NCPoly<RationalField>::one(q));
}

TEST_CASE("center elements commute with the generators") {
  RationalField q;
  auto rs = complete_roby(q, "x1^3 + x2^3", 2, 3, 7);
  auto basis = center_basis(rs, 6);
  REQUIRE(!basis.empty());
  CHECK(basis[0] == NCPoly<RationalField>::one(q));
  for (const auto& z : basis)
    for (std::size_t gi = 0; gi < rs.generator_count(); ++gi) {
      auto a = NCPoly<RationalField>::generator(q, static_cast<int>(gi));
      CHECK(normal_form(rs, z * a - a * z).is_zero());
    }
}

TEST_CASE("center bound above the completion degree is refused") {
  RationalField q;
  auto rs = complete_roby(q, "x1^2", 1, 2, 4);
  CHECK_THROWS_AS(center_basis(rs, 4), Error);
  auto basis = center_basis(rs, 0);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == NCPoly<RationalField>::one(q));
}

TEST_CASE("rule-count cap is reported, not silently truncated") {
  RationalField q;
  auto f = parse_cpoly("x1^3 + x2^3", x_names(2), q);
  auto pres = clifford_relations(roby(f, 3));
  CHECK_THROWS_AS(truncated_completion(pres, 8, 3), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include "cforge/json_io.hpp"

using namespace cforge;

TEST_CASE("field tags") {
  CHECK(field_to_json(FieldSpec::rationals()) == Json("Q"));
  CHECK(field_to_json(FieldSpec::prime(7)) == Json{{"Fp", 7}});
  CHECK(field_from_json(Json("Q")).kind == FieldSpec::Kind::Rationals);
  auto fp = field_from_json(Json{{"Fp", 13}});
  CHECK(fp.kind == FieldSpec::Kind::Prime);
  CHECK(fp.p == 13);
  CHECK_THROWS_AS(field_from_json(Json("R")), Error);
  CHECK_THROWS_AS(field_from_json(Json{{"Fp", 6}}), Error);
}

TEST_CASE("dispatch_field reaches the right instantiation") {
  auto name = [](const auto& field) -> std::string {
    if constexpr (std::is_same_v<std::decay_t<decltype(field)>,
                                 RationalField>)
      return "Q";
    else
      return "F" + std::to_string(field.p);
  };
  CHECK(dispatch_field(FieldSpec::rationals(), name) == "Q");
  CHECK(dispatch_field(FieldSpec::prime(5), name) == "F5");
}

TEST_CASE("scalar parsing") {
  RationalField q;
  CHECK(parse_scalar("-3/4", q) == Rational(-3, 4));
  CHECK(parse_scalar("17", q) == 17);
  CHECK_THROWS_AS(parse_scalar("3x", q), Error);
  PrimeField f7{7};
  CHECK(parse_scalar("-1", f7) == 6);
  CHECK(parse_scalar("1/2", f7) == 4);
}

TEST_CASE("form spec round trip") {
  RationalField q;
  auto names = x_names(2);
  FormSpec<RationalField> spec{q, 2, 1, 3, {}};
  spec.forms = {parse_cpoly("x1", names, q), CPoly<RationalField>::zero(q, 2),
                parse_cpoly("x1^3 + 1/2*x2^3", names, q)};
  Json j = formspec_to_json(spec);
  CHECK(j["forms"].size() == 2);  // the zero entry is omitted
  auto back = formspec_from_json(j, q);
  CHECK(back.n == 2);
  CHECK(back.d == 3);
  for (int ell = 0; ell < 3; ++ell) CHECK(back.forms[ell] == spec.forms[ell]);
  CHECK(formspec_field(j).kind == FieldSpec::Kind::Rationals);
}

TEST_CASE("form spec error paths") {
  RationalField q;
  CHECK_THROWS_AS(formspec_from_json(Json::array(), q), Error);
  CHECK_THROWS_AS(formspec_from_json(Json{{"n", 2}, {"m", 1}}, q), Error);
  CHECK_THROWS_AS(
      formspec_from_json(Json{{"n", 0}, {"m", 1}, {"d", 2}}, q), Error);
  // wrong homogeneity degree
  Json bad{{"n", 2},
           {"m", 1},
           {"d", 2},
           {"forms", Json::array({Json{{"ell", 2}, {"poly", "x1"}}})}};
  CHECK_THROWS_AS(formspec_from_json(bad, q), Error);
  // out-of-range slot
  Json oob{{"n", 2},
           {"m", 1},
           {"d", 2},
           {"forms", Json::array({Json{{"ell", 3}, {"poly", "x1^3"}}})}};
  CHECK_THROWS_AS(formspec_from_json(oob, q), Error);
}

TEST_CASE("matrix and representation round trip") {
  PrimeField f7{7};
  auto spec = roby(parse_cpoly("x1^3 + x2^3", x_names(2), f7), 3);
  Matrix<PrimeField> d(f7, 3, 3), p(f7, 3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 4;
  p.at(1, 0) = 1;
  p.at(2, 1) = 1;
  p.at(0, 2) = 1;
  MatrixRep<PrimeField> rep{spec, 3, {d, p}};
  Json j = rep_to_json(rep);
  auto back = rep_from_json(j, spec);
  CHECK(back.size == 3);
  CHECK(back.matrices == rep.matrices);

  CHECK_THROWS_AS(rep_from_json(Json{{"size", 3}}, spec), Error);
  Json wrong = j;
  wrong["matrices"].erase(1);  // generator count mismatch
  CHECK_THROWS_AS(rep_from_json(wrong, spec), Error);
}

TEST_CASE("rational matrix entries survive the string form") {
  RationalField q;
  Matrix<RationalField> m(q, 2, 2);
  m.at(0, 0) = Rational(-3, 7);
  m.at(1, 0) = Rational(22, 5);
  auto back = matrix_from_json(matrix_to_json(m), q);
  CHECK(back == m);
}

TEST_CASE("module round trip") {
  PrimeField f7{7};
  auto spec = roby(parse_cpoly("x1^3 + x2^3", x_names(2), f7), 3);
  Matrix<PrimeField> d(f7, 3, 3), p(f7, 3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 4;
  p.at(1, 0) = 1;
  p.at(2, 1) = 1;
  p.at(0, 2) = 1;
  MatrixRep<PrimeField> rep{spec, 3, {d, p}};
  auto mod = module_from_rep(rep);
  Json j = module_to_json(mod);
  auto back = module_from_json(j, f7);
  CHECK(back.shifts == mod.shifts);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t jj = 0; jj < 3; ++jj)
      CHECK(back.action.at(i, jj) == mod.action.at(i, jj));

  Json bad = j;
  bad["action"][0][0] = "x1^2";  // breaks homogeneity
  CHECK_THROWS_AS(module_from_json(bad, f7), Error);
}

TEST_CASE("serialized output is key-sorted and deterministic") {
  RationalField q;
  auto spec = roby(parse_cpoly("x1^2 + x2^2", x_names(2), q), 2);
  Json a = formspec_to_json(spec);
  Json b = formspec_to_json(spec);
  CHECK(a.dump() == b.dump());
  CHECK(a.dump().find("\"d\"") < a.dump().find("\"field\""));
}

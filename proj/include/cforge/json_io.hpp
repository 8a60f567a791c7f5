#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "cforge/parse.hpp"
#include "cforge/presentation.hpp"
#include "cforge/rewrite.hpp"
#include "cforge/ulrich.hpp"

namespace cforge {

using Json = nlohmann::json;

inline Json field_to_json(const FieldSpec& fs) {
  if (fs.kind == FieldSpec::Kind::Rationals) return Json("Q");
  return Json{{"Fp", fs.p}};
}

inline FieldSpec field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q")
    return FieldSpec::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer() &&
      j["Fp"].get<std::int64_t>() > 0)
    return FieldSpec::prime(j["Fp"].get<std::uint64_t>());
  throw Error(ErrorCode::BadField, "field must be \"Q\" or {\"Fp\": p}");
}

template <class F>
FieldSpec field_spec_of(const F& field) {
  if constexpr (std::is_same_v<F, RationalField>)
    return FieldSpec::rationals();
  else
    return FieldSpec::prime(field.p);
}

/// Calls fn with the concrete field object for a runtime FieldSpec.
template <class Fn>
decltype(auto) dispatch_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldSpec::Kind::Rationals)
    return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{fs.p});
}

/// Parses a bare scalar in the field's print format: optional '-',
/// integer, optional '/positive-integer'.
template <class F>
typename F::Elem parse_scalar(const std::string& text, const F& field) {
  detail::Tokenizer tok(text);
  bool neg = tok.accept('-');
  typename F::Elem v = detail::parse_coefficient(tok, field);
  if (!tok.at_end())
    throw Error(ErrorCode::Syntax,
                "unexpected input in scalar at position " +
                    std::to_string(tok.pos()),
                tok.pos());
  return neg ? field.neg(v) : v;
}

// ---- FormSpec ----
// {"field": "Q"|{"Fp":p}, "n": int, "m": int, "d": int,
//  "forms": [{"ell": int, "poly": string}]}; omitted ell entries are zero.

template <class F>
Json formspec_to_json(const FormSpec<F>& spec) {
  Json j;
  j["field"] = field_to_json(field_spec_of(spec.field));
  j["n"] = spec.n;
  j["m"] = spec.m;
  j["d"] = spec.d;
  Json forms = Json::array();
  for (int ell = 1; ell <= spec.d; ++ell)
    if (!spec.forms[ell - 1].is_zero())
      forms.push_back(Json{{"ell", ell},
                           {"poly", print_cpoly(spec.forms[ell - 1])}});
  j["forms"] = forms;
  return j;
}

template <class F>
FormSpec<F> formspec_from_json(const Json& j, const F& field) {
  if (!j.is_object())
    throw Error(ErrorCode::InvalidInput, "form spec must be a JSON object");
  for (const char* key : {"n", "m", "d"})
    if (!j.contains(key) || !j[key].is_number_integer())
      throw Error(ErrorCode::InvalidInput,
                  std::string("form spec needs integer field \"") + key +
                      "\"");
  FormSpec<F> spec{field, j["n"].get<int>(), j["m"].get<int>(),
                   j["d"].get<int>(), {}};
  if (spec.n < 1 || spec.m < 1 || spec.d < 1)
    throw Error(ErrorCode::InvalidInput, "n, m, d must be positive");
  spec.forms.assign(spec.d, CPoly<F>::zero(field, spec.n));
  if (j.contains("forms")) {
    if (!j["forms"].is_array())
      throw Error(ErrorCode::InvalidInput, "\"forms\" must be an array");
    for (const auto& entry : j["forms"]) {
      if (!entry.is_object() || !entry.contains("ell") ||
          !entry.contains("poly"))
        throw Error(ErrorCode::InvalidInput,
                    "form entries need \"ell\" and \"poly\"");
      int ell = entry["ell"].get<int>();
      if (ell < 1 || ell > spec.d)
        throw Error(ErrorCode::InvalidInput,
                    "form entry index out of range");
      spec.forms[ell - 1] = parse_cpoly(
          entry["poly"].get<std::string>(), x_names(spec.n), field);
    }
  }
  spec.validate();
  return spec;
}

inline FieldSpec formspec_field(const Json& j) {
  if (!j.is_object() || !j.contains("field"))
    throw Error(ErrorCode::InvalidInput, "form spec needs a \"field\" entry");
  return field_from_json(j["field"]);
}

// ---- NCPoly / relations ----

template <class F>
Json ncpoly_to_json(const NCPoly<F>& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(
        Json{{"word", it->first}, {"coeff", p.field().to_string(it->second)}});
  return terms;
}

template <class F>
Json relations_to_json(const Presentation<F>& pres) {
  Json out = Json::array();
  for (const auto& [alpha, rel] : pres.relations)
    out.push_back(Json{{"monomial", alpha}, {"relation", ncpoly_to_json(rel)}});
  return out;
}

template <class F>
Json rules_to_json(const RewriteSystem<F>& rs) {
  Json out = Json::array();
  for (const auto& rule : rs.rules)
    out.push_back(Json{{"lead", rule.lead}, {"tail", ncpoly_to_json(rule.tail)}});
  return out;
}

// ---- matrices and representations ----
// Matrix JSON: {"size": N, "entries": [[scalar string, ...], ...]}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.field().to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"size", m.rows()}, {"entries", entries}};
}

template <class F>
Matrix<F> matrix_from_json(const Json& j, const F& field) {
  if (!j.is_object() || !j.contains("size") || !j.contains("entries"))
    throw Error(ErrorCode::InvalidInput,
                "matrix needs \"size\" and \"entries\"");
  std::size_t n = j["size"].get<std::size_t>();
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != n)
    throw Error(ErrorCode::InvalidInput, "matrix entry rows mismatch size");
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!entries[i].is_array() || entries[i].size() != n)
      throw Error(ErrorCode::InvalidInput, "matrix entry row length mismatch");
    for (std::size_t jj = 0; jj < n; ++jj)
      m.at(i, jj) = parse_scalar(entries[i][jj].get<std::string>(), field);
  }
  return m;
}

template <class F>
Json rep_to_json(const MatrixRep<F>& rep) {
  Json mats = Json::array();
  for (const auto& a : rep.matrices) mats.push_back(matrix_to_json(a));
  return Json{{"size", rep.size}, {"matrices", mats}};
}

template <class F>
MatrixRep<F> rep_from_json(const Json& j, const FormSpec<F>& spec) {
  if (!j.is_object() || !j.contains("size") || !j.contains("matrices"))
    throw Error(ErrorCode::InvalidInput,
                "representation needs \"size\" and \"matrices\"");
  MatrixRep<F> rep{spec, j["size"].get<std::size_t>(), {}};
  for (const auto& mj : j["matrices"])
    rep.matrices.push_back(matrix_from_json(mj, spec.field));
  rep.validate();
  return rep;
}

template <class F>
Json search_report_to_json(const SearchReport<F>& report) {
  Json j;
  j["mode"] = report.mode.kind == SearchMode::Kind::Exhaustive ? "exhaustive"
                                                               : "random";
  if (report.mode.kind == SearchMode::Kind::Random) {
    j["seed"] = report.mode.seed;
    j["trials"] = report.mode.trials;
  }
  j["cap"] = report.cap;
  j["size"] = report.size;
  j["exhausted"] = report.exhausted;
  Json found = Json::array();
  for (const auto& rep : report.found) found.push_back(rep_to_json(rep));
  j["found"] = found;
  return j;
}

// ---- graded modules ----
// {"spec": FormSpec, "shifts": [ints], "action": [[poly string, ...], ...]}

template <class F>
Json module_to_json(const GradedModule<F>& mod) {
  Json j;
  j["spec"] = formspec_to_json(mod.spec);
  j["shifts"] = mod.shifts;
  Json action = Json::array();
  std::size_t r = mod.shifts.size();
  for (std::size_t i = 0; i < r; ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < r; ++jj)
      row.push_back(print_cpoly(mod.action.at(i, jj)));
    action.push_back(std::move(row));
  }
  j["action"] = action;
  return j;
}

template <class F>
GradedModule<F> module_from_json(const Json& j, const F& field) {
  if (!j.is_object() || !j.contains("spec") || !j.contains("shifts") ||
      !j.contains("action"))
    throw Error(ErrorCode::InvalidInput,
                "module needs \"spec\", \"shifts\" and \"action\"");
  FormSpec<F> spec = formspec_from_json(j["spec"], field);
  std::vector<int> shifts = j["shifts"].get<std::vector<int>>();
  std::size_t r = shifts.size();
  const Json& action = j["action"];
  if (!action.is_array() || action.size() != r)
    throw Error(ErrorCode::InvalidInput, "action row count mismatch");
  PolyMatrix<F> m(field, r, spec.n);
  for (std::size_t i = 0; i < r; ++i) {
    if (!action[i].is_array() || action[i].size() != r)
      throw Error(ErrorCode::InvalidInput, "action row length mismatch");
    for (std::size_t jj = 0; jj < r; ++jj)
      m.at(i, jj) = parse_cpoly(action[i][jj].get<std::string>(),
                                x_names(spec.n), field);
  }
  GradedModule<F> mod{std::move(spec), std::move(shifts), std::move(m)};
  mod.validate();
  return mod;
}

// ---- reports ----

inline Json curve_to_json(const CurveData& c) {
  return Json{{"degree", c.degree},
              {"genus", c.genus},
              {"source", c.source == CurveData::Source::Formula
                             ? "formula"
                             : "user-supplied"}};
}

inline Json ulrich_report_to_json(const UlrichReport& r) {
  return Json{{"splitting", r.splitting.parts},
              {"is_ulrich", r.is_ulrich},
              {"slope", r.slope.str()},
              {"genus", r.genus},
              {"h0_of_minus_one", r.h0_of_minus_one}};
}

inline Json filtered_dims_to_json(const FilteredDims& fd, int complete_below) {
  return Json{{"dims", fd.dims},
              {"stable", fd.stable},
              {"complete_below", complete_below}};
}

}  // namespace cforge

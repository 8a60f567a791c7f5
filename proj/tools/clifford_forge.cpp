// Command-line front door: reads JSON form/rep/module files, dispatches
// into the library, and emits deterministic JSON on stdout (or --out).
// Exit codes: 0 success, 1 domain error (structured JSON), 2 usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cforge/cforge.hpp"

namespace {

using cforge::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw cforge::Error(cforge::ErrorCode::InvalidInput,
                        "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json(const std::string& path) {
  Json j = Json::parse(read_file(path), nullptr, false);
  if (j.is_discarded())
    throw cforge::Error(cforge::ErrorCode::InvalidInput,
                        "malformed JSON in " + path);
  return j;
}

struct Options {
  std::string form_path;
  std::string rep_path;
  std::string module_path;
  std::string out_path;
  std::string poly_text;
  std::string mode = "exhaustive";
  int degree = 0;
  int max_degree = -1;
  std::size_t size = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 0;
  std::uint64_t cap = 1ull << 26;
  std::optional<int> genus_override;
  bool with_rules = false;
  bool pretty = false;
};

template <class F>
Json run_relations(const Json& form_json, const F& field, const Options&) {
  auto spec = cforge::formspec_from_json(form_json, field);
  return cforge::relations_to_json(cforge::clifford_relations(spec));
}

template <class F>
Json run_basis(const Json& form_json, const F& field, const Options& opt) {
  auto spec = cforge::formspec_from_json(form_json, field);
  auto rs = cforge::truncated_completion(cforge::clifford_relations(spec),
                                         opt.degree);
  auto fd = cforge::filtered_dimension(rs);
  Json j = cforge::filtered_dims_to_json(fd, rs.complete_below);
  if (opt.with_rules) j["rules"] = cforge::rules_to_json(rs);
  return j;
}

template <class F>
Json run_nf(const Json& form_json, const F& field, const Options& opt) {
  auto spec = cforge::formspec_from_json(form_json, field);
  auto pres = cforge::clifford_relations(spec);
  auto rs = cforge::truncated_completion(pres, opt.degree);
  auto p = cforge::parse_ncpoly(opt.poly_text, pres.gens, field);
  auto nf = cforge::normal_form(rs, p);
  return Json{{"normal_form", cforge::ncpoly_to_json(nf)},
              {"text", cforge::print_ncpoly(nf, pres.gens)}};
}

template <class F>
Json run_center(const Json& form_json, const F& field, const Options& opt) {
  auto spec = cforge::formspec_from_json(form_json, field);
  auto pres = cforge::clifford_relations(spec);
  auto rs = cforge::truncated_completion(pres, opt.degree);
  int t = opt.max_degree >= 0 ? opt.max_degree : rs.complete_below - 1;
  auto basis = cforge::center_basis(rs, t);
  Json elems = Json::array();
  Json texts = Json::array();
  for (const auto& z : basis) {
    elems.push_back(cforge::ncpoly_to_json(z));
    texts.push_back(cforge::print_ncpoly(z, pres.gens));
  }
  return Json{{"basis", elems}, {"texts", texts}, {"degree_bound", t}};
}

template <class F>
Json run_verify(const Json& form_json, const F& field, const Options& opt) {
  auto spec = cforge::formspec_from_json(form_json, field);
  auto rep = cforge::rep_from_json(load_json(opt.rep_path), spec);
  auto v = cforge::verify_rep(rep);
  Json j;
  j["valid"] = v.valid;
  j["specialization"] = v.valid ? cforge::is_specialization(rep) : false;
  if (v.witness) {
    j["witness"] = Json{{"row", v.witness->row},
                        {"col", v.witness->col},
                        {"monomial", v.witness->monomial},
                        {"value", v.witness->value}};
  }
  return j;
}

template <class F>
Json run_search(const Json& form_json, const F& field, const Options& opt) {
  auto spec = cforge::formspec_from_json(form_json, field);
  cforge::SearchMode mode;
  if (opt.mode == "exhaustive") {
    mode.kind = cforge::SearchMode::Kind::Exhaustive;
  } else if (opt.mode == "random") {
    mode.kind = cforge::SearchMode::Kind::Random;
    mode.seed = *opt.seed;
    mode.trials = opt.trials;
  } else {
    throw CLI::ValidationError("--mode must be exhaustive or random");
  }
  auto report = cforge::search_reps(spec, opt.size, mode, opt.cap);
  return cforge::search_report_to_json(report);
}

template <class F>
Json run_ulrich(const Json& module_json, const F& field, const Options& opt) {
  auto mod = cforge::module_from_json(module_json, field);
  auto curve = cforge::genus(mod.spec, opt.genus_override);
  return cforge::ulrich_report_to_json(cforge::ulrich_check(mod, curve));
}

template <class F>
Json run_splitting(const Json& module_json, const F& field, const Options&) {
  auto mod = cforge::module_from_json(module_json, field);
  return Json{{"splitting", cforge::splitting_type(mod).parts}};
}

template <class F>
Json run_genus(const Json& form_json, const F& field, const Options& opt) {
  auto spec = cforge::formspec_from_json(form_json, field);
  return cforge::curve_to_json(cforge::genus(spec, opt.genus_override));
}

template <class F>
Json run_hypersurface(const Json& form_json, const F& field, const Options&) {
  auto spec = cforge::formspec_from_json(form_json, field);
  auto hs = cforge::hypersurface_equation(spec);
  std::vector<std::string> names{"x0"};
  for (int i = 1; i <= spec.n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<int> weights{spec.m};
  weights.insert(weights.end(), spec.n, 1);
  return Json{{"equation", cforge::print_cpoly(hs.equation, names)},
              {"weights", weights}};
}

void emit(const Json& j, const Options& opt) {
  std::string text = opt.pretty ? j.dump(2) : j.dump();
  text += "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
      throw cforge::Error(cforge::ErrorCode::InvalidInput,
                          "cannot write file: " + opt.out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clifford algebras of forms: presentations, "
               "representations and Ulrich modules"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--pretty", opt.pretty, "indent JSON output");

  auto add_form = [&](CLI::App* cmd) {
    cmd->add_option("--form", opt.form_path, "form spec JSON file")
        ->required();
  };
  auto add_module = [&](CLI::App* cmd) {
    cmd->add_option("--module", opt.module_path, "graded module JSON file")
        ->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
  };

  CLI::App* relations = app.add_subcommand("relations",
                                           "extract the defining relations");
  add_form(relations);
  add_out(relations);

  CLI::App* basis = app.add_subcommand(
      "basis", "filtered dimensions of the truncated quotient");
  add_form(basis);
  add_out(basis);
  basis->add_option("--degree", opt.degree, "truncation degree")->required();
  basis->add_flag("--with-rules", opt.with_rules,
                  "include the completed rule set");

  CLI::App* nf = app.add_subcommand("nf", "normal form of a free-algebra "
                                          "polynomial");
  add_form(nf);
  add_out(nf);
  nf->add_option("--degree", opt.degree, "truncation degree")->required();
  nf->add_option("--poly", opt.poly_text, "polynomial text")->required();

  CLI::App* center = app.add_subcommand("center",
                                        "degree-bounded center basis");
  add_form(center);
  add_out(center);
  center->add_option("--degree", opt.degree, "truncation degree")->required();
  center->add_option("--max-degree", opt.max_degree,
                     "center degree bound (default: degree - 1)");

  CLI::App* verify = app.add_subcommand("verify-rep",
                                        "verify a matrix representation");
  add_form(verify);
  add_out(verify);
  verify->add_option("--rep", opt.rep_path, "representation JSON file")
      ->required();

  CLI::App* search = app.add_subcommand("search-rep",
                                        "search for representations");
  add_form(search);
  add_out(search);
  search->add_option("--size", opt.size, "matrix size")->required();
  search->add_option("--mode", opt.mode, "exhaustive | random");
  search->add_option("--seed", opt.seed, "RNG seed (random mode)");
  search->add_option("--trials", opt.trials, "trial count (random mode)");
  search->add_option("--cap", opt.cap, "exhaustive candidate cap");

  CLI::App* ulrich = app.add_subcommand("ulrich-check",
                                        "Ulrich criterion for a module");
  add_module(ulrich);
  add_out(ulrich);
  ulrich->add_option("--genus", opt.genus_override, "user-supplied genus");

  CLI::App* splitting = app.add_subcommand("splitting",
                                           "splitting type of a module");
  add_module(splitting);
  add_out(splitting);

  CLI::App* genus_cmd = app.add_subcommand("genus", "genus of the curve");
  add_form(genus_cmd);
  add_out(genus_cmd);
  genus_cmd->add_option("--genus", opt.genus_override,
                        "user-supplied genus (echoed when the formula "
                        "does not apply)");

  CLI::App* hyper = app.add_subcommand("hypersurface",
                                       "weighted hypersurface equation");
  add_form(hyper);
  add_out(hyper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (search->parsed() && opt.mode == "random" && !opt.seed) {
      std::cerr << "search-rep: random mode requires an explicit --seed\n";
      return 2;
    }

    Json input;
    if (!opt.module_path.empty())
      input = load_json(opt.module_path);
    else
      input = load_json(opt.form_path);
    cforge::FieldSpec fs = opt.module_path.empty()
                               ? cforge::formspec_field(input)
                               : cforge::formspec_field(input.at("spec"));

    Json result = cforge::dispatch_field(fs, [&](auto field) -> Json {
      if (relations->parsed()) return run_relations(input, field, opt);
      if (basis->parsed()) return run_basis(input, field, opt);
      if (nf->parsed()) return run_nf(input, field, opt);
      if (center->parsed()) return run_center(input, field, opt);
      if (verify->parsed()) return run_verify(input, field, opt);
      if (search->parsed()) return run_search(input, field, opt);
      if (ulrich->parsed()) return run_ulrich(input, field, opt);
      if (splitting->parsed()) return run_splitting(input, field, opt);
      if (genus_cmd->parsed()) return run_genus(input, field, opt);
      return run_hypersurface(input, field, opt);
    });
    emit(result, opt);
    return 0;
  } catch (const cforge::Error& e) {
    Json err{{"code", cforge::error_code_name(e.code())},
             {"message", e.what()}};
    if (e.position()) err["position"] = *e.position();
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    Json err{{"code", "invalid-input"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"code", "internal"}, {"message", e.what()}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morrey/io.hpp"
#include "morrey/reproduce.hpp"
#include "morrey/search.hpp"

namespace {

using morrey::ordered_json;

enum class Format { json, csv, human };

struct GlobalOpts {
  std::string format = "human";
  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::human;
  }
};

int exit_code_for(const morrey::Error& e) {
  switch (e.code()) {
    case morrey::errc::divergent:
    case morrey::errc::unbounded:
      return 3;
    default:
      return 2;
  }
}

void emit(const GlobalOpts& g, const ordered_json& j, const std::string& human) {
  switch (g.fmt()) {
    case Format::json: std::cout << j.dump(2) << "\n"; break;
    case Format::csv: std::cout << morrey::csv_from_records({j}); break;
    case Format::human: std::cout << human; break;
  }
}

void emit_rows(const GlobalOpts& g, const ordered_json& j, const std::vector<ordered_json>& rows,
               const std::string& human) {
  switch (g.fmt()) {
    case Format::json: std::cout << j.dump(2) << "\n"; break;
    case Format::csv: std::cout << morrey::csv_from_records(rows); break;
    case Format::human: std::cout << human; break;
  }
}

std::vector<ordered_json> report_rows(const morrey::ReproductionReport& rep) {
  std::vector<ordered_json> rows;
  for (const auto& c : rep.checks) {
    ordered_json row;
    row["theorem"] = rep.theorem;
    for (const auto& [k, v] : rep.params.items()) row[k] = v;
    row["name"] = c.name;
    row["expected"] = c.expected;
    row["actual"] = c.actual;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    row["informational"] = c.informational;
    if (!c.note.empty()) row["note"] = c.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

morrey::Functional parse_functional(const std::string& s) {
  if (s == "nj") return morrey::Functional::nj;
  if (s == "james") return morrey::Functional::james;
  if (s == "dw") return morrey::Functional::dw;
  morrey::raise(morrey::errc::invalid_params, "unknown functional " + s);
}

std::vector<morrey::Rational> parse_r_list(const std::string& csv) {
  std::vector<morrey::Rational> out;
  std::string cur;
  std::istringstream is(csv);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) continue;
    morrey::Rational r = morrey::Rational::from_string(cur);
    out.push_back(std::move(r));
  }
  if (out.empty()) morrey::raise(morrey::errc::bad_range, "empty r list");
  return out;
}

ordered_json constant_report_json(const morrey::ConstantReport& rep) {
  ordered_json j;
  j["schema"] = "1";
  j["functional"] = morrey::functional_name(rep.functional);
  j["value"] = rep.value;
  j["tolerance"] = rep.tolerance;
  j["pair"] = ordered_json::array({morrey::seq_to_json(rep.x), morrey::seq_to_json(rep.y)});
  ordered_json trace;
  for (const auto& [k, v] : rep.trace) trace[k] = v;
  j["trace"] = trace;
  j["seed"] = rep.seed;
  j["budget"] = rep.budget;
  return j;
}

struct NormDiscreteArgs {
  double p = 1, q = 1;
  int d = 1;
  std::string input;
  bool exact = false;
};

struct NormContinuousArgs {
  double p = 1, q = 1;
  std::string mode = "global1d";
  std::string fn_path;
  double tol = 1e-8;
};

int run_norm_discrete(const GlobalOpts& g, const NormDiscreteArgs& a) {
  morrey::MorreyParams params(a.p, a.q, a.d);
  ordered_json in = morrey::load_json_file(a.input);
  ordered_json out;
  out["schema"] = "1";
  out["command"] = "norm";
  out["space"] = "discrete";
  out["p"] = a.p;
  out["q"] = a.q;
  out["d"] = a.d;
  out["exact"] = a.exact;

  morrey::DiscreteNormResult res;
  if (a.exact) {
    auto x = morrey::seq_from_json_exact(in);
    if (x.d != a.d) morrey::raise(morrey::errc::dimension_mismatch, "--d disagrees with input file");
    res = morrey::discrete_norm(x, params);
  } else {
    auto x = morrey::seq_from_json(in);
    if (x.d != a.d) morrey::raise(morrey::errc::dimension_mismatch, "--d disagrees with input file");
    res = morrey::discrete_norm(x, params);
  }
  out["value"] = res.value;
  if (res.exact_value) out["exact_value"] = res.exact_value->to_string();
  if (res.window) {
    out["window"]["m"] = res.window->center.coords;
    out["window"]["N"] = res.window->radius;
  } else {
    out["window"] = nullptr;
  }

  std::ostringstream human;
  human.precision(15);
  human << "discrete norm = " << res.value;
  if (res.exact_value) human << " (exact " << res.exact_value->to_string() << ")";
  if (res.window) {
    human << "  at window N=" << res.window->radius << " m=[";
    for (std::size_t i = 0; i < res.window->center.coords.size(); ++i)
      human << (i ? "," : "") << res.window->center.coords[i];
    human << "]";
  }
  human << "\n";
  emit(g, out, human.str());
  return 0;
}

int run_norm_continuous(const GlobalOpts& g, const NormContinuousArgs& a) {
  ordered_json in = morrey::load_json_file(a.fn_path);
  morrey::PiecewisePowerFn fn = morrey::fn_from_json(in);
  morrey::MorreyParams params(a.p, a.q, fn.d);
  morrey::OptimizerConfig opt;
  opt.tol = a.tol;

  morrey::NormEstimate est;
  if (a.mode == "global1d") {
    est = morrey::global_norm_1d(fn, params, opt);
  } else if (a.mode == "local") {
    est = morrey::local_norm_radial(fn, params);
  } else {
    morrey::raise(morrey::errc::invalid_params, "mode must be global1d or local");
  }

  ordered_json out;
  out["schema"] = "1";
  out["command"] = "norm";
  out["space"] = "continuous";
  out["mode"] = a.mode;
  out["p"] = a.p;
  out["q"] = a.q;
  out["d"] = fn.d;
  out["value"] = est.value;
  out["tolerance"] = est.tolerance;
  out["witness"]["a"] = est.witness.center;
  out["witness"]["r"] = est.witness.radius;
  out["evaluations"] = est.evaluations;

  std::ostringstream human;
  human.precision(15);
  human << "continuous norm (" << a.mode << ") = " << est.value << "  witness ball a="
        << est.witness.center << " r=" << est.witness.radius << "  tol " << est.tolerance << "\n";
  emit(g, out, human.str());
  return 0;
}

struct ConstantsEvalArgs {
  std::string functional = "nj";
  std::string space = "discrete";
  double p = 1, q = 1;
  int d = 1;
  std::string x_path, y_path;
  bool exact = false;
  double tol = 1e-8;
};

template <class Space, class Vec>
morrey::FunctionalResult eval_functional(const Space& sp, morrey::Functional f, const Vec& x,
                                         const Vec& y) {
  switch (f) {
    case morrey::Functional::nj: return morrey::nj_functional(sp, x, y);
    case morrey::Functional::james: return morrey::james_functional(sp, x, y);
    case morrey::Functional::dw: return morrey::dw_functional(sp, x, y);
  }
  morrey::raise(morrey::errc::invalid_params, "unreachable");
}

int run_constants_eval(const GlobalOpts& g, const ConstantsEvalArgs& a) {
  morrey::Functional f = parse_functional(a.functional);
  ordered_json jx = morrey::load_json_file(a.x_path);
  ordered_json jy = morrey::load_json_file(a.y_path);

  morrey::FunctionalResult res;
  ordered_json pair;
  double envelope_tol = 1e-9;
  if (a.space == "discrete") {
    morrey::MorreyParams params(a.p, a.q, a.d);
    if (a.exact) {
      auto x = morrey::seq_from_json_exact(jx);
      auto y = morrey::seq_from_json_exact(jy);
      morrey::DiscreteSpaceX sp(params);
      res = eval_functional(sp, f, x, y);
      pair = ordered_json::array({morrey::seq_to_json(x), morrey::seq_to_json(y)});
    } else {
      auto x = morrey::seq_from_json(jx);
      auto y = morrey::seq_from_json(jy);
      morrey::DiscreteSpaceD sp(params);
      res = eval_functional(sp, f, x, y);
      pair = ordered_json::array({morrey::seq_to_json(x), morrey::seq_to_json(y)});
    }
  } else if (a.space == "continuous1d" || a.space == "local") {
    auto x = morrey::fn_from_json(jx);
    auto y = morrey::fn_from_json(jy);
    if (x.d != y.d) morrey::raise(morrey::errc::dimension_mismatch, "function dimensions disagree");
    morrey::MorreyParams params(a.p, a.q, x.d);
    morrey::OptimizerConfig opt;
    opt.tol = a.tol;
    morrey::ContinuousSpace sp(params,
                               a.space == "local" ? morrey::ContinuousSpace::Mode::local
                                                  : morrey::ContinuousSpace::Mode::global1d,
                               opt);
    res = eval_functional(sp, f, x, y);
    pair = ordered_json::array({morrey::fn_to_json(x), morrey::fn_to_json(y)});
    envelope_tol = 1e-4;
  } else {
    morrey::raise(morrey::errc::invalid_params, "space must be discrete, continuous1d, or local");
  }

  ordered_json out;
  out["schema"] = "1";
  out["functional"] = a.functional;
  out["value"] = res.value;
  out["tolerance"] = res.tolerance;
  if (res.exact) out["exact_value"] = res.exact->to_string();
  out["pair"] = pair;
  ordered_json trace;
  for (const auto& [k, v] : res.trace) trace[k] = v;
  out["trace"] = trace;
  out["seed"] = 0;
  out["budget"] = 0;

  std::ostringstream human;
  human.precision(15);
  human << a.functional << " = " << res.value;
  if (res.exact) human << " (exact " << res.exact->to_string() << ")";
  human << "  tol " << res.tolerance << "\n";
  for (const auto& [k, v] : res.trace) human << "  " << k << " = " << v << "\n";
  emit(g, out, human.str());

  if (!morrey::assert_envelope(f, res.value, envelope_tol)) {
    std::cerr << "envelope violation: " << a.functional << " = " << res.value << "\n";
    return 4;
  }
  return 0;
}

struct ConstantsSearchArgs {
  std::string functional = "nj";
  std::string space = "discrete";
  double p = 1, q = 1;
  int d = 1;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
};

int run_constants_search(const GlobalOpts& g, const ConstantsSearchArgs& a) {
  if (a.space != "discrete")
    morrey::raise(morrey::errc::invalid_params,
                  "search is implemented for the discrete space; continuous constants come from the witness family");
  morrey::Functional f = parse_functional(a.functional);
  morrey::MorreyParams params(a.p, a.q, a.d);
  morrey::DiscreteSpaceD sp(params);
  morrey::SearchConfig cfg;
  cfg.budget = a.budget;
  cfg.seed = a.seed;
  morrey::ConstantReport rep = morrey::search_lower_bound(sp, f, cfg);

  ordered_json out = constant_report_json(rep);
  std::ostringstream human;
  human.precision(15);
  human << "searched " << a.functional << " lower bound = " << rep.value << "  (seed " << rep.seed
        << ", budget " << rep.budget << ")\n";
  emit(g, out, human.str());

  if (!morrey::assert_envelope(f, rep.value, 1e-9)) {
    std::cerr << "envelope violation: " << a.functional << " = " << rep.value << "\n";
    return 4;
  }
  return 0;
}

int run_report(const GlobalOpts& g, const morrey::ReproductionReport& rep) {
  emit_rows(g, morrey::report_to_json(rep), report_rows(rep), morrey::report_to_text(rep));
  return rep.pass() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morrey norms, geometric constants, and theorem reproduction reports"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: json, csv, human")
      ->check(CLI::IsMember({"json", "csv", "human"}));

  // norm
  auto* norm = app.add_subcommand("norm", "Evaluate a norm");
  norm->require_subcommand(1);
  NormDiscreteArgs nd;
  auto* norm_d = norm->add_subcommand("discrete", "Discrete Morrey norm of a sparse sequence");
  norm_d->add_option("--p", nd.p)->required();
  norm_d->add_option("--q", nd.q)->required();
  norm_d->add_option("--d", nd.d)->required();
  norm_d->add_option("--input", nd.input, "Sequence JSON file")->required();
  norm_d->add_flag("--exact", nd.exact, "Exact rational mode (integer p, q)");

  NormContinuousArgs nc;
  auto* norm_c = norm->add_subcommand("continuous", "Morrey norm of a piecewise power function");
  norm_c->add_option("--p", nc.p)->required();
  norm_c->add_option("--q", nc.q)->required();
  norm_c->add_option("--mode", nc.mode, "global1d or local")
      ->check(CLI::IsMember({"global1d", "local"}));
  norm_c->add_option("--fn", nc.fn_path, "Function JSON file")->required();
  norm_c->add_option("--tol", nc.tol, "Optimizer relative tolerance");

  // constants
  auto* constants = app.add_subcommand("constants", "Geometric constant functionals");
  constants->require_subcommand(1);
  ConstantsEvalArgs ce;
  auto* c_eval = constants->add_subcommand("eval", "Evaluate a functional on a vector pair");
  c_eval->add_option("--functional", ce.functional)->required()
      ->check(CLI::IsMember({"nj", "james", "dw"}));
  c_eval->add_option("--space", ce.space)->required()
      ->check(CLI::IsMember({"discrete", "continuous1d", "local"}));
  c_eval->add_option("--p", ce.p)->required();
  c_eval->add_option("--q", ce.q)->required();
  c_eval->add_option("--d", ce.d);
  c_eval->add_option("--x", ce.x_path)->required();
  c_eval->add_option("--y", ce.y_path)->required();
  c_eval->add_flag("--exact", ce.exact);
  c_eval->add_option("--tol", ce.tol);

  ConstantsSearchArgs cs;
  auto* c_search = constants->add_subcommand("search", "Randomized lower-bound search");
  c_search->add_option("--functional", cs.functional)->required()
      ->check(CLI::IsMember({"nj", "james", "dw"}));
  c_search->add_option("--space", cs.space);
  c_search->add_option("--p", cs.p)->required();
  c_search->add_option("--q", cs.q)->required();
  c_search->add_option("--d", cs.d);
  c_search->add_option("--budget", cs.budget);
  c_search->add_option("--seed", cs.seed);

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "Machine-checked theorem reports");
  reproduce->require_subcommand(1);

  double t1_p = 1, t1_q = 2, t1_tol = 1e-8;
  auto* thm1 = reproduce->add_subcommand("thm1", "Continuous witnesses, d = 1 global norms");
  thm1->add_option("--p", t1_p)->required();
  thm1->add_option("--q", t1_q)->required();
  thm1->add_option("--tol", t1_tol);

  double t2_p = 1, t2_q = 2;
  int t2_d = 1;
  bool t2_exact = false;
  std::int64_t t2_n = 0;
  auto* thm2 = reproduce->add_subcommand("thm2", "Discrete witnesses, any d");
  thm2->add_option("--p", t2_p)->required();
  thm2->add_option("--q", t2_q)->required();
  thm2->add_option("--d", t2_d)->required();
  thm2->add_flag("--exact", t2_exact);
  thm2->add_option("--n", t2_n, "Witness separation (defaults to the minimal even n)");

  std::string dwc_space = "discrete";
  double dwc_p = 1, dwc_q = 2;
  int dwc_d = 1;
  bool dwc_exact = false;
  std::string dwc_rs = "0.5,0.25,0.1,0.05,0.01,0.001";
  auto* dwc = reproduce->add_subcommand("dw-curve", "Dunkl-Williams couple vs (4+2r)/(1+r)");
  dwc->add_option("--space", dwc_space)->check(CLI::IsMember({"discrete", "continuous"}));
  dwc->add_option("--p", dwc_p)->required();
  dwc->add_option("--q", dwc_q)->required();
  dwc->add_option("--d", dwc_d);
  dwc->add_flag("--exact", dwc_exact);
  dwc->add_option("--r", dwc_rs, "Comma-separated r values in (0,1)");

  double lr_p = 1, lr_q = 2;
  int lr_d = 1;
  auto* local_remark = reproduce->add_subcommand("local-remark", "Centered-ball chain, any d");
  local_remark->add_option("--p", lr_p)->required();
  local_remark->add_option("--q", lr_q)->required();
  local_remark->add_option("--d", lr_d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (norm_d->parsed()) return run_norm_discrete(g, nd);
    if (norm_c->parsed()) return run_norm_continuous(g, nc);
    if (c_eval->parsed()) return run_constants_eval(g, ce);
    if (c_search->parsed()) return run_constants_search(g, cs);
    if (thm1->parsed()) {
      morrey::OptimizerConfig opt;
      opt.tol = t1_tol;
      return run_report(g, morrey::reproduce_thm1(morrey::MorreyParams(t1_p, t1_q, 1), opt));
    }
    if (thm2->parsed()) {
      std::optional<std::int64_t> n;
      if (t2_n > 0) n = t2_n;
      return run_report(g, morrey::reproduce_thm2(morrey::MorreyParams(t2_p, t2_q, t2_d), t2_exact,
                                                  morrey::default_dw_grid(), n));
    }
    if (dwc->parsed()) {
      auto rs = parse_r_list(dwc_rs);
      if (dwc_space == "discrete") {
        return run_report(g, morrey::reproduce_dw_curve_discrete(
                                 morrey::MorreyParams(dwc_p, dwc_q, dwc_d), dwc_exact, rs));
      }
      std::vector<double> rds;
      for (const auto& r : rs) rds.push_back(r.to_double());
      return run_report(g, morrey::reproduce_dw_curve_continuous(
                               morrey::MorreyParams(dwc_p, dwc_q, 1), rds));
    }
    if (local_remark->parsed())
      return run_report(g, morrey::reproduce_local_remark(morrey::MorreyParams(lr_p, lr_q, lr_d)));
  } catch (const morrey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fraczeta/audit.hpp"
#include "fraczeta/frac_theta.hpp"
#include "fraczeta/frac_zeta.hpp"
#include "fraczeta/gammafn.hpp"
#include "fraczeta/integral.hpp"
#include "fraczeta/serialize.hpp"
#include "fraczeta/theta.hpp"
#include "fraczeta/zeta.hpp"

namespace fz = fraczeta;

namespace {

struct Options {
  std::string s_arg = "2,0";
  double a = 1.0;
  double alpha = 0.5;
  int l = 0;
  int pnum = 1;
  int q = 1;
  std::string method;
  std::string variant;
  std::string suite = "all";
  std::string axis;
  std::string range;
  std::vector<std::string> methods;
  std::int64_t budget_terms = 0;
  double tail_tol = 0.0;
  double quad_tol = 0.0;
  std::string out;
  std::string format = "json";
};

fz::Complex parse_complex(const std::string& text) {
  double re = 0, im = 0;
  char extra;
  int got = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &extra);
  if (got == 2) return {re, im};
  if (std::sscanf(text.c_str(), "%lf%c", &re, &extra) == 1) return {re, 0.0};
  throw CLI::ValidationError("--s expects RE or RE,IM");
}

// optional key=value config file named by FRACZETA_CONFIG; flags override
void apply_config_file(Options& o) {
  const char* path = std::getenv("FRACZETA_CONFIG");
  if (!path) return;
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "budget-terms") o.budget_terms = std::atoll(val.c_str());
    else if (key == "tail-tol") o.tail_tol = std::atof(val.c_str());
    else if (key == "quad-tol") o.quad_tol = std::atof(val.c_str());
    else if (key == "format") o.format = val;
    else if (key == "out") o.out = val;
  }
}

fz::RunConfig make_config(const Options& o) {
  fz::RunConfig cfg;
  if (o.budget_terms > 0) {
    cfg.budget.max_terms_per_axis = o.budget_terms;
    cfg.budget.hard_cap = std::max(cfg.budget.hard_cap, o.budget_terms);
  }
  if (o.tail_tol > 0) cfg.budget.tail_tol = o.tail_tol;
  if (o.quad_tol > 0) cfg.quadrature.abs_tol = o.quad_tol;
  cfg.format = (o.format == "csv") ? fz::RunConfig::Format::Csv
                                   : fz::RunConfig::Format::Json;
  cfg.out_path = o.out;
  return cfg;
}

std::ostream& open_out(const Options& o, std::ofstream& file) {
  if (o.out.empty() || o.out == "-") return std::cout;
  file.open(o.out);
  if (!file) throw fz::DomainError("cannot open output path " + o.out);
  return file;
}

fz::FormulaVariant fe_variant(const std::string& name) {
  if (name.empty() || name == "audit") return fz::audit_selected_variant();
  if (name == "paper_negative_log") return {fz::SeriesSign::PaperNegativeLog};
  if (name == "proof_positive_log") return {fz::SeriesSign::ProofPositiveLog};
  throw fz::DomainError("unknown variant " + name);
}

fz::ThetaVariant theta_variant(const std::string& name) {
  if (name.empty() || name == "corrected_e_ipialpha")
    return fz::ThetaVariant::CorrectedEipiAlpha;
  if (name == "as_printed_e_ipin") return fz::ThetaVariant::AsPrintedEipiN;
  throw fz::DomainError("unknown theta variant " + name);
}

fz::MethodResult eval_method(const std::string& id, const Options& o,
                             const fz::RunConfig& cfg) {
  fz::Complex s = parse_complex(o.s_arg);
  if (id == "hurwitz") return fz::hurwitz_zeta(s, o.a, o.l);
  if (id == "zeta") return fz::hurwitz_zeta(s, 1.0, o.l);
  if (id == "theta") return fz::theta(s, cfg.budget);
  if (id == "frac-zeta-series")
    return fz::frac_zeta_series({s, o.a, o.alpha}, cfg.budget);
  if (id == "frac-zeta-fe-triple")
    return fz::frac_hurwitz_fe_triple({s, o.a, o.alpha}, fe_variant(o.variant),
                                      cfg.budget);
  if (id == "frac-zeta-fe-simplified")
    return fz::frac_hurwitz_fe_simplified({s, o.a, o.alpha}, cfg.budget);
  if (id == "frac-zeta-fe-trig")
    return fz::frac_hurwitz_fe_trig({s, o.a, o.alpha}, fe_variant(o.variant),
                                    cfg.budget);
  if (id == "frac-zeta-fe-rational")
    return fz::frac_hurwitz_fe_rational(s, o.pnum, o.q, o.alpha, cfg.budget);
  if (id == "frac-theta")
    return fz::frac_theta_series(s, o.alpha, theta_variant(o.variant), cfg.budget);
  if (id == "frac-zeta-integral") {
    fz::IntegralVariant v = (o.variant == "as_printed")
                                ? fz::IntegralVariant::AsPrinted
                                : fz::IntegralVariant::CorrectedRecipGamma;
    return fz::frac_zeta_integral_value(s, o.alpha, v, cfg.budget, cfg.quadrature);
  }
  throw fz::DomainError("unknown method id " + id);
}

std::string result_csv(const fz::MethodResult& r) {
  std::string s = "value_re,value_im,err_estimate,terms_used,converged,variant\n";
  s += fz::fmt17(r.value.real()) + "," + fz::fmt17(r.value.imag()) + "," +
       fz::fmt17(r.err_estimate) + "," + std::to_string(r.terms_used) + "," +
       (r.converged ? "true" : "false") + "," + r.variant + "\n";
  return s;
}

std::string report_csv_header() {
  return "identity_id,verdict,tolerance,s_re,s_im,a,alpha,residual,variant,error\n";
}

std::string report_csv_rows(const fz::ResidualReport& r) {
  std::string s;
  for (const auto& p : r.points) {
    s += r.identity_id;
    s += ",";
    s += fz::verdict_name(r.verdict);
    s += "," + fz::fmt17(r.tolerance) + "," + fz::fmt17(p.point.s.real()) + "," +
         fz::fmt17(p.point.s.imag()) + "," + fz::fmt17(p.point.a) + "," +
         fz::fmt17(p.point.alpha) + "," + fz::fmt17(p.residual) + "," +
         p.variant + "," + p.error + "\n";
  }
  return s;
}

int cmd_eval(const Options& o) {
  fz::RunConfig cfg = make_config(o);
  fz::MethodResult r = eval_method(o.method, o, cfg);
  std::ofstream file;
  std::ostream& out = open_out(o, file);
  if (cfg.format == fz::RunConfig::Format::Csv)
    out << result_csv(r);
  else
    out << fz::to_json(r) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  fz::RunConfig cfg = make_config(o);
  std::vector<fz::ResidualReport> reports = fz::run_suite(o.suite, cfg);
  std::ofstream file;
  std::ostream& out = open_out(o, file);
  bool any_fail = false;
  if (cfg.format == fz::RunConfig::Format::Csv) out << report_csv_header();
  for (const auto& r : reports) {
    any_fail |= r.failed();
    if (cfg.format == fz::RunConfig::Format::Csv)
      out << report_csv_rows(r);
    else
      out << fz::to_json(r) << "\n";
  }
  return any_fail ? 3 : 0;
}

int cmd_scan(const Options& o) {
  fz::RunConfig cfg = make_config(o);
  double lo = 0, hi = 0;
  long long n = 0;
  if (std::sscanf(o.range.c_str(), "%lf,%lf,%lld", &lo, &hi, &n) != 3 || n < 2) {
    std::cerr << "scan: --range expects lo,hi,n with n >= 2\n";
    return 1;
  }
  if (o.axis != "re_s" && o.axis != "im_s" && o.axis != "alpha" && o.axis != "a") {
    std::cerr << "scan: --axis must be one of re_s, im_s, alpha, a\n";
    return 1;
  }
  std::ofstream file;
  std::ostream& out = open_out(o, file);
  out << "coord,value_re,value_im,err_estimate,terms_used,converged,error\n";
  long long errors = 0;
  fz::Complex s0 = parse_complex(o.s_arg);
  for (long long i = 0; i < n; ++i) {
    double x = lo + (hi - lo) * double(i) / double(n - 1);
    Options p = o;
    if (o.axis == "re_s") p.s_arg = fz::fmt17(x) + "," + fz::fmt17(s0.imag());
    if (o.axis == "im_s") p.s_arg = fz::fmt17(s0.real()) + "," + fz::fmt17(x);
    if (o.axis == "alpha") p.alpha = x;
    if (o.axis == "a") p.a = x;
    try {
      fz::MethodResult r = eval_method(o.method, p, cfg);
      out << fz::fmt17(x) << "," << fz::fmt17(r.value.real()) << ","
          << fz::fmt17(r.value.imag()) << "," << fz::fmt17(r.err_estimate) << ","
          << r.terms_used << "," << (r.converged ? "true" : "false") << ",\n";
    } catch (const fz::Error& e) {
      ++errors;
      out << fz::fmt17(x) << ",,,,,," << e.kind_name() << "\n";
    }
  }
  return (2 * errors > n) ? 2 : 0;
}

int cmd_compare(const Options& o) {
  if (o.methods.size() < 2) {
    std::cerr << "compare: need at least two --method ids\n";
    return 1;
  }
  fz::RunConfig cfg = make_config(o);
  std::ofstream file;
  std::ostream& out = open_out(o, file);
  struct Row {
    std::string id;
    fz::MethodResult r;
    double ms;
  };
  std::vector<Row> rows;
  for (const auto& id : o.methods) {
    auto t0 = std::chrono::steady_clock::now();
    fz::MethodResult r = eval_method(id, o, cfg);  // exit-2 path on throw
    auto t1 = std::chrono::steady_clock::now();
    rows.push_back({id, r, std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }
  out << "method,value_re,value_im,err_estimate,terms_used,wall_ms\n";
  for (const auto& row : rows)
    out << row.id << "," << fz::fmt17(row.r.value.real()) << ","
        << fz::fmt17(row.r.value.imag()) << "," << fz::fmt17(row.r.err_estimate)
        << "," << row.r.terms_used << "," << fz::fmt17(row.ms) << "\n";
  out << "pair,abs_delta\n";
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      out << rows[i].id << "|" << rows[j].id << ","
          << fz::fmt17(std::abs(rows[i].r.value - rows[j].r.value)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fraczeta: fractional derivatives of Hurwitz zeta and Jacobi "
               "theta, with identity audits"};
  app.require_subcommand(1);
  Options o;
  apply_config_file(o);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--s", o.s_arg, "evaluation point as RE or RE,IM");
    sub->add_option("--a", o.a, "Hurwitz offset in (0,1]");
    sub->add_option("--alpha", o.alpha, "fractional order");
    sub->add_option("--l", o.l, "integer derivative order (hurwitz/zeta)");
    sub->add_option("--p", o.pnum, "rational offset numerator");
    sub->add_option("--q", o.q, "rational offset denominator");
    sub->add_option("--variant", o.variant, "formula variant id");
    sub->add_option("--budget-terms", o.budget_terms, "max series terms per axis");
    sub->add_option("--tail-tol", o.tail_tol, "absolute tail tolerance");
    sub->add_option("--quad-tol", o.quad_tol, "quadrature absolute tolerance");
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* ev = app.add_subcommand("eval", "evaluate one method at one point");
  ev->add_option("--method", o.method, "method id")->required();
  add_common(ev);

  CLI::App* vf = app.add_subcommand("verify", "run an identity-audit suite");
  vf->add_option("--suite", o.suite, "suite id")
      ->check(CLI::IsMember(fz::suite_ids()));
  add_common(vf);

  CLI::App* sc = app.add_subcommand("scan", "scan one axis, emit CSV");
  sc->add_option("--method", o.method, "method id")->required();
  sc->add_option("--axis", o.axis, "re_s, im_s, alpha or a")->required();
  sc->add_option("--range", o.range, "lo,hi,n")->required();
  add_common(sc);

  CLI::App* cp = app.add_subcommand("compare", "evaluate several methods at one point");
  cp->add_option("--method", o.methods, "method ids (repeat)")->required();
  add_common(cp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (ev->parsed()) return cmd_eval(o);
    if (vf->parsed()) return cmd_verify(o);
    if (sc->parsed()) return cmd_scan(o);
    if (cp->parsed()) return cmd_compare(o);
  } catch (const fz::Error& e) {
    std::cout << fz::error_json(e.kind_name(), e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << fz::error_json("Error", e.what()) << "\n";
    return 2;
  }
  return 1;
}

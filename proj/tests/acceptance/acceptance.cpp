// Acceptance suite: each criterion prints one PASS/FAIL line (plus detail)
// and the process exits nonzero if the requested criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "fraczeta/audit.hpp"
#include "fraczeta/frac_theta.hpp"
#include "fraczeta/frac_zeta.hpp"
#include "fraczeta/gammafn.hpp"
#include "fraczeta/integral.hpp"
#include "fraczeta/theta.hpp"
#include "fraczeta/zeta.hpp"

using namespace fraczeta;

namespace {

struct Clause {
  std::string text;
  bool ok;
};

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

double rel(const Complex& got, const Complex& want) {
  return std::abs(got - want) / std::abs(want);
}

bool report(int n, const std::vector<Clause>& clauses, double secs,
            double budget_secs) {
  bool ok = true;
  for (const auto& c : clauses) ok &= c.ok;
  bool time_ok = secs < budget_secs;
  std::printf("[criterion %02d] %s  (%.2fs of %.0fs budget)\n", n,
              (ok && time_ok) ? "PASS" : "FAIL", secs, budget_secs);
  for (const auto& c : clauses)
    std::printf("    %s  %s\n", c.ok ? "[ok]  " : "[FAIL]", c.text.c_str());
  if (!time_ok) std::printf("    [FAIL] runtime budget exceeded\n");
  return ok && time_ok;
}

std::string fmt(double x) {
  char b[32];
  std::snprintf(b, sizeof(b), "%.3g", x);
  return b;
}

// ---------------------------------------------------------------------------

bool criterion_1() {
  Timer t;
  std::vector<Clause> cs;
  for (const auto& rep : audit_classical_baselines({})) {
    double worst = 0.0;
    for (const auto& p : rep.points) worst = std::max(worst, p.residual);
    cs.push_back({rep.identity_id + ": worst residual " + fmt(worst) +
                      " vs tol " + fmt(rep.tolerance),
                  rep.verdict == Verdict::Pass});
  }
  return report(1, cs, t.seconds(), 5.0);
}

bool criterion_2() {
  Timer t;
  const FormulaVariant var = audit_selected_variant();
  SeriesBudget b;
  double worst24 = 0.0, worst23 = 0.0, worst34 = 0.0;
  int n = 0;
  for (double re : {-1.5, -2.5, -3.5})
    for (double im : {0.0, 1.0, -1.0})
      for (double a : {0.25, 0.5, 0.75, 1.0})
        for (double al : {0.3, 0.5, 0.7}) {
          FracEvalPoint p{{re, im}, a, al};
          Complex t2 = frac_hurwitz_fe_triple(p, var, b).value;
          Complex t4 = frac_hurwitz_fe_trig(p, var, b).value;
          Complex t3 = frac_hurwitz_fe_simplified(p, b).value;
          worst24 = std::max(worst24, std::abs(t2 - t4));
          worst23 = std::max(worst23, std::abs(t2 - t3));
          worst34 = std::max(worst34, std::abs(t3 - t4));
          ++n;
        }
  std::vector<Clause> cs;
  cs.push_back({"triple vs trig: worst |delta| " + fmt(worst24) + " over " +
                    std::to_string(n) + " points (tol 1e-8)",
                worst24 <= 1e-8});
  cs.push_back({"triple vs simplified: worst |delta| " + fmt(worst23) +
                    " (tol 1e-8). The tau-power form drops a conjugation in "
                    "its exponential factorization and uses a different "
                    "derivative-phase convention; it is not a rearrangement "
                    "of the triple sum, and the audit records the identity as "
                    "a documented discrepancy",
                worst23 <= 1e-8});
  cs.push_back({"simplified vs trig: worst |delta| " + fmt(worst34) +
                    " (tol 1e-8), same discrepancy as above",
                worst34 <= 1e-8});
  return report(2, cs, t.seconds(), 60.0);
}

bool criterion_3() {
  Timer t;
  SeriesBudget b;
  const FormulaVariant var = audit_selected_variant();
  std::vector<Clause> cs;
  {  // corollary paths at a = 1 are the same code path: bit-identical
    bool ok = true;
    for (double al : {0.3, 0.5, 0.7}) {
      FracEvalPoint p{{-2.5, 0.0}, 1.0, al};
      ok &= frac_hurwitz_fe_triple(p, var, b).value ==
            frac_hurwitz_fe_triple(p, var, b).value;
      ok &= frac_hurwitz_fe_simplified(p, b).value ==
            frac_hurwitz_fe_simplified(p, b).value;
      ok &= frac_hurwitz_fe_trig(p, var, b).value ==
            frac_hurwitz_fe_trig(p, var, b).value;
    }
    cs.push_back({"a = 1 corollary evaluators are the a = 1 code path, "
                  "bit-identical on repeat evaluation",
                  ok});
  }
  {
    Complex e9 = frac_hurwitz_fe_triple({{-2.5, 0.0}, 1.0, 0.5}, var, b).value;
    Complex e10 = frac_hurwitz_fe_rational({-2.5, 0.0}, 1, 1, 0.5, b).value;
    double d = std::abs(e9 - e10);
    cs.push_back({"rational offset at p = q = 1 equals the a = 1 triple sum: "
                      "|delta| " + fmt(d) + " (tol 1e-10)",
                  d <= 1e-10});
  }
  {
    Complex e10 = frac_hurwitz_fe_rational({-2.5, 0.0}, 1, 2, 0.4, b).value;
    Complex t2 = frac_hurwitz_fe_triple({{-2.5, 0.0}, 0.5, 0.4}, var, b).value;
    double d = std::abs(e10 - t2);
    cs.push_back({"rational offset at p=1,q=2 vs triple sum at a = 1/2: "
                      "|delta| " + fmt(d) +
                      " (tol 1e-8). The two printed forms expand around "
                      "different logarithm bases (log 2 pi q vs log 2 pi); as "
                      "truncated asymptotic resummations they genuinely "
                      "differ, far beyond both truncation floors",
                  d <= 1e-8});
  }
  return report(3, cs, t.seconds(), 60.0);
}

bool criterion_4() {
  Timer t;
  SeriesBudget b;
  std::vector<Clause> cs;
  for (auto [sr, al] : {std::pair{4.0, 0.5}, std::pair{5.0, 0.3}}) {
    Complex ser = frac_zeta_series({{sr, 0.0}, 1.0, al}, b).value;
    auto fn = [](Complex z) { return hurwitz_zeta(z, 1.0, 0).value; };
    Complex gl = gl_derivative(fn, {sr, 0.0}, al, {}, b).value;
    double d = rel(gl, ser);
    cs.push_back({"direct series vs GL oracle at s=" + fmt(sr) + ", alpha=" +
                      fmt(al) + ": rel " + fmt(d) + " (tol 1e-4)",
                  d <= 1e-4});
  }
  {
    GLSchedule sched;
    sched.ray = GLRay::RealForward;
    Complex gl = gl_derivative(
        [](Complex z) { return cpow(Complex(2.0 * kPi, 0.0), z); },
        {0.2, 0.0}, 0.5, sched, b).value;
    Complex closed_with_phase = cpow(Complex(2.0 * kPi, 0.0), {0.2, 0.0}) *
                                cpow(Complex(-1.0, 0.0), {0.5, 0.0}) *
                                std::pow(kLog2Pi, 0.5);
    Complex closed_no_phase = cpow(Complex(2.0 * kPi, 0.0), {0.2, 0.0}) *
                              std::pow(kLog2Pi, 0.5);
    double dp = rel(gl, closed_with_phase);
    double dn = rel(gl, closed_no_phase);
    cs.push_back({"GL of (2 pi)^s vs the claimed closed form with its "
                      "e^{i pi alpha} prefactor: rel " + fmt(dp) +
                      " (tol 1e-5). The literal forward GL sum converges "
                      "classically to the phase-free value (rel " + fmt(dn) +
                      " against it); the claimed prefactor is unreachable "
                      "under any ray, so this clause fails as printed",
                  dp <= 1e-5});
  }
  return report(4, cs, t.seconds(), 120.0);
}

bool criterion_5() {
  Timer t;
  RunConfig cfg;
  cfg.budget.tail_tol = 5e-5;  // sweep threshold 100 * tail_tol = 5e-3
  std::vector<Clause> cs;
  {
    ResidualReport rep = consistency_sweep("hurwitz", {-2.5, 0.0}, 1.0,
                                           {0.1, 0.01, 0.001}, cfg);
    double last = rep.points.back().residual;
    cs.push_back({"triple-sum FE -> classical FE as alpha -> 0: residuals " +
                      fmt(rep.points[0].residual) + " > " +
                      fmt(rep.points[1].residual) + " > " + fmt(last) +
                      ", final < 5e-3",
                  rep.verdict == Verdict::Pass && last < 5e-3});
  }
  {
    ResidualReport rep = consistency_sweep("integral", {3.0, 0.0}, 1.0,
                                           {0.1, 0.01, 0.001}, cfg);
    double last = rep.points.back().residual;
    bool decreasing = rep.points[0].residual > rep.points[1].residual &&
                      rep.points[1].residual > last;
    cs.push_back({"integral bridge (corrected reciprocal-gamma) -> completed "
                      "zeta as alpha -> 0: residuals " +
                      fmt(rep.points[0].residual) + " > " +
                      fmt(rep.points[1].residual) + " > " + fmt(last) +
                      ", final < 5e-3",
                  decreasing && last < 5e-3});
  }
  return report(5, cs, t.seconds(), 120.0);
}

bool criterion_6() {
  Timer t;
  SeriesBudget b;
  Complex target = hurwitz_zeta({4.0, 0.0}, 1.0, 1).value;
  double r99 = std::abs(frac_zeta_series({{4.0, 0.0}, 1.0, 0.99}, b).value - target);
  double r999 = std::abs(frac_zeta_series({{4.0, 0.0}, 1.0, 0.999}, b).value - target);
  std::vector<Clause> cs;
  cs.push_back({"direct series approaches the first derivative: residual " +
                    fmt(r99) + " (alpha=0.99) > " + fmt(r999) + " (alpha=0.999)",
                r999 < r99});
  return report(6, cs, t.seconds(), 60.0);
}

bool criterion_7() {
  Timer t;
  SeriesBudget b;
  ResidualReport rep = convolution_identity_residual({6.0, 0.0}, 1.0, 0.5,
                                                     100000, b);
  std::vector<Clause> cs;
  double classical = rep.points[1].residual;
  double literal = rep.points[0].residual;
  cs.push_back({"Dirichlet-convolution product identity at a = 1 (divisor sum "
                    "over the 1-based index): residual " + fmt(classical) +
                    " below combined tail " + fmt(rep.tolerance),
                classical <= rep.tolerance});
  cs.push_back({"printed divisor indexing (d | k over log(d+a)) misses by " +
                    fmt(literal) + ", recorded as a documented discrepancy",
                rep.verdict == Verdict::DocumentedDiscrepancy && !rep.notes.empty()});
  return report(7, cs, t.seconds(), 120.0);
}

bool criterion_8() {
  Timer t;
  std::vector<ResidualReport> reps = audit_theta_variants({});
  const ResidualReport& rep = reps.front();
  std::vector<Clause> cs;
  bool definitive = rep.verdict == Verdict::DocumentedDiscrepancy &&
                    rep.notes.find("corrected_e_ipialpha") != std::string::npos;
  double worst_corr = 0.0, best_printed = 1e300;
  for (const auto& p : rep.points) {
    if (p.variant == "corrected_e_ipialpha")
      worst_corr = std::max(worst_corr, p.residual);
    else
      best_printed = std::min(best_printed, p.residual);
  }
  cs.push_back({"exactly one variant agrees with the GL oracle at all 6 "
                    "points: corrected e^{i pi alpha} (worst rel " +
                    fmt(worst_corr) + "), printed e^{i pi n} never (best rel " +
                    fmt(best_printed) + ")",
                definitive && worst_corr <= 1e-4 && best_printed > 1e-4});
  return report(8, cs, t.seconds(), 120.0);
}

bool criterion_9() {
  Timer t;
  std::vector<ResidualReport> reps = run_suite("all", {});
  int fails = 0;
  std::vector<std::string> suspect_ids = {
      "thm1-convolution-a-half",       // product identity beyond its lemma's scope
      "thm6-theta-fe",                 // fractional chain-rule step
      "alpha-limit-integral-printed",  // printed reciprocal-gamma derivative form
      "thm7-integral-bridge",          // domain hypothesis vs integral convergence
  };
  std::vector<Clause> cs;
  for (const auto& r : reps) fails += r.failed();
  cs.push_back({"verify all: " + std::to_string(reps.size()) +
                    " identities audited, zero fail verdicts",
                fails == 0});
  for (const auto& id : suspect_ids) {
    bool found = false, ok = false;
    for (const auto& r : reps)
      if (r.identity_id == id) {
        found = true;
        ok = r.verdict == Verdict::Pass ||
             (r.verdict == Verdict::DocumentedDiscrepancy && !r.notes.empty());
      }
    cs.push_back({"suspect identity " + id +
                      ": pass or documented-discrepancy with a location note",
                  found && ok});
  }
  return report(9, cs, t.seconds(), 600.0);
}

bool criterion_10() {
  Timer t;
  double r = leibniz_residual(1.0, 3.0, {0.0, 0.0}, 0.5, 60);
  std::vector<Clause> cs;
  cs.push_back({"generalized Leibniz exponential pair (c=1, d=3, alpha=0.5, "
                    "N=60): residual " + fmt(r) + " < 1e-10",
                r < 1e-10});
  return report(10, cs, t.seconds(), 60.0);
}

}  // namespace

int main(int argc, char** argv) {
  bool (*criteria[])(void) = {criterion_1, criterion_2, criterion_3,
                              criterion_4, criterion_5, criterion_6,
                              criterion_7, criterion_8, criterion_9,
                              criterion_10};
  if (argc > 1 && std::strcmp(argv[1], "all") != 0) {
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 10) {
      std::cerr << "usage: acceptance [1..10|all]\n";
      return 2;
    }
    return criteria[n - 1]() ? 0 : 1;
  }
  int failures = 0;
  for (int i = 0; i < 10; ++i) failures += !criteria[i]();
  std::printf("acceptance: %d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}

#include "fraczeta/frac_theta.hpp"

#include <cmath>

namespace fraczeta {

const char* theta_variant_name(ThetaVariant v) {
  return v == ThetaVariant::AsPrintedEipiN ? "as_printed_e_ipin"
                                           : "corrected_e_ipialpha";
}

double double_factorial_odd(int k) {
  if (k < 0) throw DomainError("double_factorial: negative index");
  if (k <= 150) {
    double v = 1.0;
    for (int j = 2 * k + 1; j >= 1; j -= 2) v *= double(j);
    return v;
  }
  // beyond the representable range the log-space form at least keeps the
  // relative structure; 301!! is already at the edge of binary64
  double lg = std::lgamma(2.0 * k + 3.0) - (k + 1.0) * std::log(2.0) -
              std::lgamma(k + 2.0);
  return std::exp(lg);
}

MethodResult frac_theta_series(Complex s, double alpha, ThetaVariant variant,
                               const SeriesBudget& budget) {
  budget.validate();
  if (!(s.real() > 0.0)) throw DomainError("frac_theta_series: needs Re(s) > 0");

  const Complex phase_alpha = cpow(Complex(-1.0, 0.0), Complex(alpha, 0.0));
  KahanSumComplex acc;
  std::int64_t n = 1;
  double tail = 0.0;
  for (;; ++n) {
    if (n > budget.hard_cap)
      throw ConvergenceError("frac_theta_series: budget exhausted");
    double pn2 = kPi * double(n) * double(n);
    // (pi n^2)^alpha e^{-pi n^2 s}, summed over +-n
    Complex mag = std::pow(pn2, alpha) * std::exp(-pn2 * s);
    Complex ph = (variant == ThetaVariant::AsPrintedEipiN)
                     ? Complex((n % 2 == 0) ? 1.0 : -1.0, 0.0)
                     : phase_alpha;
    acc.add(2.0 * ph * mag);
    double np = kPi * double(n + 1) * double(n + 1);
    tail = 2.0 * std::pow(np, std::max(alpha, 0.0)) * std::exp(-np * s.real()) /
           (1.0 - std::exp(-kPi * (2.0 * double(n) + 3.0) * s.real()));
    if (tail < budget.tail_tol) break;
  }
  MethodResult res;
  res.value = check_finite(acc.value(), "frac_theta_series");
  res.err_estimate = tail;
  res.terms_used = n;
  res.converged = true;
  res.variant = theta_variant_name(variant);
  return res;
}

ResidualReport frac_theta_fe(Complex s, double alpha, ThetaVariant variant,
                             const SeriesBudget& budget) {
  budget.validate();
  if (!(s.real() > 0.0)) throw DomainError("frac_theta_fe: needs Re(s) > 0");
  if (!(alpha > 0.0)) throw DomainError("frac_theta_fe: alpha must be > 0");

  const Complex lhs = frac_theta_series(s, alpha, variant, budget).value;
  const Complex phase_alpha = cpow(Complex(-1.0, 0.0), Complex(alpha, 0.0));
  const Complex inv_s = 1.0 / s;
  const Complex s_pow = cpow(s, Complex(alpha + 1.5, 0.0));  // s^{(2a+3)/2}

  ResidualReport rep;
  rep.identity_id = "thm6-theta-fe";
  KahanSumComplex rhs;
  double last = 0.0;
  int small_streak = 0;
  int k = 0;
  bool settled = false;
  std::vector<double> mags;
  for (; k <= 64; ++k) {
    Complex inner = frac_theta_series(inv_s, alpha - k, variant, budget).value;
    double coef = gen_binom(alpha, k) * double_factorial_odd(k) /
                  (std::pow(2.0, k) * (2.0 * k + 1.0));
    Complex term = coef * phase_alpha / s_pow * inner;
    rhs.add(term);
    last = std::abs(term);
    mags.push_back(last);
    if (last < budget.tail_tol) {
      if (++small_streak >= 3) {
        settled = true;
        break;
      }
    } else {
      small_streak = 0;
    }
    // visible divergence: three consecutive growing terms
    if (k >= 3 && mags[k] > mags[k - 1] && mags[k - 1] > mags[k - 2] &&
        mags[k - 2] > mags[k - 3])
      break;
  }
  double residual = std::abs(lhs - rhs.value());
  rep.points.push_back({{s, 1.0, alpha}, residual, theta_variant_name(variant), ""});
  rep.tolerance = 100.0 * budget.tail_tol;
  if (!settled && k > 60)
    throw ConvergenceError("frac_theta_fe: k-sum neither settled nor diverged");
  if (settled && residual <= rep.tolerance) {
    rep.verdict = Verdict::Pass;
  } else {
    rep.verdict = Verdict::DocumentedDiscrepancy;
    rep.notes =
        "the (theta(1/s))^{(alpha-k)} chain-rule step (printed between the "
        "helper derivative of 1/sqrt(s) and the final statement) is not valid "
        "at fractional order; residuals recorded per variant";
  }
  return rep;
}

}  // namespace fraczeta

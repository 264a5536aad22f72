#include "fraczeta/integral.hpp"

#include <cmath>

#include "fraczeta/frac_zeta.hpp"
#include "fraczeta/gammafn.hpp"
#include "fraczeta/theta.hpp"

namespace fraczeta {

namespace {

Complex theta_minus_one(double t, const SeriesBudget& b) {
  if (!(t > 0.0)) return {0.0, 0.0};
  // below t ~ 1e-4 the reflected series is 1 to double precision, so
  // theta(t) - 1 = t^{-1/2} - 1 exactly; above t ~ 700 the sum is 1 itself
  if (t < 1e-4) return {1.0 / std::sqrt(t) - 1.0, 0.0};
  if (t > 700.0) return {0.0, 0.0};
  return theta(Complex(t, 0.0), b).value - 1.0;
}

}  // namespace

MethodResult theta_log_moment(Complex s, Complex w, const QuadratureConfig& q) {
  q.validate();
  if (!(s.real() > 1.0)) throw DomainError("theta_log_moment: needs Re(s) > 1");
  if (!(w.real() > -1.0))
    throw DomainError("theta_log_moment: log order must have Re > -1");
  SeriesBudget tb;
  tb.tail_tol = std::min(1e-14, q.abs_tol * 1e-3);

  // Work in log space, t = e^v: integrand (theta(e^v) - 1) e^{v s/2} cpow(v, w)
  // decays like exp(-pi e^v) upward and e^{v (Re(s)-1)/2} downward; theta()
  // applies the functional equation itself for tiny t. Panels split both at
  // the configured point and at v = 0, where the log weight is singular.
  auto g = [&](double v) -> Complex {
    return theta_minus_one(std::exp(v), tb) * std::exp(0.5 * s * v) *
           cpow(Complex(v, 0.0), w);
  };
  const double vc = std::log(q.split_point);
  const double lo_b = std::min(vc, 0.0), hi_b = std::max(vc, 0.0);

  QuadResult up = exp_sinh(g, hi_b, q);
  QuadResult down = exp_sinh([&](double u) { return g(lo_b - u); }, 0.0, q);
  QuadResult mid;
  if (hi_b > lo_b) mid = tanh_sinh(g, lo_b, hi_b, q);

  MethodResult res;
  res.value = check_finite(up.value + down.value + mid.value, "theta_log_moment");
  res.err_estimate = up.err_estimate + down.err_estimate + mid.err_estimate;
  res.terms_used = up.evals + down.evals + mid.evals;
  res.converged = res.err_estimate <= 3.0 * q.abs_tol;
  return res;
}

MethodResult theta_log_moment_raw_lower(Complex s, Complex w,
                                        const QuadratureConfig& q) {
  q.validate();
  if (!(s.real() > 1.0)) throw DomainError("theta_log_moment: needs Re(s) > 1");
  SeriesBudget tb;
  tb.tail_tol = std::min(1e-14, q.abs_tol * 1e-3);
  auto f = [&](double t) -> Complex {
    return theta_minus_one(t, tb) * cpow(Complex(t, 0.0), 0.5 * s - 1.0) *
           cpow(Complex(std::log(t), 0.0), w);
  };
  QuadResult r = tanh_sinh(f, 0.0, q.split_point, q);
  MethodResult res;
  res.value = check_finite(r.value, "theta_log_moment_raw_lower");
  res.err_estimate = r.err_estimate;
  res.terms_used = r.evals;
  res.converged = true;
  return res;
}

MethodResult completed_zeta_integral(Complex s, const QuadratureConfig& q) {
  if (!(s.real() > 1.0))
    throw DomainError("completed_zeta_integral: needs Re(s) > 1");
  MethodResult m = theta_log_moment(s, Complex(0.0, 0.0), q);
  Complex pref = cpow(Complex(kPi, 0.0), 0.5 * s) / (2.0 * gamma(0.5 * s));
  m.value = check_finite(pref * m.value, "completed_zeta_integral");
  m.err_estimate *= std::abs(pref);
  return m;
}

const char* integral_variant_name(IntegralVariant v) {
  return v == IntegralVariant::AsPrinted ? "as_printed" : "corrected_recip_gamma";
}

MethodResult frac_zeta_integral_value(Complex s, double alpha,
                                      IntegralVariant variant,
                                      const SeriesBudget& budget,
                                      const QuadratureConfig& q) {
  budget.validate();
  if (!(s.real() > 1.0 + alpha))
    throw DomainError("frac_zeta_integral: needs Re(s) > 1 + alpha");
  if (!(alpha > 0.0)) throw DomainError("frac_zeta_integral: alpha must be > 0");

  const double logpi = std::log(kPi);
  const Complex pis2 = cpow(Complex(kPi, 0.0), 0.5 * s);
  MethodResult res;
  res.variant = integral_variant_name(variant);
  KahanSumComplex acc;
  double err = 0.0;
  // the k-sum leaves L^1 at Re(alpha - k) <= -1; the printed infinite sum
  // ignores this, so truncation there is recorded, not chosen
  int kmax = int(std::floor(alpha + 1.0 - 0.05));
  for (int k = 0; k <= kmax; ++k) {
    MethodResult Ik = theta_log_moment(s, Complex(alpha - k, 0.0), q);
    Complex coef(0.0, 0.0);
    if (variant == IntegralVariant::AsPrinted) {
      // sum_j e^{i pi (k-j)} G(a+1) log^j pi pi^{s/2} /
      //       (G(a-k+1) j! 2^{a+1} Gamma(s/2)^{k-j+1})
      Complex gs = gamma(0.5 * s);
      double fk = falling_factorial(alpha, k);  // Gamma(a+1)/Gamma(a-k+1)
      Complex gpow = cpow(gs, Complex(double(k + 1), 0.0));
      double jfact = 1.0;
      double logp = 1.0;
      KahanSumComplex jsum;
      for (int j = 0; j <= 80; ++j) {
        double sgn = ((k - j) % 2 == 0) ? 1.0 : -1.0;
        Complex tj = sgn * fk * logp * pis2 /
                     (jfact * std::pow(2.0, alpha + 1.0) * gpow);
        jsum.add(tj);
        if (std::abs(tj) < budget.tail_tol * 1e-3 && j > 4) break;
        gpow /= gs;  // Gamma^{k-j+1} -> next j
        logp *= logpi;
        jfact *= (j + 1.0);
      }
      coef = jsum.value();
    } else {
      // (1/2) C(a,k) 2^{-k} sum_j C(k,j) log^j(pi) pi^{s/2} (1/G)^{(k-j)}(s/2),
      // then the 2^{-(a-k)} chain factor from the log-moment's s/2 argument
      KahanSumComplex jsum;
      double cb = 1.0;
      double logp = 1.0;
      for (int j = 0; j <= k; ++j) {
        jsum.add(cb * logp * pis2 * recip_gamma_deriv(0.5 * s, k - j));
        cb = cb * double(k - j) / double(j + 1);
        logp *= logpi;
      }
      coef = gen_binom(alpha, k) * std::pow(2.0, -alpha - 1.0) * jsum.value();
    }
    acc.add(coef * Ik.value);
    err += std::abs(coef) * Ik.err_estimate;
    res.terms_used += Ik.terms_used;
  }
  res.value = check_finite(acc.value(), "frac_zeta_integral");
  res.err_estimate = err;
  res.converged = false;  // k-sum cut at the integrability boundary, not by tolerance
  return res;
}

ResidualReport frac_zeta_integral(Complex s, double alpha, IntegralVariant variant,
                                  const SeriesBudget& budget,
                                  const QuadratureConfig& q) {
  ResidualReport rep;
  rep.identity_id = "thm7-integral-bridge";
  FracEvalPoint pt{s, 1.0, alpha};
  MethodResult ref = frac_zeta_series(pt, budget);

  IntegralVariant other = variant == IntegralVariant::AsPrinted
                              ? IntegralVariant::CorrectedRecipGamma
                              : IntegralVariant::AsPrinted;
  for (IntegralVariant v : {variant, other}) {
    MethodResult mv = frac_zeta_integral_value(s, alpha, v, budget, q);
    rep.points.push_back(
        {{s, 1.0, alpha}, std::abs(mv.value - ref.value), integral_variant_name(v), ""});
  }
  rep.tolerance = 0.0;  // no pass threshold asserted at fractional order
  rep.verdict = Verdict::DocumentedDiscrepancy;
  rep.notes =
      "theorem hypothesis says Re(s) < 0 where the integral diverges; evaluated "
      "on Re(s) > 1 + alpha instead. The k-sum is truncated at the "
      "integrability boundary Re(alpha - k) > -1 (the printed sum runs over "
      "non-integrable log moments). Residuals vs the direct series recorded "
      "per reciprocal-gamma variant.";
  return rep;
}

}  // namespace fraczeta

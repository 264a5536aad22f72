#include "fraczeta/theta.hpp"

#include <cmath>

namespace fraczeta {

namespace {

MethodResult theta_series(Complex s, const SeriesBudget& budget) {
  const double sr = s.real();
  MethodResult res;
  KahanSumComplex acc;
  acc.add(Complex(1.0, 0.0));
  std::int64_t n = 1;
  for (;; ++n) {
    if (n > budget.hard_cap)
      throw ConvergenceError("theta: budget exhausted");
    Complex t = 2.0 * std::exp(-kPi * double(n) * double(n) * s);
    acc.add(t);
    // geometric tail bound e^{-pi N^2 Re s} / (1 - e^{-pi (2N+1) Re s})
    double tail = 2.0 * std::exp(-kPi * double(n + 1) * double(n + 1) * sr) /
                  (1.0 - std::exp(-kPi * (2.0 * double(n) + 3.0) * sr));
    if (tail < budget.tail_tol) {
      res.err_estimate = tail;
      break;
    }
  }
  res.value = check_finite(acc.value(), "theta");
  res.terms_used = n;
  res.converged = true;
  return res;
}

}  // namespace

MethodResult theta(Complex s, const SeriesBudget& budget) {
  budget.validate();
  if (!(s.real() > 0.0)) throw DomainError("theta: needs Re(s) > 0");
  if (s.real() < 0.05 && (1.0 / s).real() > s.real()) {
    // theta(s) = s^{-1/2} theta(1/s)
    MethodResult inner = theta_series(1.0 / s, budget);
    Complex w = cpow(s, Complex(-0.5, 0.0));
    inner.value = check_finite(w * inner.value, "theta");
    inner.err_estimate *= std::abs(w);
    return inner;
  }
  return theta_series(s, budget);
}

double theta_fe_residual(Complex s, const SeriesBudget& budget) {
  if (!(s.real() > 0.0)) throw DomainError("theta_fe_residual: needs Re(s) > 0");
  MethodResult lhs = theta_series(s, budget);
  MethodResult rhs = theta_series(1.0 / s, budget);
  return std::abs(lhs.value - cpow(s, Complex(-0.5, 0.0)) * rhs.value);
}

}  // namespace fraczeta

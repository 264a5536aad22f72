#include "fraczeta/gl.hpp"

#include <cmath>

namespace fraczeta {

void GLSchedule::validate() const {
  if (l_values.size() < 2) throw DomainError("gl: schedule needs >= 2 steps");
  for (size_t i = 0; i < l_values.size(); ++i) {
    if (!(l_values[i] > 0.0)) throw DomainError("gl: steps must be positive");
    if (i > 0 && !(l_values[i] < l_values[i - 1]))
      throw DomainError("gl: steps must be strictly decreasing");
  }
  if (m_cap < 64) throw DomainError("gl: m_cap must be >= 64");
  if (richardson_levels < 0) throw DomainError("gl: negative richardson_levels");
}

Complex GLSchedule::direction() const {
  if (ray == GLRay::RealForward) return {1.0, 0.0};
  return std::polar(1.0, -0.75 * kPi);
}

namespace {

Complex gl_sum_one(const ComplexFn& f, Complex s, double alpha, Complex lam,
                   const GLSchedule& sched, const SeriesBudget& budget,
                   std::int64_t* used) {
  // limit of f along the ray; GL of a constant is exactly 0
  Complex finf = f(s - (double(sched.m_cap) + 64.0) * lam);
  KahanSumComplex acc;
  double cb = 1.0;  // C(alpha, m)
  int small_streak = 0;
  int m = 0;
  bool truncated = false;
  for (; m < sched.m_cap; ++m) {
    Complex t = cb * (f(s - double(m) * lam) - finf);
    if (m % 2 == 1) t = -t;
    acc.add(t);
    cb *= (alpha - m) / (m + 1.0);
    if (std::abs(t) < budget.tail_tol * 0.1) {
      if (++small_streak >= 8) {
        truncated = true;
        ++m;
        break;
      }
    } else {
      small_streak = 0;
    }
  }
  *used += m;
  if (!truncated) {
    double bound = std::abs(cb) * std::abs(f(s - double(sched.m_cap) * lam) - finf);
    if (bound > budget.tail_tol)
      throw ConvergenceError("gl_derivative: binomial tail above tail_tol at m_cap");
  }
  return acc.value() / cpow(lam, Complex(alpha, 0.0));
}

}  // namespace

MethodResult gl_derivative(const ComplexFn& f, Complex s, double alpha,
                           const GLSchedule& schedule, const SeriesBudget& budget) {
  schedule.validate();
  budget.validate();
  if (!(alpha > 0.0)) throw DomainError("gl_derivative: alpha must be > 0");

  const Complex dir = schedule.direction();
  const size_t n = schedule.l_values.size();
  MethodResult res;

  std::vector<Complex> row(n);
  for (size_t i = 0; i < n; ++i)
    row[i] = gl_sum_one(f, s, alpha, schedule.l_values[i] * dir, schedule,
                        budget, &res.terms_used);

  // Neville elimination of the O(l), O(l^2), ... error terms
  const auto& ls = schedule.l_values;
  int levels = std::min<int>(schedule.richardson_levels, int(n) - 1);
  std::vector<double> deltas;
  Complex prev_corner = row[0];
  for (int k = 1; k <= levels; ++k) {
    for (size_t i = 0; i + k < n; ++i) {
      double ratio = ls[i] / ls[i + k];
      row[i] = (row[i + 1] * ratio - row[i]) / (ratio - 1.0);
    }
    deltas.push_back(std::abs(row[0] - prev_corner));
    prev_corner = row[0];
  }
  // extrapolation must be settling: the last deltas may not increase
  // monotonically over the final 3 levels
  if (deltas.size() >= 3) {
    size_t d = deltas.size();
    if (deltas[d - 1] > deltas[d - 2] && deltas[d - 2] > deltas[d - 3])
      throw ConvergenceError("gl_derivative: extrapolation diverging");
  }
  res.value = check_finite(row[0], "gl_derivative");
  res.err_estimate = deltas.empty() ? 0.0 : deltas.back();
  res.converged = res.err_estimate <= std::max(budget.tail_tol,
                                               1e-12 * std::abs(res.value));
  return res;
}

double leibniz_residual(double c, double d, Complex s, double alpha, int N) {
  if (!(c > 0.0) || !(c < d))
    throw DomainError("leibniz_residual: needs 0 < c < d");
  // both sides in closed form; the common factor |e^{(c+d)s}| multiplies the
  // binomial-series defect |(c+d)^alpha - sum_k C(alpha,k) c^k d^{alpha-k}|
  KahanSum partial;
  double cb = 1.0;
  for (int k = 0; k <= N; ++k) {
    partial.add(cb * std::pow(c, k) * std::pow(d, alpha - k));
    cb *= (alpha - k) / (k + 1.0);
  }
  double defect = std::abs(std::pow(c + d, alpha) - partial.value());
  return defect * std::abs(std::exp((c + d) * s));
}

}  // namespace fraczeta

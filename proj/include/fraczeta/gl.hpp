#pragma once

#include <functional>
#include <vector>

#include "fraczeta/core.hpp"

namespace fraczeta {

// Ray selection for the Grunwald-Letnikov difference quotient. The sum
// sum_m C(alpha,m)(-1)^m f(s - m lambda) / lambda^alpha converges only when
// every exponential component of f decays along the ray. For Dirichlet-type
// series (zeta, theta: components e^{cs} with c <= 0) the real forward ray
// diverges; the descending complex ray lambda = l e^{-i 3pi/4} converges and
// realizes the principal branch (-c)^alpha = e^{i pi alpha}|c|^alpha that the
// closed forms carry. Real stays available for rightward-decaying f.
enum class GLRay { RotatedDescending, RealForward };

struct GLSchedule {
  std::vector<double> l_values = {0.2, 0.1, 0.05, 0.025};  // strictly decreasing
  int m_cap = 4096;
  int richardson_levels = 3;
  GLRay ray = GLRay::RotatedDescending;

  void validate() const;
  Complex direction() const;
};

using ComplexFn = std::function<Complex(Complex)>;

// Numerical GL derivative of order alpha > 0 at s: per-step truncated sums,
// Richardson extrapolation across the schedule (leading error O(l)).
// The limit of f along the ray is subtracted before summing; the GL
// derivative of that constant is exactly zero, and the subtraction is what
// makes the binomial truncation criterion meaningful.
MethodResult gl_derivative(const ComplexFn& f, Complex s, double alpha,
                           const GLSchedule& schedule = {},
                           const SeriesBudget& budget = {});

// |D^alpha e^{(c+d)s} - sum_{k<=N} C(alpha,k) c^k e^{cs} d^{alpha-k} e^{ds}|
// via the closed forms on both sides; requires 0 < c < d.
double leibniz_residual(double c, double d, Complex s, double alpha, int N);

}  // namespace fraczeta

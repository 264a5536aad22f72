#include "fraczeta/quadrature.hpp"

#include <cmath>

namespace fraczeta {

void QuadratureConfig::validate() const {
  if (!(split_point > 0.0)) throw DomainError("quadrature: split_point must be > 0");
  if (!(abs_tol > 0.0)) throw DomainError("quadrature: abs_tol must be > 0");
  if (nodes_per_panel < 16) throw DomainError("quadrature: nodes_per_panel too small");
}

namespace {

constexpr double kTmax = 4.1;  // |t| range of the sinh variable

// trapezoid over the double-exponential map at level h = kTmax / n2, doubling
// nodes until the delta settles below tol
template <typename NodeFn>
QuadResult de_quadrature(NodeFn node, const QuadratureConfig& q) {
  QuadResult out;
  Complex prev(0.0, 0.0);
  double h = kTmax / 4.0;
  // level 0: coarse trapezoid including t = 0
  KahanSumComplex acc;
  {
    acc.add(node(0.0));
    for (int i = 1; i * h <= kTmax; ++i) {
      acc.add(node(i * h));
      acc.add(node(-i * h));
      out.evals += 2;
    }
  }
  prev = acc.value() * h;
  double delta = std::abs(prev);
  for (int level = 1;; ++level) {
    h *= 0.5;
    // add the odd nodes of the refined grid
    for (int i = 1; i * h <= kTmax; i += 2) {
      acc.add(node(i * h));
      acc.add(node(-i * h));
      out.evals += 2;
    }
    Complex cur = acc.value() * h;
    delta = std::abs(cur - prev);
    prev = cur;
    out.levels = level;
    double nodes = 2.0 * kTmax / h;
    if (delta < q.abs_tol && level >= 3) break;
    if (nodes >= double(q.nodes_per_panel)) {
      if (delta > q.abs_tol)
        throw QuadratureError("node-doubling failed to reach abs_tol");
      break;
    }
  }
  out.value = prev;
  out.err_estimate = delta;
  return out;
}

}  // namespace

QuadResult tanh_sinh(const RealToComplexFn& f, double a, double b,
                     const QuadratureConfig& q) {
  q.validate();
  const double c = 0.5 * (a + b), r = 0.5 * (b - a);
  auto node = [&](double t) -> Complex {
    double sh = 0.5 * kPi * std::sinh(t);
    double x = c + r * std::tanh(sh);
    double w = r * 0.5 * kPi * std::cosh(t) / (std::cosh(sh) * std::cosh(sh));
    if (x <= a || x >= b || !(w > 0.0) || !std::isfinite(w)) return {0.0, 0.0};
    Complex v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {0.0, 0.0};
    return v * w;
  };
  return de_quadrature(node, q);
}

QuadResult exp_sinh(const RealToComplexFn& f, double a,
                    const QuadratureConfig& q) {
  q.validate();
  auto node = [&](double t) -> Complex {
    double sh = 0.5 * kPi * std::sinh(t);
    double e = std::exp(sh);
    double x = a + e;
    double w = e * 0.5 * kPi * std::cosh(t);
    if (!(x > a) || !std::isfinite(x) || !std::isfinite(w)) return {0.0, 0.0};
    Complex v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {0.0, 0.0};
    return v * w;
  };
  return de_quadrature(node, q);
}

}  // namespace fraczeta

#include "fraczeta/core.hpp"

#include <array>
#include <cmath>

namespace fraczeta {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::Convergence: return "ConvergenceError";
    case ErrorKind::OrderCap: return "OrderCapError";
    case ErrorKind::Quadrature: return "QuadratureError";
    case ErrorKind::NonFinite: return "NonFiniteError";
  }
  return "Error";
}

void SeriesBudget::validate() const {
  if (max_terms_per_axis <= 0 || hard_cap <= 0)
    throw DomainError("budget: term caps must be positive");
  if (max_terms_per_axis > hard_cap)
    throw DomainError("budget: max_terms_per_axis exceeds hard_cap");
  if (!(tail_tol > 0))
    throw DomainError("budget: tail_tol must be positive");
}

Complex cpow(Complex z, Complex w) {
  if (z == Complex(0.0, 0.0)) {
    if (w.real() > 0.0) return {0.0, 0.0};
    throw DomainError("cpow: zero base needs Re(exponent) > 0");
  }
  // put the branch cut's -0.0 side onto the (+) side so Arg(-x) = +pi
  if (z.imag() == 0.0) z = Complex(z.real(), +0.0);
  if (w.imag() == 0.0 && z.imag() == 0.0 && z.real() > 0.0)
    return {std::pow(z.real(), w.real()), 0.0};
  return std::exp(w * std::log(z));
}

Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex r(1.0, 0.0);
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

double falling_factorial(double alpha, int k) {
  double v = 1.0;
  for (int j = 0; j < k; ++j) v *= alpha - j;
  return v;
}

double gen_binom(double alpha, int k) {
  double v = 1.0;
  for (int j = 0; j < k; ++j) v *= (alpha - j) / (j + 1);
  return v;
}

double a_coeff(double alpha, int r, int k, int l) {
  int n = r + k + l;
  double v = 1.0;
  int dr = 1, dk = 1, dl = 1;
  for (int j = 0; j < n; ++j) {
    v *= alpha - j;
    if (dr <= r)
      v /= dr++;
    else if (dk <= k)
      v /= dk++;
    else
      v /= dl++;
  }
  return v;
}

Complex compensated_sum(std::span<const Complex> terms) {
  KahanSumComplex acc;
  for (const Complex& t : terms) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw DomainError("compensated_sum: non-finite term");
    acc.add(t);
  }
  return acc.value();
}

Complex check_finite(const Complex& z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw NonFiniteError(std::string(where) + ": non-finite result");
  return z;
}

std::span<const double> bernoulli_even() {
  static const std::array<double, 20> b = {
      1.0 / 6.0,
      -1.0 / 30.0,
      1.0 / 42.0,
      -1.0 / 30.0,
      5.0 / 66.0,
      -691.0 / 2730.0,
      7.0 / 6.0,
      -3617.0 / 510.0,
      43867.0 / 798.0,
      -174611.0 / 330.0,
      854513.0 / 138.0,
      -236364091.0 / 2730.0,
      8553103.0 / 6.0,
      -23749461029.0 / 870.0,
      8615841276005.0 / 14322.0,
      -7709321041217.0 / 510.0,
      2577687858367.0 / 6.0,
      -26315271553053477373.0 / 1919190.0,
      2929993913841559.0 / 6.0,
      -261082718496449122051.0 / 13530.0,
  };
  return {b.data(), b.size()};
}

}  // namespace fraczeta

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <span>
#include <vector>

namespace fraczeta {

using Complex = std::complex<double>;

enum class ErrorKind {
  Domain,
  Pole,
  Convergence,
  OrderCap,
  Quadrature,
  NonFinite,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(ErrorKind::Domain, m) {}
};
struct PoleError : Error {
  explicit PoleError(const std::string& m) : Error(ErrorKind::Pole, m) {}
};
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& m) : Error(ErrorKind::Convergence, m) {}
};
struct OrderCapError : Error {
  explicit OrderCapError(const std::string& m) : Error(ErrorKind::OrderCap, m) {}
};
struct QuadratureError : Error {
  explicit QuadratureError(const std::string& m) : Error(ErrorKind::Quadrature, m) {}
};
struct NonFiniteError : Error {
  explicit NonFiniteError(const std::string& m) : Error(ErrorKind::NonFinite, m) {}
};

// Truncation policy shared by the series evaluators.
struct SeriesBudget {
  std::int64_t max_terms_per_axis = 4'000'000;
  double tail_tol = 1e-12;
  std::int64_t hard_cap = 10'000'000;

  void validate() const;
};

// A computed value plus convergence metadata. `converged` means the
// err_estimate met the requesting budget's tail_tol; evaluators may return
// converged = false with the best available partial value (asymptotic series
// truncated at their smallest term do exactly that).
struct MethodResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  std::int64_t terms_used = 0;
  bool converged = false;
  std::string variant;  // sign/phase convention used, when one applies
};

// Principal-branch complex power: exp(w Log z), Im(Log z) in (-pi, pi].
// cpow(0, w) = 0 for Re(w) > 0; DomainError otherwise.
Complex cpow(Complex z, Complex w);

// Integer power by repeated squaring; exact-branch and free of the spurious
// imaginary parts exp(n log z) picks up on the negative real axis.
Complex ipow(Complex z, int n);

// alpha (alpha-1) ... (alpha-k+1); 1 for k = 0.
double falling_factorial(double alpha, int k);

// Generalized binomial coefficient: falling_factorial(alpha, k) / k!.
double gen_binom(double alpha, int k);

// A^alpha_{r,k,l} = falling_factorial(alpha, r+k+l) / (r! k! l!), accumulated
// one factor at a time so no individual factorial overflows.
double a_coeff(double alpha, int r, int k, int l);

// Neumaier-compensated accumulator, one per real component.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanSumComplex {
 public:
  void add(const Complex& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

Complex compensated_sum(std::span<const Complex> terms);

// Throws NonFiniteError unless both components are finite.
Complex check_finite(const Complex& z, const char* where);

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLog2Pi = 1.837877066409345483560659472811235279;

// Bernoulli numbers B_2, B_4, ..., B_40 (index i holds B_{2(i+1)}).
std::span<const double> bernoulli_even();

}  // namespace fraczeta

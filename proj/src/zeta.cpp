#include "fraczeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fraczeta/gammafn.hpp"

namespace fraczeta {

namespace {

constexpr int kEmCorrections = 12;  // Bernoulli terms M

// derivatives of the rising-factorial polynomial P(s) = s(s+1)...(s+n-1),
// returned as P^{(i)}(s) for i = 0..lmax
std::vector<Complex> rising_factorial_derivs(Complex s, int n, int lmax) {
  std::vector<Complex> d(lmax + 1, Complex(0.0, 0.0));
  d[0] = 1.0;
  for (int t = 0; t < n; ++t) {
    for (int i = lmax; i >= 0; --i) {
      d[i] = d[i] * (s + double(t)) + (i > 0 ? double(i) * d[i - 1] : Complex(0.0, 0.0));
    }
  }
  return d;
}

// d^l/ds^l of the Euler-Maclaurin Bernoulli correction term
//   (s)_{2j-1} * (N+a)^{-s-2j+1}
Complex em_correction_deriv(Complex s, double U, Complex base_pow, int j, int l) {
  std::vector<Complex> P = rising_factorial_derivs(s, 2 * j - 1, l);
  // base_pow = (N+a)^{-s-2j+1}; d^{l-i} of it = (-U)^{l-i} base_pow
  Complex acc(0.0, 0.0);
  double c = 1.0;
  for (int i = 0; i <= l; ++i) {
    acc += c * P[i] * std::pow(-U, double(l - i));
    c = c * double(l - i) / double(i + 1);
  }
  return acc * base_pow;
}

}  // namespace

MethodResult hurwitz_zeta(Complex s, double a, int l) {
  if (!(a > 0.0 && a <= 1.0))
    throw DomainError("hurwitz_zeta: a must be in (0, 1]");
  if (s == Complex(1.0, 0.0))
    throw PoleError("hurwitz_zeta: pole at s = 1");
  if (l < 0 || l > kDerivOrderCap)
    throw OrderCapError("hurwitz_zeta: derivative order above cap");

  // For Re(s) < 0 the direct terms grow like (k+a)^{|Re s|} and the tiny
  // continued value emerges from cancellation, so N is kept at the smallest
  // value for which the Bernoulli corrections still converge. On the right
  // half-plane the usual operating point applies.
  int N;
  if (s.real() >= 0.0) {
    N = std::max(15, int(std::ceil(std::abs(s.imag()))));
  } else {
    N = std::max(4, int(std::ceil((std::abs(s) + 2.0 * kEmCorrections + 4.0) /
                                  (2.0 * kPi))));
  }
  MethodResult res;

  // direct part: sum_{k<N} d^l/ds^l (k+a)^{-s} = (-log(k+a))^l (k+a)^{-s}
  KahanSumComplex acc;
  for (int k = 0; k < N; ++k) {
    double L = std::log(k + a);
    Complex t = std::exp(-s * L);
    if (l > 0) t *= std::pow(-L, double(l));
    acc.add(t);
  }

  const double U = std::log(N + a);
  const Complex em = std::exp(-s * U);  // (N+a)^{-s}

  // integral term d^l/ds^l [ (N+a)^{1-s} / (s-1) ]
  {
    Complex integral(0.0, 0.0);
    double c = 1.0;
    for (int j = 0; j <= l; ++j) {
      double fac = 1.0;  // (l-j)!
      for (int i = 2; i <= l - j; ++i) fac *= i;
      double sgn = ((l - j) % 2 == 0) ? 1.0 : -1.0;
      integral += c * std::pow(-U, double(j)) * sgn * fac / ipow(s - 1.0, l - j + 1);
      c = c * double(l - j) / double(j + 1);
    }
    integral *= em * (N + a);  // e^{(1-s)U} = (N+a) e^{-sU}
    acc.add(integral);
  }

  // + f(N)/2 term, differentiated
  acc.add(0.5 * std::pow(-U, double(l)) * em);

  // Bernoulli corrections: + B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
  auto bern = bernoulli_even();
  double fact2j = 2.0;  // (2j)!
  Complex base_pow = em * (N + a);  // (N+a)^{-s+1}
  double inv_na2 = 1.0 / ((N + a) * (N + a));
  Complex last_term(0.0, 0.0);
  for (int j = 1; j <= kEmCorrections + 1; ++j) {
    base_pow *= inv_na2;  // (N+a)^{-s-2j+1}
    Complex term = bern[j - 1] / fact2j * em_correction_deriv(s, U, base_pow, j, l);
    if (j <= kEmCorrections)
      acc.add(term);
    else
      last_term = term;  // first omitted: the error estimate
    fact2j *= double(2 * j + 1) * double(2 * j + 2);
  }

  res.value = check_finite(acc.value(), "hurwitz_zeta");
  res.err_estimate = std::abs(last_term) + 4e-16 * std::abs(res.value);
  res.terms_used = N + kEmCorrections;
  res.converged = true;
  return res;
}

namespace {

// Euler-Maclaurin tail of sum_{q>=N} (log q)^l q^{-sig} (monotone case z = 1).
// The integral term is exact: Gamma(l+1, (sig-1) log N) / (sig-1)^{l+1} with
// integer l, expanded as the finite sum l! e^{-y} sum_j y^j / j!.
Complex monotone_tail(Complex sig, int N, int l, double* err) {
  const double U = std::log(double(N));
  Complex y = (sig - 1.0) * U;
  Complex ey = std::exp(-y);
  double lf = 1.0;
  for (int j = 2; j <= l; ++j) lf *= j;
  Complex integral(0.0, 0.0);
  {
    Complex yp(1.0, 0.0);
    double jf = 1.0;
    KahanSumComplex isum;
    for (int j = 0; j <= l; ++j) {
      isum.add(yp / jf);
      yp *= y;
      jf *= (j + 1.0);
    }
    integral = lf * ey * isum.value() / ipow(sig - 1.0, l + 1);
  }
  // f(x) = u^l x^{-sig}, u = log x; derivative family u^{l-i} x^{-sig-j}
  const Complex xs = std::exp(-sig * U);  // N^{-sig}
  auto fterm = [&](int i, int j) {
    return std::pow(U, double(l - i)) * xs / std::pow(double(N), double(j));
  };
  Complex tail = integral + 0.5 * fterm(0, 0);
  // coefficient recursion over (i, j), complex coefficients
  struct Co {
    int i, j;
    Complex c;
  };
  std::vector<Co> co = {{0, 0, Complex(1.0, 0.0)}};
  auto advance = [&]() {
    std::vector<Co> nc;
    auto put = [&](int i, int j, Complex c) {
      for (auto& e : nc)
        if (e.i == i && e.j == j) {
          e.c += c;
          return;
        }
      nc.push_back({i, j, c});
    };
    for (auto& e : co) {
      if (l - e.i != 0) put(e.i + 1, e.j + 1, e.c * double(l - e.i));
      put(e.i, e.j + 1, e.c * (-(sig + double(e.j))));
    }
    co = std::move(nc);
  };
  auto bern = bernoulli_even();
  int d = 0;
  double fact2j = 2.0;
  Complex last(0.0, 0.0);
  for (int j = 1; j <= kEmCorrections + 1; ++j) {
    while (d < 2 * j - 1) {
      advance();
      ++d;
    }
    Complex fd(0.0, 0.0);
    for (auto& e : co) fd += e.c * fterm(e.i, e.j);
    Complex term = bern[j - 1] / fact2j * fd;
    if (j <= kEmCorrections)
      tail -= term;
    else
      last = term;
    fact2j *= double(2 * j + 1) * double(2 * j + 2);
  }
  *err = std::abs(last);
  return tail;
}

// sum_{q >= N0} f(q) z^q by iterated Abel summation by parts, |z| = 1, z != 1:
//   T = sum_j c^{j+1} D^j f(N0 + j) z^{N0+j} ... with c = 1/(1-z) and forward
// difference tables; the J-th differenced remainder is summed directly.
Complex abel_tail(Complex s, int N0, int l, Complex z, const SeriesBudget& budget,
                  double* err, std::int64_t* used) {
  const Complex c = 1.0 / (1.0 - z);
  const int J = 14;
  const int tail_terms = 256;
  auto f = [&](std::int64_t q) {
    return std::pow(std::log(double(q)), double(l)) *
           std::exp((s - 1.0) * std::log(double(q)));
  };
  std::vector<Complex> col(J + tail_terms + 2);
  for (size_t i = 0; i < col.size(); ++i) col[i] = f(N0 + std::int64_t(i));
  *used += std::int64_t(col.size());

  KahanSumComplex acc;
  Complex zp = cpow(z, Complex(double(N0), 0.0));
  Complex cp = c;
  double boundary_mag = 0.0;
  for (int j = 0; j < J; ++j) {
    Complex term = cp * col[0] * zp;
    acc.add(term);
    boundary_mag = std::abs(term);
    for (size_t i = 0; i + 1 < col.size(); ++i) col[i] = col[i + 1] - col[i];
    col.pop_back();
    zp *= z;
    cp *= c;
  }
  // remainder: c^J sum_{q >= N0+J} D^J f(q) z^q, terms decay like q^{-Re(1-s)-J}
  Complex cj = cp / c;
  KahanSumComplex rem;
  double last_mag = 0.0;
  for (int i = 0; i < tail_terms; ++i) {
    Complex term = cj * col[i] * zp;
    rem.add(term);
    last_mag = std::abs(term);
    zp *= z;
    if (last_mag < budget.tail_tol * 1e-3 && i > 8) break;
  }
  acc.add(rem.value());
  *err = last_mag * 8.0 + boundary_mag * 1e-14;
  return acc.value();
}

}  // namespace

MethodResult periodic_log_series(Complex s, double a, int l, TrigKind kind,
                                 const SeriesBudget& budget) {
  budget.validate();
  if (!(a > 0.0 && a <= 1.0))
    throw DomainError("periodic_log_series: a must be in (0, 1]");
  if (s.real() >= 0.0)
    throw DomainError("periodic_log_series: needs Re(s) < 0");
  if (l < 0 || l > kDerivOrderCap)
    throw OrderCapError("periodic_log_series: order above cap");

  MethodResult res;
  if ((a == 1.0 || a == 0.5) && kind == TrigKind::Sin) {
    res.converged = true;
    return res;  // sin(2 pi q a) = 0 termwise at a in {1/2, 1}
  }

  const Complex sig = 1.0 - s;  // series is q^{-sig}, Re(sig) > 1
  // direct terms up to N0; keep N0 beyond the peak of (log q)^l q^{-Re(sig)}
  double peak = std::exp(double(l) / (sig.real() - 1.0));
  std::int64_t N0 = std::max<std::int64_t>(48, std::int64_t(2.0 * peak));
  if (N0 > budget.max_terms_per_axis)
    throw ConvergenceError("periodic_log_series: budget too small for the term peak");

  KahanSumComplex acc;
  std::int64_t used = 0;
  if (a == 1.0) {
    for (std::int64_t q = 1; q < N0; ++q)
      acc.add(std::pow(std::log(double(q)), double(l)) *
              std::exp(-sig * std::log(double(q))));
    used = N0;
    double tail_err = 0.0;
    acc.add(monotone_tail(sig, int(N0), l, &tail_err));
    res.value = check_finite(acc.value(), "periodic_log_series");
    res.err_estimate = tail_err + 8e-16 * std::abs(res.value);
    res.terms_used = used + kEmCorrections;
    res.converged = res.err_estimate <= budget.tail_tol;
    // only a genuine truncation failure is an error; a roundoff-floor above
    // tail_tol on a large value is reported through err_estimate instead
    if (tail_err > budget.tail_tol * 1e3 && tail_err > 1e-12 * std::abs(res.value))
      throw ConvergenceError("periodic_log_series: tail bound unreachable");
    return res;
  }

  // snap the half-offset phase exactly onto the real axis
  const Complex z = (a == 0.5) ? Complex(-1.0, 0.0)
                               : std::polar(1.0, 2.0 * kPi * a);
  const Complex zb = std::conj(z);
  // trig series as half-sums of the two geometric-phase series
  Complex zp = z, zbp = zb;
  for (std::int64_t q = 1; q < N0; ++q) {
    double w = std::pow(std::log(double(q)), double(l));
    Complex base = w * std::exp((s - 1.0) * std::log(double(q)));
    Complex t = (kind == TrigKind::Cos) ? base * 0.5 * (zp + zbp)
                                        : base * Complex(0.0, -0.5) * (zp - zbp);
    acc.add(t);
    zp *= z;
    zbp *= zb;
  }
  used = N0;
  double e1 = 0.0, e2 = 0.0;
  Complex t1 = abel_tail(s, int(N0), l, z, budget, &e1, &used);
  Complex t2 = abel_tail(s, int(N0), l, zb, budget, &e2, &used);
  Complex tail = (kind == TrigKind::Cos) ? 0.5 * (t1 + t2)
                                         : Complex(0.0, -0.5) * (t1 - t2);
  acc.add(tail);
  res.value = check_finite(acc.value(), "periodic_log_series");
  double trunc_err = e1 + e2;
  res.err_estimate = trunc_err + 8e-16 * std::abs(res.value);
  res.terms_used = used;
  res.converged = res.err_estimate <= budget.tail_tol;
  // the failure scale is the component series, not the (possibly cancelled)
  // combination
  double scale = std::abs(res.value) + std::abs(t1) + std::abs(t2);
  if (trunc_err > budget.tail_tol * 1e3 && trunc_err > 1e-12 * scale)
    throw ConvergenceError("periodic_log_series: tail bound unreachable");
  return res;
}

MethodResult classical_fe_hurwitz(Complex s, double a, const SeriesBudget& budget) {
  if (s.real() >= 0.0)
    throw DomainError("classical_fe_hurwitz: needs Re(s) < 0");
  MethodResult C = periodic_log_series(s, a, 0, TrigKind::Cos, budget);
  MethodResult S = periodic_log_series(s, a, 0, TrigKind::Sin, budget);
  Complex pref = 2.0 * gamma(1.0 - s) * cpow(Complex(2.0 * kPi, 0.0), s - 1.0);
  Complex val = pref * (std::sin(0.5 * kPi * s) * C.value +
                        std::cos(0.5 * kPi * s) * S.value);
  MethodResult res;
  res.value = check_finite(val, "classical_fe_hurwitz");
  res.err_estimate = std::abs(pref) * (C.err_estimate + S.err_estimate) +
                     4e-16 * std::abs(val);
  res.terms_used = C.terms_used + S.terms_used;
  res.converged = C.converged && S.converged;
  return res;
}

}  // namespace fraczeta

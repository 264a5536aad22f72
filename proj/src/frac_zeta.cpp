#include "fraczeta/frac_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "fraczeta/gammafn.hpp"
#include "fraczeta/zeta.hpp"

namespace fraczeta {

void FracEvalPoint::validate() const {
  if (!(a > 0.0 && a <= 1.0))
    throw DomainError("frac point: a must be in (0, 1]");
  if (!(alpha > 0.0))
    throw DomainError("frac point: alpha must be > 0");
  if (std::abs(alpha - std::round(alpha)) < kAlphaIntegerGuard)
    throw DomainError("frac point: alpha within guard band of an integer");
}

void FracEvalPoint::require_left_halfplane() const {
  if (!(s.real() < 0.0))
    throw DomainError("functional-equation evaluators need Re(s) < 0");
}

namespace {

constexpr int kHCap = kDerivOrderCap;

Complex eipa(double alpha) { return cpow(Complex(-1.0, 0.0), Complex(alpha, 0.0)); }

// ---- shared building blocks for the FE evaluators --------------------------

struct FeBlocks {
  Complex s;
  double a;
  SeriesBudget budget;
  std::vector<Complex> gd;                 // Gamma^{(r)}(1-s)
  std::vector<Complex> pls_cos, pls_sin;   // unsigned (log q)^l series
  double series_err = 0.0;
  std::int64_t terms = 0;

  FeBlocks(Complex s_, double a_, const SeriesBudget& b) : s(s_), a(a_), budget(b) {
    gd = gamma_derivs(1.0 - s, kHCap);
  }

  void ensure_l(int l) {
    while (int(pls_cos.size()) <= l) {
      int ll = int(pls_cos.size());
      MethodResult c = periodic_log_series(s, a, ll, TrigKind::Cos, budget);
      MethodResult d = periodic_log_series(s, a, ll, TrigKind::Sin, budget);
      pls_cos.push_back(c.value);
      pls_sin.push_back(d.value);
      series_err += c.err_estimate + d.err_estimate;
      terms += c.terms_used + d.terms_used;
    }
  }
};

// Superasymptotic accumulation of h-indexed terms: stop when converged
// (3 consecutive |T_h| below tail_tol) or at the smallest term once the
// series turns (3 consecutive increases). At the order cap with neither,
// the partial value is meaningless and we raise.
struct HSum {
  Complex value{0.0, 0.0};
  double err = 0.0;
  bool converged = false;
  int h_stop = 0;
};

template <typename TermFn>
HSum superasymptotic_hsum(const SeriesBudget& budget, TermFn term) {
  std::vector<Complex> partial;
  std::vector<double> mags;
  KahanSumComplex acc;
  int small_streak = 0;
  int grow_streak = 0;
  int min_idx = -1;
  double min_mag = 0.0;
  HSum out;
  for (int h = 0; h <= kHCap; ++h) {
    Complex t = term(h);
    acc.add(t);
    partial.push_back(acc.value());
    double m = std::abs(t);
    mags.push_back(m);
    if (min_idx < 0 || m < min_mag) {
      min_idx = h;
      min_mag = m;
    }
    small_streak = (m < budget.tail_tol) ? small_streak + 1 : 0;
    grow_streak = (h > 0 && m > mags[h - 1]) ? grow_streak + 1 : 0;
    if (small_streak >= 3) {
      out.value = partial[h];
      out.err = 3.0 * budget.tail_tol;
      out.converged = true;
      out.h_stop = h;
      return out;
    }
    if (grow_streak >= 3 && min_idx >= 1) {
      out.value = partial[min_idx];
      out.err = min_mag + (min_idx + 1 < int(mags.size()) ? mags[min_idx + 1] : 0.0);
      out.converged = out.err <= budget.tail_tol;
      out.h_stop = min_idx;
      return out;
    }
  }
  throw ConvergenceError("fe evaluator: h-sum did not settle within the order cap");
}

struct KCollapse {
  Complex sin_coef, cos_coef;
};

// Closed form of the geometric k-direction: with L the log base and
// beta = alpha - h,
//   sum_k C(beta,k) (-pi/2L)^k sin(pi(s+k)/2 + phi) =
//     [e^{i(pi s/2+phi)} (tau_bar/L)^beta - e^{-i(pi s/2+phi)} (tau/L)^beta]/(2i)
// and the cosine analogue, tau = L + i pi/2. |pi/2L| < 1 for L >= log(2 pi).
KCollapse k_collapse(Complex s, double L, double beta, double phi) {
  Complex tau(L, 0.5 * kPi);
  Complex taub = std::conj(tau);
  Complex tpow = cpow(tau / L, Complex(beta, 0.0));
  Complex tbpow = cpow(taub / L, Complex(beta, 0.0));
  Complex ep = std::exp(Complex(0.0, 1.0) * (0.5 * kPi * s + phi));
  Complex em = std::exp(Complex(0.0, -1.0) * (0.5 * kPi * s + phi));
  KCollapse out;
  out.sin_coef = (ep * tbpow - em * tpow) / Complex(0.0, 2.0);
  out.cos_coef = 0.5 * (ep * tbpow + em * tpow);
  return out;
}

double variant_sign(FormulaVariant v, int l) {
  if (v.series_sign == SeriesSign::PaperNegativeLog && (l % 2 != 0)) return -1.0;
  return 1.0;
}

}  // namespace

MethodResult frac_hurwitz_fe_triple(const FracEvalPoint& p, FormulaVariant variant,
                                    const SeriesBudget& budget) {
  p.validate();
  p.require_left_halfplane();
  budget.validate();
  FeBlocks blocks(p.s, p.a, budget);
  const double L = kLog2Pi;
  const Complex pref = 2.0 * cpow(Complex(2.0 * kPi, 0.0), p.s - 1.0) * eipa(p.alpha);

  auto term = [&](int h) {
    blocks.ensure_l(h);
    KCollapse kc = k_collapse(p.s, L, p.alpha - h, 0.0);
    double fh = falling_factorial(p.alpha, h);
    KahanSumComplex sum;
    double binrl = 1.0;  // 1/(r! l!) scaled by h!: use direct 1/(r! l!)
    (void)binrl;
    double rfact = 1.0;
    for (int r = 0; r <= h; ++r) {
      int l = h - r;
      double lfact = 1.0;
      for (int j = 2; j <= l; ++j) lfact *= j;
      double A = fh / (rfact * lfact);
      double sgn = variant_sign(variant, l);
      Complex F = sgn * blocks.pls_cos[l];
      Complex H = sgn * blocks.pls_sin[l];
      sum.add(A * blocks.gd[r] * (F * kc.sin_coef + H * kc.cos_coef));
      rfact *= (r + 1.0);
    }
    return pref * std::pow(L, p.alpha - h) * sum.value();
  };

  HSum hs = superasymptotic_hsum(budget, term);
  MethodResult res;
  res.value = check_finite(hs.value, "frac_hurwitz_fe_triple");
  res.err_estimate = hs.err + std::abs(pref) * blocks.series_err;
  res.terms_used = blocks.terms + hs.h_stop + 1;
  res.converged = hs.converged;
  res.variant = variant.name();
  return res;
}

MethodResult frac_hurwitz_fe_trig(const FracEvalPoint& p, FormulaVariant variant,
                                  const SeriesBudget& budget) {
  p.validate();
  p.require_left_halfplane();
  budget.validate();
  FeBlocks blocks(p.s, p.a, budget);
  const double L = kLog2Pi;
  const Complex pref = 2.0 * cpow(Complex(2.0 * kPi, 0.0), p.s - 1.0) * eipa(p.alpha);
  const Complex sin_s = std::sin(0.5 * kPi * p.s);
  const Complex cos_s = std::cos(0.5 * kPi * p.s);

  auto term = [&](int h) {
    blocks.ensure_l(h);
    // k-sums inside a_{r alpha l} and b_{r alpha l}:
    //   sum_k C(beta,k)(-pi/2L)^k cos(pi k/2) and the sine analogue
    double beta = p.alpha - h;
    Complex tau(L, 0.5 * kPi);
    Complex tpow = cpow(tau / L, Complex(beta, 0.0));
    Complex tbpow = cpow(std::conj(tau) / L, Complex(beta, 0.0));
    Complex kcos = 0.5 * (tbpow + tpow);
    Complex ksin = (tbpow - tpow) / Complex(0.0, 2.0);
    double fh = falling_factorial(p.alpha, h);
    KahanSumComplex sum;
    double rfact = 1.0;
    for (int r = 0; r <= h; ++r) {
      int l = h - r;
      double lfact = 1.0;
      for (int j = 2; j <= l; ++j) lfact *= j;
      double A = fh / (rfact * lfact);
      double sgn = variant_sign(variant, l);
      Complex F = sgn * blocks.pls_cos[l];
      Complex H = sgn * blocks.pls_sin[l];
      Complex a_rl = A * std::pow(L, p.alpha - h) * (F * kcos - H * ksin);
      Complex b_rl = A * std::pow(L, p.alpha - h) * (F * ksin + H * kcos);
      sum.add((a_rl * sin_s + b_rl * cos_s) * blocks.gd[r]);
      rfact *= (r + 1.0);
    }
    return pref * sum.value();
  };

  HSum hs = superasymptotic_hsum(budget, term);
  MethodResult res;
  res.value = check_finite(hs.value, "frac_hurwitz_fe_trig");
  res.err_estimate = hs.err + std::abs(pref) * blocks.series_err;
  res.terms_used = blocks.terms + hs.h_stop + 1;
  res.converged = hs.converged;
  res.variant = variant.name();
  return res;
}

MethodResult frac_hurwitz_fe_simplified(const FracEvalPoint& p,
                                        const SeriesBudget& budget) {
  p.validate();
  p.require_left_halfplane();
  budget.validate();
  FeBlocks blocks(p.s, p.a, budget);
  const Complex itau(kLog2Pi, 0.5 * kPi);
  const Complex itaub = std::conj(itau);
  const Complex pref = Complex(0.0, 1.0) * cpow(Complex(2.0 * kPi, 0.0), p.s - 1.0);
  const Complex ep = std::exp(Complex(0.0, 0.5 * kPi) * p.s);
  const Complex em = std::exp(Complex(0.0, -0.5 * kPi) * p.s);

  auto term = [&](int h) {
    blocks.ensure_l(h);
    // d^h/ds^h [ g(s) Gamma(1-s) ], g = C + iS with true log powers
    KahanSumComplex dh;
    double c = 1.0;
    for (int r = 0; r <= h; ++r) {
      int l = h - r;
      double sgn = (r % 2 == 0) ? 1.0 : -1.0;
      Complex gl = blocks.pls_cos[l] + Complex(0.0, 1.0) * blocks.pls_sin[l];
      dh.add(c * sgn * blocks.gd[r] * gl);
      c = c * double(h - r) / double(r + 1);
    }
    Complex bracket = em * cpow(itaub, Complex(p.alpha - h, 0.0)) -
                      ep * cpow(itau, Complex(p.alpha - h, 0.0));
    return pref * gen_binom(p.alpha, h) * dh.value() * bracket;
  };

  HSum hs = superasymptotic_hsum(budget, term);
  MethodResult res;
  res.value = check_finite(hs.value, "frac_hurwitz_fe_simplified");
  res.err_estimate = hs.err + std::abs(pref) * blocks.series_err;
  res.terms_used = blocks.terms + hs.h_stop + 1;
  res.converged = hs.converged;
  res.variant = "as_printed_eq38";
  return res;
}

MethodResult frac_hurwitz_fe_rational(Complex s, int pnum, int q, double alpha,
                                      const SeriesBudget& budget) {
  if (q < 1 || pnum < 1 || pnum > q)
    throw DomainError("frac_hurwitz_fe_rational: need 1 <= p <= q");
  FracEvalPoint pt{s, double(pnum) / double(q), alpha};
  pt.validate();
  pt.require_left_halfplane();
  budget.validate();

  const double Lq = std::log(2.0 * kPi * q);
  const Complex pref = 2.0 * cpow(Complex(2.0 * kPi * q, 0.0), s - 1.0) * eipa(alpha);
  std::vector<Complex> gd = gamma_derivs(1.0 - s, kHCap);
  // zeta^{(l)}(1 - s, h/q), grown on demand
  std::vector<std::vector<Complex>> zd(q);
  double inner_err = 0.0;
  std::int64_t terms = 0;
  auto ensure_l = [&](int l) {
    for (int h = 1; h <= q; ++h) {
      auto& col = zd[h - 1];
      while (int(col.size()) <= l) {
        MethodResult r = hurwitz_zeta(1.0 - s, double(h) / double(q), int(col.size()));
        col.push_back(r.value);
        inner_err += r.err_estimate;
        terms += r.terms_used;
      }
    }
  };

  auto term = [&](int hh) {
    ensure_l(hh);
    double fh = falling_factorial(alpha, hh);
    KahanSumComplex sum;
    double mfact = 1.0;
    for (int m = 0; m <= hh; ++m) {
      int l = hh - m;
      double lfact = 1.0;
      for (int j = 2; j <= l; ++j) lfact *= j;
      double A = fh / (mfact * lfact);
      for (int h = 1; h <= q; ++h) {
        double phi = 2.0 * kPi * double(h) * double(pnum) / double(q);
        KCollapse kc = k_collapse(s, Lq, alpha - hh, phi);
        sum.add(A * gd[m] * kc.sin_coef * zd[h - 1][l]);
      }
      mfact *= (m + 1.0);
    }
    return pref * std::pow(Lq, alpha - hh) * sum.value();
  };

  HSum hs = superasymptotic_hsum(budget, term);
  MethodResult res;
  res.value = check_finite(hs.value, "frac_hurwitz_fe_rational");
  res.err_estimate = hs.err + std::abs(pref) * inner_err;
  res.terms_used = terms + hs.h_stop + 1;
  res.converged = hs.converged;
  res.variant = "hurwitz_derivative_inner";
  return res;
}

MethodResult frac_zeta_series(const FracEvalPoint& p, const SeriesBudget& budget) {
  p.validate();
  budget.validate();
  const double sigma = p.s.real();
  if (!(sigma > 1.0 + p.alpha))
    throw DomainError("frac_zeta_series: needs Re(s) > 1 + alpha");

  const Complex phase = eipa(p.alpha);
  KahanSumComplex acc;
  // k = 0 term: cpow(log a, alpha) / a^s (zero at a = 1)
  if (p.a < 1.0)
    acc.add(cpow(Complex(std::log(p.a), 0.0), Complex(p.alpha, 0.0)) *
            std::exp(-p.s * std::log(p.a)));

  auto tail_bound = [&](double N) {
    // int_N^inf log^alpha(x+a) (x+a)^{-sigma} dx
    //   = Gamma(alpha+1, (sigma-1) U) / (sigma-1)^{alpha+1}, U = log(N+a);
    // bounded via the first terms of the CF: (y^a e^-y)(1 + a/y + ...)
    double U = std::log(N + p.a);
    double y = (sigma - 1.0) * U;
    double g = std::pow(y, p.alpha) * std::exp(-y) *
               (1.0 + p.alpha / y * (1.0 + (p.alpha - 1.0) / y));
    return g / std::pow(sigma - 1.0, p.alpha + 1.0);
  };

  std::int64_t k = 1;
  bool ok = false;
  for (; k <= budget.max_terms_per_axis; ++k) {
    double x = double(k) + p.a;
    double L = std::log(x);
    acc.add(std::pow(L, p.alpha) * std::exp(-p.s * L));
    if ((k & 1023) == 0 && tail_bound(double(k)) < budget.tail_tol) {
      ok = true;
      break;
    }
  }
  MethodResult res;
  res.terms_used = k;
  res.err_estimate = tail_bound(double(k));
  if (!ok && res.err_estimate > budget.tail_tol)
    throw ConvergenceError("frac_zeta_series: tail bound unreachable in budget");
  res.value = check_finite(phase * acc.value(), "frac_zeta_series");
  res.converged = true;
  res.variant = "direct_series";
  return res;
}

namespace {

std::once_flag g_variant_once;
FormulaVariant g_selected{SeriesSign::ProofPositiveLog};

}  // namespace

FormulaVariant audit_selected_variant() {
  // Discriminate by the rational-offset reduction at p = q = 1, which
  // consumes true zeta derivatives and must match the triple sum's a = 1 path.
  std::call_once(g_variant_once, [] {
    FracEvalPoint pt{Complex(-2.5, 0.0), 1.0, 0.5};
    SeriesBudget b;
    Complex ref = frac_hurwitz_fe_rational(pt.s, 1, 1, pt.alpha, b).value;
    double d_neg = std::abs(
        frac_hurwitz_fe_triple(pt, {SeriesSign::PaperNegativeLog}, b).value - ref);
    double d_pos = std::abs(
        frac_hurwitz_fe_triple(pt, {SeriesSign::ProofPositiveLog}, b).value - ref);
    g_selected.series_sign = d_neg <= d_pos ? SeriesSign::PaperNegativeLog
                                            : SeriesSign::ProofPositiveLog;
  });
  return g_selected;
}

ResidualReport convolution_identity_residual(Complex s, double a, double alpha,
                                             std::int64_t N,
                                             const SeriesBudget& budget) {
  if (N < 1) throw DomainError("convolution: N must be positive");
  FracEvalPoint pt{s, a, alpha};
  pt.validate();
  if (!(s.real() > 1.0 + alpha))
    throw DomainError("convolution: needs Re(s) > 1 + alpha");

  MethodResult fz = frac_zeta_series(pt, budget);
  MethodResult hz = hurwitz_zeta(s, a, 0);
  const Complex lhs = fz.value * hz.value;
  const Complex phase = eipa(alpha);

  // sieve both divisor-weighted coefficient arrays
  std::vector<double> lit(N + 1, 0.0);   // sum_{d|k} |log(d+a)|^alpha-weights (signed via cpow phase later)
  // literal reading: weight w(d) = cpow(log(d+a), alpha); real for d+a >= 1
  for (std::int64_t d = 1; d <= N; ++d) {
    double w = std::pow(std::log(double(d) + a), alpha);
    for (std::int64_t k = d; k <= N; k += d) lit[k] += w;
  }
  KahanSumComplex rhs_lit;
  // k = 0 term: d | 0 = {0}: cpow(log a, alpha) / a^s
  if (a < 1.0)
    rhs_lit.add(cpow(Complex(std::log(a), 0.0), Complex(alpha, 0.0)) *
                std::exp(-s * std::log(a)) / phase);
  for (std::int64_t k = 1; k <= N; ++k)
    rhs_lit.add(lit[k] * std::exp(-s * std::log(double(k) + a)));
  Complex rhs_literal = phase * rhs_lit.value();

  // classical reading at a = 1: sum_n (sum_{d|n} log^alpha d) / n^s
  Complex rhs_classical(0.0, 0.0);
  if (a == 1.0) {
    std::vector<double> cls(N + 2, 0.0);
    for (std::int64_t d = 2; d <= N + 1; ++d) {
      double w = std::pow(std::log(double(d)), alpha);
      for (std::int64_t n = d; n <= N + 1; n += d) cls[n] += w;
    }
    KahanSumComplex rc;
    for (std::int64_t n = 2; n <= N + 1; ++n)
      rc.add(cls[n] * std::exp(-s * std::log(double(n))));
    rhs_classical = phase * rc.value();
  }

  // truncation tails: coefficients are O(d(k) log^alpha k); crude d(k) <= 2 sqrt(k)
  double sigma = s.real();
  double tailN = 4.0 * std::pow(std::log(double(N) + 1.0), alpha + 1.0) *
                 std::pow(double(N), 1.5 - sigma) / (sigma - 1.5);
  double combined_tail = tailN + fz.err_estimate * std::abs(hz.value) +
                         hz.err_estimate * std::abs(fz.value);

  ResidualReport rep;
  rep.identity_id = "thm1-convolution";
  rep.tolerance = combined_tail;
  double res_lit = std::abs(lhs - rhs_literal);
  rep.points.push_back({{s, a, alpha}, res_lit, "as_printed_d_divides_k", ""});
  if (a == 1.0) {
    double res_cls = std::abs(lhs - rhs_classical);
    rep.points.push_back({{s, a, alpha}, res_cls, "classical_d_divides_k_plus_1", ""});
    if (res_cls <= combined_tail) {
      rep.verdict = Verdict::DocumentedDiscrepancy;
      rep.notes =
          "classical Dirichlet-convolution reading holds at a = 1; the printed "
          "divisor sum (d | k over log^alpha(d+a)) mis-indexes the convolution "
          "and misses it by ~" + std::to_string(res_lit);
      if (res_lit <= combined_tail) {
        rep.verdict = Verdict::Pass;
        rep.notes.clear();
      }
    } else {
      rep.verdict = Verdict::Fail;
      rep.notes = "neither reading reproduces the product";
    }
  } else {
    rep.verdict = Verdict::DocumentedDiscrepancy;
    rep.notes =
        "Lemma 1 is stated for Dirichlet series over n^{-s}; for a != 1 the "
        "(k+a)^{-s} system is not multiplicatively closed. Residual recorded "
        "without assertion.";
  }
  return rep;
}

}  // namespace fraczeta

#include "fraczeta/gammafn.hpp"

#include <array>
#include <cmath>

namespace fraczeta {

namespace {

bool is_nonpositive_integer(const Complex& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// Lanczos coefficients, g = 6.024680040776729583740234375, N = 13
// (essentially full double precision on the right half-plane).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443603409145529195509382,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr std::array<double, 13> kLanczosDen = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730, 13339535,
    2637558, 357423, 32670, 1925, 66, 1,
};

Complex lanczos_sum(const Complex& z) {
  Complex p(0.0, 0.0), q(0.0, 0.0);
  if (std::abs(z) < 50.0) {
    for (int k = 12; k >= 0; --k) {
      p = p * z + kLanczosNum[k];
      q = q * z + kLanczosDen[k];
    }
  } else {
    // evaluate in 1/z to keep intermediates bounded for large |z|
    Complex iz = 1.0 / z;
    for (int k = 0; k <= 12; ++k) {
      p = p * iz + kLanczosNum[k];
      q = q * iz + kLanczosDen[k];
    }
  }
  return p / q;
}

Complex gamma_positive_half(const Complex& z) {
  // Gamma(z) = L(z) e^{-g} exp((z-1/2)(log(z+g-1/2) - 1)); the grouped
  // exponent keeps intermediates representable up to the overflow of the
  // result itself.
  Complex zg = z + (kLanczosG - 0.5);
  Complex expo = (z - 0.5) * (std::log(zg) - 1.0) - kLanczosG;
  return lanczos_sum(z) * std::exp(expo);
}

// d^m/dz^m cot(pi z) = pi^m p_m(cot(pi z)) with p_m polynomials generated by
// p_0 = c, p_{m+1} = -(1 + c^2) p_m'(c).
std::vector<double> cot_deriv_poly(int m) {
  std::vector<double> p = {0.0, 1.0};  // p_0(c) = c
  for (int i = 0; i < m; ++i) {
    std::vector<double> d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
    for (size_t j = 1; j < p.size(); ++j) d[j - 1] = p[j] * double(j);
    std::vector<double> np(d.size() + 2, 0.0);
    for (size_t j = 0; j < d.size(); ++j) {
      np[j] -= d[j];
      np[j + 2] -= d[j];
    }
    p = std::move(np);
  }
  return p;
}

Complex eval_poly(const std::vector<double>& p, const Complex& c) {
  Complex v(0.0, 0.0);
  for (size_t j = p.size(); j-- > 0;) v = v * c + p[j];
  return v;
}

Complex polygamma_right(Complex z, int m) {
  // shift until the asymptotic series holds to ~1e-14, then
  // psi^{(m)}(z) ~ (-1)^{m-1} [ (m-1)!/z^m + m!/(2 z^{m+1})
  //               + sum_k B_{2k} (2k+m-1)!/(2k)! z^{-2k-m} ]
  const double target = 18.0 + 0.85 * m;
  const double sgn_m = (m % 2 == 0) ? 1.0 : -1.0;
  double mfact = 1.0;
  for (int j = 2; j <= m; ++j) mfact *= j;
  Complex acc(0.0, 0.0);
  while (z.real() < target) {
    // psi^{(m)}(z) = psi^{(m)}(z+1) - (-1)^m m! z^{-m-1}
    acc -= sgn_m * mfact * cpow(z, Complex(-m - 1, 0));
    z += 1.0;
  }
  auto bern = bernoulli_even();
  Complex iz = 1.0 / z, iz2 = iz * iz;
  Complex series;
  if (m == 0) {
    series = std::log(z) - 0.5 * iz;
    Complex zp = iz2;
    for (int k = 1; k <= 12; ++k) {
      series -= bern[k - 1] / (2.0 * k) * zp;
      zp *= iz2;
    }
  } else {
    Complex izm = cpow(z, Complex(-m, 0));
    series = izm * (mfact / m) + 0.5 * mfact * izm * iz;
    Complex zp = izm * iz2;
    double fr = mfact * double(m + 1) / 2.0;  // (2k+m-1)!/(2k)! at k = 1
    for (int k = 1; k <= 12; ++k) {
      series += bern[k - 1] * fr * zp;
      zp *= iz2;
      fr *= double(2 * k + m) * double(2 * k + m + 1) /
            (double(2 * k + 1) * double(2 * k + 2));
    }
    if (m % 2 == 0) series = -series;  // (-1)^{m-1}
  }
  return series + acc;
}

}  // namespace

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw PoleError("gamma: pole at nonpositive integer");
  Complex g;
  if (z.real() >= 0.5) {
    g = gamma_positive_half(z);
  } else {
    // reflection Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    Complex s = std::sin(kPi * z);
    g = kPi / (s * gamma_positive_half(1.0 - z));
  }
  return check_finite(g, "gamma");
}

Complex polygamma(Complex z, int m) {
  if (m < 0 || m > kDerivOrderCap)
    throw OrderCapError("polygamma: order out of range");
  if (is_nonpositive_integer(z))
    throw PoleError("polygamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return check_finite(polygamma_right(z, m), "polygamma");
  // reflection: psi^{(m)}(z) = (-1)^m psi^{(m)}(1-z) - pi d^m/dz^m cot(pi z)
  Complex ref = polygamma_right(1.0 - z, m);
  if (m % 2 != 0) ref = -ref;
  Complex c = std::cos(kPi * z) / std::sin(kPi * z);
  Complex cot_m = eval_poly(cot_deriv_poly(m), c) * std::pow(kPi, double(m + 1));
  return check_finite(ref - cot_m, "polygamma");
}

std::vector<Complex> bell_polynomials(std::span<const Complex> x) {
  const int n = int(x.size());
  std::vector<Complex> b(n + 1);
  b[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    // B_{i+1} = sum_{k=0..i} C(i,k) B_{i-k} x_{k+1}
    Complex s(0.0, 0.0);
    double c = 1.0;
    for (int k = 0; k <= i; ++k) {
      s += c * b[i - k] * x[k];
      c = c * double(i - k) / double(k + 1);
    }
    b[i + 1] = s;
  }
  return b;
}

std::vector<Complex> gamma_derivs(Complex z, int rmax) {
  if (rmax < 0 || rmax > kDerivOrderCap)
    throw OrderCapError("gamma_deriv: order out of range");
  if (is_nonpositive_integer(z))
    throw PoleError("gamma_deriv: pole at nonpositive integer");
  std::vector<Complex> psis(rmax);
  for (int m = 0; m < rmax; ++m) psis[m] = polygamma(z, m);
  std::vector<Complex> bell = bell_polynomials(psis);
  Complex g = gamma(z);
  std::vector<Complex> out(rmax + 1);
  for (int r = 0; r <= rmax; ++r) out[r] = check_finite(g * bell[r], "gamma_deriv");
  return out;
}

Complex gamma_deriv(Complex z, int r) { return gamma_derivs(z, r)[r]; }

Complex recip_gamma_deriv(Complex z, int m) {
  if (m < 0 || m > kDerivOrderCap)
    throw OrderCapError("recip_gamma_deriv: order out of range");
  if (z.real() >= 0.5) {
    // 1/Gamma = exp(-log Gamma): Bell polynomials in -psi^{(j)}
    std::vector<Complex> xs(m);
    for (int j = 0; j < m; ++j) xs[j] = -polygamma(z, j);
    std::vector<Complex> bell = bell_polynomials(xs);
    return check_finite(bell[m] / gamma(z), "recip_gamma_deriv");
  }
  // left half: 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, Leibniz over the two
  // factors (both entire/regular here); d^j sin(pi z) = pi^j sin(pi z + j pi/2)
  std::vector<Complex> gd = gamma_derivs(1.0 - z, m);
  Complex acc(0.0, 0.0);
  double c = 1.0;
  double pij = 1.0;
  for (int j = 0; j <= m; ++j) {
    Complex sj = std::sin(kPi * z + 0.5 * kPi * j);
    double sgn = ((m - j) % 2 == 0) ? 1.0 : -1.0;  // d^{m-j} Gamma(1-z)
    acc += c * pij * sj * sgn * gd[m - j];
    c = c * double(m - j) / double(j + 1);
    pij *= kPi;
  }
  return check_finite(acc / kPi, "recip_gamma_deriv");
}

}  // namespace fraczeta

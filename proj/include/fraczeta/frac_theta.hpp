#pragma once

#include "fraczeta/core.hpp"
#include "fraczeta/report.hpp"

namespace fraczeta {

// Phase factor of the fractional theta series: the theorem prints e^{i pi n}
// inside the n-sum; the closed form of the GL derivative of e^{-pi n^2 s}
// produces e^{i pi alpha} instead. The audit discriminates against the GL
// oracle and names the winner.
enum class ThetaVariant { AsPrintedEipiN, CorrectedEipiAlpha };

const char* theta_variant_name(ThetaVariant v);

// (2k+1)!! ; exact up to the integer-width cap, then a real-valued path.
double double_factorial_odd(int k);

// sum_{n in Z} phase(n, alpha) (pi n^2)^alpha e^{-pi n^2 s}, Re(s) > 0.
// Fractional orders may be negative (analytic continuation in the order);
// the n = 0 term vanishes for alpha != 0.
MethodResult frac_theta_series(Complex s, double alpha, ThetaVariant variant,
                               const SeriesBudget& budget = {});

// Fractional theta functional-equation audit: RHS = sum_k C(alpha,k) e^{i pi alpha} (2k+1)!! /
// (2^k (2k+1) s^{(2 alpha + 3)/2}) theta^{(alpha-k)}(1/s) against
// frac_theta_series(s, alpha); residuals reported, not asserted.
ResidualReport frac_theta_fe(Complex s, double alpha, ThetaVariant variant,
                             const SeriesBudget& budget = {});

}  // namespace fraczeta

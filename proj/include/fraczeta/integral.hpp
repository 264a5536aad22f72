#pragma once

#include "fraczeta/core.hpp"
#include "fraczeta/quadrature.hpp"
#include "fraczeta/report.hpp"

namespace fraczeta {

// int_0^inf (theta(t) - 1) t^{s/2} cpow(log t, w) dt/t, Re(s) > 1,
// Re(w) > -1. Evaluated in log space; on the lower panel the substitution
// t -> 1/t plus the theta functional equation converts the t -> 0 blowup into
// an exponentially decaying integrand.
MethodResult theta_log_moment(Complex s, Complex w, const QuadratureConfig& q = {});

// Untransformed (0, split) panel of the same integral; retained as the
// lower-precision cross-check of the substitution path.
MethodResult theta_log_moment_raw_lower(Complex s, Complex w,
                                        const QuadratureConfig& q = {});

// zeta(s) = pi^{s/2} / (2 Gamma(s/2)) * moment(s, 0), Re(s) > 1.
MethodResult completed_zeta_integral(Complex s, const QuadratureConfig& q = {});

enum class IntegralVariant { AsPrinted, CorrectedRecipGamma };

const char* integral_variant_name(IntegralVariant v);

// Integral-bridge audit: evaluates the double sum for both reciprocal-gamma
// readings, reports each value's residual against frac_zeta_series(s, 1,
// alpha). The k-sum stops where the log-moment leaves integrability
// (Re(alpha - k) <= -1), which the printed sum ignores.
ResidualReport frac_zeta_integral(Complex s, double alpha, IntegralVariant variant,
                                  const SeriesBudget& budget = {},
                                  const QuadratureConfig& q = {});

// Value of one variant's truncated double sum (the audit's building block).
MethodResult frac_zeta_integral_value(Complex s, double alpha,
                                      IntegralVariant variant,
                                      const SeriesBudget& budget = {},
                                      const QuadratureConfig& q = {});

}  // namespace fraczeta

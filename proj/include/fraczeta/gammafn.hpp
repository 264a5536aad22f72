#pragma once

#include <vector>

#include "fraczeta/core.hpp"

namespace fraczeta {

// Derivative orders above this destroy double precision in the Bell /
// Faa di Bruno recurrences; enforced, never silently clamped.
inline constexpr int kDerivOrderCap = 30;

// Complex gamma via the Lanczos rational approximation (reflection for
// Re(z) < 0.5). Relative error <= ~1e-13 for |z| <= 170.
Complex gamma(Complex z);

// psi^{(m)}(z): upward recurrence into the asymptotic region, reflection for
// Re(z) < 0.5. m <= kDerivOrderCap.
Complex polygamma(Complex z, int m);

// Gamma^{(r)}(z) = Gamma(z) * B_r(psi^{(0)}, ..., psi^{(r-1)}) with B_r the
// complete Bell polynomial.
Complex gamma_deriv(Complex z, int r);

// All of Gamma^{(0..rmax)}(z) sharing one polygamma sweep.
std::vector<Complex> gamma_derivs(Complex z, int rmax);

// d^m/dz^m [1/Gamma(z)]; entire, valid at nonpositive integers as well.
Complex recip_gamma_deriv(Complex z, int m);

// Complete Bell polynomials B_0..B_n of the argument list x_1..x_n.
std::vector<Complex> bell_polynomials(std::span<const Complex> x);

}  // namespace fraczeta

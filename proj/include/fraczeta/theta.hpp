#pragma once

#include "fraczeta/core.hpp"

namespace fraczeta {

// Jacobi theta(s) = sum_{n in Z} e^{-pi n^2 s}, Re(s) > 0. For s very close
// to the imaginary axis the functional equation moves the evaluation to 1/s
// first, where the series converges quickly.
MethodResult theta(Complex s, const SeriesBudget& budget = {});

// |theta(s) - s^{-1/2} theta(1/s)| with the principal square root.
double theta_fe_residual(Complex s, const SeriesBudget& budget = {});

}  // namespace fraczeta

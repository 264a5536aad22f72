#pragma once

#include <functional>

#include "fraczeta/core.hpp"

namespace fraczeta {

struct QuadratureConfig {
  double split_point = 1.0;
  int nodes_per_panel = 2048;  // hard ceiling per panel after doubling
  double abs_tol = 1e-10;

  void validate() const;
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  int levels = 0;
  std::int64_t evals = 0;
};

using RealToComplexFn = std::function<Complex(double)>;

// Double-exponential (tanh-sinh) rule on (a, b); endpoint singularities are
// fine. Error estimated by node-doubling deltas.
QuadResult tanh_sinh(const RealToComplexFn& f, double a, double b,
                     const QuadratureConfig& q);

// Double-exponential (exp-sinh) rule on (a, inf) for integrands decaying
// exponentially; singularity at the finite endpoint allowed.
QuadResult exp_sinh(const RealToComplexFn& f, double a,
                    const QuadratureConfig& q);

}  // namespace fraczeta

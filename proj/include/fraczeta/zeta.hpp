#pragma once

#include "fraczeta/core.hpp"

namespace fraczeta {

enum class TrigKind { Cos, Sin };

// l-th s-derivative of the Hurwitz zeta zeta(s, a), 0 < a <= 1, continued to
// the whole plane minus s = 1. Euler-Maclaurin with every piece
// differentiated analytically in s.
MethodResult hurwitz_zeta(Complex s, double a, int l = 0);

// sum_{q>=1} (log q)^l trig(2 pi q a) / q^{1-s} for Re(s) < 0. Sign-pure:
// the (-log q)^l variants are the caller's (-1)^l away.
MethodResult periodic_log_series(Complex s, double a, int l, TrigKind kind,
                                 const SeriesBudget& budget = {});

// Right side of the classical Hurwitz functional equation,
// 2 Gamma(1-s)/(2pi)^{1-s} [sin(pi s/2) C + cos(pi s/2) S], Re(s) < 0.
MethodResult classical_fe_hurwitz(Complex s, double a,
                                  const SeriesBudget& budget = {});

}  // namespace fraczeta

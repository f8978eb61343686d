#pragma once

#include <functional>

#include "orso/common.hpp"

namespace orso::quad {

using Fn = std::function<double(double)>;

// Adaptive Simpson on [a, b] with absolute/relative tolerance.  Infinite or
// NaN samples make the panel value infinite (modulars treat that as a hard
// rejection region).
double adaptive(const Fn& f, double a, double b, double rel_tol = 1e-10,
                double abs_tol = 0.0, int max_depth = 48);

// Integral of f over [a, b] after the substitution x = e^w (so the integrand
// becomes f(e^w) e^w).  Requires 0 < a < b.
double adaptive_log(const Fn& f, double a, double b, double rel_tol = 1e-10);

// integral_{w1}^{inf} exp(g(w)) dw for a decaying exponent function g, carried
// out in v = log w so that power-law decay in w becomes exponential decay in
// v.  Marches half-unit panels in v until the running increment is below
// `cutoff` times the accumulated total.  g must be defined for w in
// [w1, ~1e300).  Returns the integral; sets *truncated when the march hit the
// v-range limit before the increments became negligible.
double march_exp_integral(const std::function<double(double)>& g, double w1,
                          double cutoff = 1e-16, bool* truncated = nullptr);

// integral_{w1}^{inf} e^{u w} w^b (log w)^g dw with w1 > 1.  Handles the
// borderline u == 0 by recursing in v = log w.  Returns +inf on divergence.
double tail_integral_exp_power(double u, double b, double g, double w1);

}  // namespace orso::quad

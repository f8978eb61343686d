#include "orso/quadrature.hpp"

#include <cmath>

namespace orso::quad {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt_rec(const Fn& f, double a, double b, double fa, double fm, double fb,
                 double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) return kInf;
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double refined = left + right;
  const double err = (refined - whole) / 15.0;
  if (depth <= 0 || std::abs(err) <= tol) return refined + err;
  return adapt_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive(const Fn& f, double a, double b, double rel_tol, double abs_tol,
                int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm)) return kInf;
  const double whole = simpson(fa, fm, fb, b - a);
  double tol = abs_tol + rel_tol * std::max(std::abs(whole), 1e-300);
  return adapt_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double adaptive_log(const Fn& f, double a, double b, double rel_tol) {
  if (!(a > 0.0) || !(b > a)) throw domain_error("adaptive_log: need 0 < a < b");
  auto g = [&f](double w) {
    const double x = std::exp(w);
    const double v = f(x);
    return std::isfinite(v) ? v * x : v;
  };
  return adaptive(g, std::log(a), std::log(b), rel_tol);
}

double march_exp_integral(const std::function<double(double)>& g, double w1,
                          double cutoff, bool* truncated) {
  if (truncated) *truncated = false;
  // Integrate exp(g(e^v)) e^v dv over [log w1, ...) in half-unit panels.
  const double v_lo = std::log(std::max(w1, 1.0 + 1e-12));
  const double v_cap = 690.0;  // keeps w = e^v inside double range
  auto h = [&g](double v) {
    const double w = std::exp(v);
    const double lg = g(w);
    if (lg == -kInf) return 0.0;
    const double val = lg + v;
    return val > 700.0 ? kInf : std::exp(val);
  };
  double total = 0.0;
  double v = v_lo;
  for (int panel = 0; panel < 4000; ++panel) {
    const double v2 = v + 0.5;
    const double inc = adaptive(h, v, v2, 1e-11);
    if (std::isinf(inc)) return kInf;
    total += inc;
    v = v2;
    if (inc <= cutoff * std::max(total, 1e-300) && panel >= 2) return total;
    if (v > v_cap) break;
  }
  if (truncated) *truncated = true;
  return total;
}

double tail_integral_exp_power(double u, double b, double g, double w1) {
  if (u > 1e-13) return kInf;
  if (std::abs(u) <= 1e-13) {
    // integral w^b (log w)^g dw = integral e^{(b+1) z} z^g dz with z = log w
    if (std::abs(b + 1.0) <= 1e-13) {
      if (g >= -1.0) return kInf;
      return tail_integral_exp_power(0.0, g, 0.0, std::log(w1));
    }
    if (b > -1.0) return kInf;
    return tail_integral_exp_power(b + 1.0, g, 0.0, std::log(w1));
  }
  auto lg = [&](double w) {
    return u * w + b * std::log(w) + (g != 0.0 ? g * std::log(std::log(w)) : 0.0);
  };
  return march_exp_integral(lg, w1);
}

}  // namespace orso::quad

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace orso {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Extended-real conventions used throughout the library.  Values live in
// [0, +inf]; inside modular integrals the product 0 * inf is taken to be 0.
namespace extreal {

inline bool is_inf(double x) { return std::isinf(x); }

inline double mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

inline double add(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return kInf;
  return a + b;
}

}  // namespace extreal

struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Geometric grid with `per_decade` points per decade, inclusive of both ends.
inline std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo)) throw domain_error("log_grid: need 0 < lo < hi");
  const double d = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(d * per_decade)) + 1);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = lo * std::pow(10.0, d * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n) throw domain_error("fit_slope: need two samples");
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) { mx += x[i]; my += y[i]; }
  mx /= n; my /= n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  return sxy / sxx;
}

inline double sq(double x) { return x * x; }

}  // namespace orso

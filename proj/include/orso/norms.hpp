#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orso/gates.hpp"
#include "orso/young.hpp"

namespace orso::norms {

using gates::SmoothnessParams;
using young::YoungFunction;

// Piecewise-constant profile on [grid[0], grid[N]]: values[i] holds on
// [grid[i], grid[i+1]).  Zero outside.  An optional power tail
// v(t) = tail_coeff * t^{-tail_exponent} extends the function to an infinite
// domain beyond the last breakpoint.
struct SampledFunction {
  std::vector<double> grid;    // N+1 strictly increasing, non-negative
  std::vector<double> values;  // N cell values

  double tail_coeff = 0.0;
  double tail_exponent = 0.0;

  SampledFunction() = default;
  SampledFunction(std::vector<double> g, std::vector<double> v);

  double domain_length() const { return tail_coeff > 0.0 ? kInf : grid.back(); }
  bool infinite() const { return tail_coeff > 0.0; }
  double operator()(double t) const;

  static SampledFunction indicator(double a, double b);
  static SampledFunction constant(double c, double length, int cells = 1);
  // midpoint sampling of a callable on [a, b]
  static SampledFunction sample(const std::function<double(double)>& f, double a, double b,
                                int cells);
};

// Weighted subinterval of (0, inf); weight must be positive a.e.
struct MeasureSpec {
  double a = 0.0;
  double b = kInf;
  std::function<double(double)> weight;  // empty => Lebesgue

  static MeasureSpec lebesgue(double a = 0.0, double b = kInf) { return {a, b, {}}; }
};

struct NormResult {
  double value = 0.0;
  double modular_at_value = 0.0;
  int iterations = 0;
  bool infinite = false;          // modular stays above 1 for every lambda
  bool norm_condition_warning = false;  // Orlicz-Lorentz (aug310) failed

  operator double() const { return infinite ? kInf : value; }
};

// Luxemburg norm inf{lambda : integral A(|f|/lambda) dm <= 1}.
NormResult luxemburg_norm(const YoungFunction& a, const SampledFunction& f,
                          const MeasureSpec& m = {});
NormResult luxemburg_norm(const YoungFunction& a, const std::function<double(double)>& f,
                          const MeasureSpec& m);

// u*(r) = inf{t >= 0 : |{|u| > t}| <= r}
SampledFunction decreasing_rearrangement(const SampledFunction& u);

// || r^{-1/q} u*(r) ||_{L^A(0, |Omega|)}
NormResult orlicz_lorentz_norm(const YoungFunction& a, double q, const SampledFunction& u);

// K0(r)  = || rho^{-1+s/n} chi_(0,r^n) ||_{L^conj(A)},
// Kinf(r) = r || rho^{-1+(s-1)/n} chi_(r^n,inf) ||_{L^conj(A)}
struct KernelNorms {
  NormResult k0;
  NormResult kinf;
};
KernelNorms kernel_norms(const YoungFunction& a, const SmoothnessParams& p, double r);

struct HolderReport {
  double product_integral = 0.0;
  double norm_u = 0.0;       // L^A
  double norm_v_conj = 0.0;  // L^{conj A}
  bool holder_pass = false;  // integral <= 2 ||u|| ||v||
  double hl_rhs = 0.0;       // integral of u* v*
  bool hardy_littlewood_pass = false;
};
HolderReport holder_check(const SampledFunction& u, const SampledFunction& v,
                          const YoungFunction& a, const MeasureSpec& m = {});

// exact integral of u*v over the common refinement (Lebesgue measure)
double product_integral(const SampledFunction& u, const SampledFunction& v);

// CSV round-trip for profiles
SampledFunction sampled_from_csv(const std::string& path);
void sampled_to_csv(const SampledFunction& f, const std::string& path);

}  // namespace orso::norms

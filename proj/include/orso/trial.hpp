#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "orso/gates.hpp"
#include "orso/modulus.hpp"
#include "orso/norms.hpp"

namespace orso::trial {

using gates::SmoothnessParams;
using norms::SampledFunction;
using young::YoungFunction;

enum class TrialKind { Radial, RadialHigher, Odd, ScalingFamily };

using Point = std::vector<double>;

// Trial functions of the embedding theory.
//
//   Radial        u(x) = integral_{w_n |x|^n}^inf f(r) r^{-1+s/n} dr   (s in (0,1))
//   RadialHigher  u(x) = (1/[s]!) integral f(r) r^{-[s]-1+s/n} (r - w_n|x|^n)^{[s]} dr
//   Odd           u(x) = (x_1/[s]!) integral f(r) r^{-[s]-1+(s-1)/n} (r - w_n|x|^n)^{[s]} dr
//   ScalingFamily u_k(x) = k^{s-n} xi(x/k), xi a fixed smooth bump with
//                 grad xi(0) != 0
//
// Profiles f must be nonnegative, non-increasing step functions of bounded
// support.  For [s] == 1 the Odd and RadialHigher kinds expose the first
// derivative in closed form per profile cell, which is what the Gagliardo
// functional of order {s} acts on.
class TrialFunction {
 public:
  TrialKind kind() const { return kind_; }
  const SmoothnessParams& params() const { return params_; }
  const SampledFunction& profile() const { return profile_; }
  double scale() const { return k_; }

  double operator()(const Point& x) const;
  double value_radial(double r) const;  // Radial/RadialHigher: u at |x| = r

  // support radius of u (and of the derivative field)
  double support_radius() const { return support_radius_; }

  // lower-bound companions:
  //  Radial/RadialHigher: (1/[s]!) integral_0^{w_n r^n} f rho^{-1+s/n} drho
  //  Odd: (2^{1-[s]}/[s]!) r integral_{2 w_n r^n}^inf f rho^{-1+(s-1)/n} drho
  double lower_bound(double r) const;

  // derivative data (valid when params().int_part == 1):
  //  RadialHigher: grad u(x) = dphi(|x|) x/|x|
  double radial_derivative(double r) const;
  //  Odd, n == 1: u'(x) = odd_derivative(|x|) (an even function)
  double odd_derivative_1d(double r) const;

  // bump evaluation for ScalingFamily
  static double bump(const Point& x);
  static Point bump_gradient_at_origin(int n);

  friend TrialFunction make_trial(TrialKind kind, SampledFunction profile,
                                  const SmoothnessParams& p, double k);

 private:
  struct Moments {  // suffix power moments of the step profile
    std::vector<double> edges, vals, suffix;
    double c = 0.0;
    Moments() = default;
    Moments(const SampledFunction& f, double c);
    double prim(double rho) const;
    double from(double m) const;   // integral_m^inf f rho^c
    double total() const { return suffix.empty() ? 0.0 : suffix.front(); }
    double upto(double m) const { return total() - from(m); }
  };

  TrialKind kind_ = TrialKind::Radial;
  SmoothnessParams params_;
  SampledFunction profile_;
  double k_ = 1.0;
  double support_radius_ = 0.0;
  double factorial_ = 1.0;
  std::vector<Moments> value_moments_;  // exponent e + i, i = 0..[s]
  Moments lb_moments_;                  // lower-bound exponent
  Moments deriv_moments_;               // first-derivative exponent ([s] == 1)
  Moments deriv_moments2_;              // companion table for the odd derivative
};

TrialFunction make_trial(TrialKind kind, SampledFunction profile, const SmoothnessParams& p,
                         double k = 1.0);

// --- Gagliardo modular estimators ---

struct Estimate {
  double value = 0.0;
  double stderr_ = 0.0;
  enum class Flag { Ok, Diverges, Inconclusive } flag = Flag::Ok;
  std::string method;
  unsigned long long seed = 0;
  long long n_samples = 0;
};

struct MonteCarloOptions {
  unsigned long long seed = 1;  // mandatory by contract; there is no default entropy
  long long n = 1'000'000;
  double rel_se_cap = 0.2;
  int batches = 100;
};

// Deterministic evaluation of J_{s,A}(u / lambda) for trial functions whose
// structure reduces to radial (or 1-d) quadrature.  Higher-order trials are
// reduced to their derivative fields of order [s] (supported for [s] <= 1).
Estimate gagliardo_radial(const YoungFunction& a, const SmoothnessParams& p,
                          const TrialFunction& u, double lambda = 1.0, double rel_tol = 3e-5);

// As above for a raw 1-d function of bounded support (n must be 1).
Estimate gagliardo_1d(const YoungFunction& a, double s, const std::function<double(double)>& u,
                      double support_radius, double lambda = 1.0, double rel_tol = 3e-5);

// Importance-sampled Monte Carlo estimate of J_{s,A}(u / lambda).
Estimate gagliardo_mc(const YoungFunction& a, const SmoothnessParams& p, const TrialFunction& u,
                      const MonteCarloOptions& opt, double lambda = 1.0);

enum class Method { RadialQuadrature, MonteCarlo };

Estimate gagliardo_modular(const YoungFunction& a, const SmoothnessParams& p,
                           const TrialFunction& u, Method method,
                           const MonteCarloOptions& opt = {}, double lambda = 1.0);

// Luxemburg-type seminorm inf{lambda : J_{s,A}(u/lambda) <= 1}.
struct SeminormResult {
  double value = 0.0;
  bool infinite = false;
  int iterations = 0;
};
SeminormResult seminorm(const YoungFunction& a, const SmoothnessParams& p,
                        const TrialFunction& u, Method method = Method::RadialQuadrature,
                        const MonteCarloOptions& opt = {});

// --- pointwise modular bound (s in (0,1)) ---

struct ModularBoundReport {
  double modular = 0.0;       // J_{s,A}(u)
  double max_ratio = 0.0;     // worst |u(x)-u(y)| / (|x-y|^s B^{-1}(J/|x-y|^n))
  double worst_distance = 0.0;
  int pairs = 0;
};

ModularBoundReport check_modular_bound(const YoungFunction& a, const SmoothnessParams& p,
                                       const TrialFunction& u,
                                       const std::vector<std::pair<Point, Point>>& pairs);

// --- Hoelder quotient ---

double holder_quotient(const std::function<double(const Point&)>& u,
                       const std::function<double(double)>& omega,
                       const std::vector<std::pair<Point, Point>>& pairs);

// Deterministic stratified pair sampler: per distance decade, `per_decade`
// pairs with x uniform in the ball of radius `box_radius`.
std::vector<std::pair<Point, Point>> make_pair_sampler(int n, unsigned long long seed,
                                                       double dist_lo, double dist_hi,
                                                       int per_decade, double box_radius);

// --- Lemma 5.2 flattening ---

// g must vanish on (0, R) and be non-increasing on (R, inf); returns the
// non-increasing profile equal to the (R, 2R) average on (0, 2R) and to g
// beyond.
SampledFunction flatten_tail(const SampledFunction& g, double R);

}  // namespace orso::trial

#include "orso/trial.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "orso/quadrature.hpp"

namespace orso::trial {

namespace {

double binom(int k, int i) {
  double c = 1.0;
  for (int j = 0; j < i; ++j) c = c * (k - j) / (j + 1);
  return c;
}

double surface_area(int n) {  // S_{n-1}
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

TrialFunction::Moments::Moments(const SampledFunction& f, double c_)
    : edges(f.grid), vals(f.values), c(c_) {
  suffix.assign(edges.size(), 0.0);
  for (size_t j = edges.size() - 1; j-- > 0;) {
    double piece = 0.0;
    if (vals[j] != 0.0) piece = vals[j] * (prim(edges[j + 1]) - prim(edges[j]));
    suffix[j] = suffix[j + 1] + piece;
  }
}

double TrialFunction::Moments::prim(double rho) const {
  if (rho == 0.0) return c + 1.0 > 0.0 ? 0.0 : -kInf;
  return std::pow(rho, c + 1.0) / (c + 1.0);
}

double TrialFunction::Moments::from(double m) const {
  if (m <= edges.front()) return suffix.front();
  if (m >= edges.back()) return 0.0;
  const auto it = std::upper_bound(edges.begin(), edges.end(), m);
  const size_t j = static_cast<size_t>(it - edges.begin()) - 1;
  if (vals[j] == 0.0) return suffix[j + 1];
  return suffix[j + 1] + vals[j] * (prim(edges[j + 1]) - prim(m));
}

double TrialFunction::bump(const Point& x) {
  double rho2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - (i == 0 ? 0.5 : 0.0);
    rho2 += d * d;
  }
  if (rho2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - rho2));
}

Point TrialFunction::bump_gradient_at_origin(int n) {
  // grad xi(0) = xi(0) * 2 x0 / (1 - |x0|^2)^2 with x0 = e1/2
  Point g(n, 0.0);
  const double xi0 = std::exp(-1.0 / 0.75);
  g[0] = xi0 * (2.0 * 0.5) / (0.75 * 0.75);
  return g;
}

TrialFunction make_trial(TrialKind kind, SampledFunction profile, const SmoothnessParams& p,
                         double k) {
  TrialFunction t;
  t.kind_ = kind;
  t.params_ = p;
  t.k_ = k;
  for (int i = 2; i <= p.int_part; ++i) t.factorial_ *= i;
  if (kind == TrialKind::ScalingFamily) {
    if (!(k > 0.0)) throw domain_error("make_trial: scaling factor must be positive");
    t.support_radius_ = 1.5 * k;  // bump support: |x/k - e1/2| < 1
    return t;
  }
  if (profile.grid.empty()) throw domain_error("make_trial: profile required");
  if (profile.infinite()) throw domain_error("make_trial: profile must have bounded support");
  double prev = kInf;
  for (double v : profile.values) {
    if (v < 0.0) throw domain_error("make_trial: profile must be nonnegative");
    if (v > prev * (1.0 + 1e-12)) throw domain_error("make_trial: profile must be non-increasing");
    prev = v;
  }
  if (kind == TrialKind::Radial && !(p.s < 1.0))
    throw domain_error("make_trial: Radial kind needs s in (0,1); use RadialHigher for s > 1");
  if (kind == TrialKind::Odd && p.int_part < 1)
    throw domain_error("make_trial: Odd kind needs s > 1");
  if ((kind == TrialKind::RadialHigher || kind == TrialKind::Odd) && p.int_part > 3)
    throw domain_error("make_trial: [s] > 3 not supported");
  t.profile_ = std::move(profile);
  const double m_end = t.profile_.grid.back();
  t.support_radius_ = std::pow(m_end / p.omega_n, 1.0 / p.n);

  const int kk = p.int_part;
  double e = 0.0;
  switch (kind) {
    case TrialKind::Radial: e = -1.0 + p.s / p.n; break;
    case TrialKind::RadialHigher: e = -kk - 1.0 + p.s / p.n; break;
    case TrialKind::Odd: e = -kk - 1.0 + (p.s - 1.0) / p.n; break;
    default: break;
  }
  for (int i = 0; i <= (kind == TrialKind::Radial ? 0 : kk); ++i)
    t.value_moments_.emplace_back(t.profile_, e + i);
  const double lb_c =
      kind == TrialKind::Odd ? -1.0 + (p.s - 1.0) / p.n : -1.0 + p.s / p.n;
  t.lb_moments_ = TrialFunction::Moments(t.profile_, lb_c);
  if (kk == 1) {
    if (kind == TrialKind::RadialHigher)
      t.deriv_moments_ = TrialFunction::Moments(t.profile_, -2.0 + p.s / p.n);
    if (kind == TrialKind::Odd && p.n == 1) {
      t.deriv_moments_ = TrialFunction::Moments(t.profile_, -2.0 + (p.s - 1.0));
      t.deriv_moments2_ = TrialFunction::Moments(t.profile_, -1.0 + (p.s - 1.0));
    }
  }
  return t;
}

double TrialFunction::value_radial(double r) const {
  const SmoothnessParams& p = params_;
  const double m = p.omega_n * std::pow(r, p.n);
  switch (kind_) {
    case TrialKind::Radial:
      return value_moments_[0].from(m);
    case TrialKind::RadialHigher: {
      const int k = p.int_part;
      double total = 0.0;
      for (int i = 0; i <= k; ++i) {
        const double coef = binom(k, i) * std::pow(-m, k - i);
        if (coef == 0.0) continue;
        total += coef * value_moments_[i].from(m);
      }
      return total / factorial_;
    }
    default:
      throw domain_error("value_radial: not a radial kind");
  }
}

double TrialFunction::operator()(const Point& x) const {
  const SmoothnessParams& p = params_;
  if (static_cast<int>(x.size()) != p.n)
    throw domain_error("trial evaluated with wrong dimension");
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  const double r = std::sqrt(r2);
  switch (kind_) {
    case TrialKind::Radial:
    case TrialKind::RadialHigher:
      return value_radial(r);
    case TrialKind::Odd: {
      const int k = p.int_part;
      const double m = p.omega_n * std::pow(r, p.n);
      double g = 0.0;
      for (int i = 0; i <= k; ++i) {
        const double coef = binom(k, i) * std::pow(-m, k - i);
        if (coef == 0.0) continue;
        g += coef * value_moments_[i].from(m);
      }
      return x[0] * g / factorial_;
    }
    case TrialKind::ScalingFamily: {
      Point y(x.size());
      for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] / k_;
      return std::pow(k_, p.s - p.n) * bump(y);
    }
  }
  throw domain_error("trial: unreachable");
}

double TrialFunction::lower_bound(double r) const {
  const SmoothnessParams& p = params_;
  const double m = p.omega_n * std::pow(r, p.n);
  switch (kind_) {
    case TrialKind::Radial:
    case TrialKind::RadialHigher:
      return lb_moments_.upto(m) / factorial_;
    case TrialKind::Odd:
      // (r - m)^{[s]} >= (r/2)^{[s]} on r >= 2m gives the constant 2^{-[s]}
      return std::pow(2.0, -p.int_part) / factorial_ * r * lb_moments_.from(2.0 * m);
    default:
      throw domain_error("lower_bound: unsupported kind");
  }
}

double TrialFunction::radial_derivative(double r) const {
  const SmoothnessParams& p = params_;
  if (kind_ != TrialKind::RadialHigher || p.int_part != 1)
    throw domain_error("radial_derivative: needs RadialHigher with [s] == 1");
  if (r == 0.0) return 0.0;
  const double m = p.omega_n * std::pow(r, p.n);
  return -p.omega_n * p.n * std::pow(r, p.n - 1.0) * deriv_moments_.from(m);
}

double TrialFunction::odd_derivative_1d(double r) const {
  const SmoothnessParams& p = params_;
  if (kind_ != TrialKind::Odd || p.int_part != 1 || p.n != 1)
    throw domain_error("odd_derivative_1d: needs Odd kind with n == 1, [s] == 1");
  const double m = p.omega_n * r;
  // u(x) = x g(m): u' = g(m) + omega_1 |x| g'(m); the m integral moments
  // diverge at m = 0 but enter only through vanishing products
  const double mg = m > 0.0 ? m * deriv_moments_.from(m) : 0.0;
  const double g = deriv_moments2_.from(m) - mg;
  return g - mg;
}

// ---------------------------------------------------------------------------
// deterministic quadrature

namespace {

// Fixed-order composite Simpson of h over [lo, hi] in w = log d.  The pair
// integrands are smooth away from isolated profile kinks and contaminated by
// difference cancellation at tiny d, so adaptivity buys nothing here.
double decade_integral(const std::function<double(double)>& h, double lo, double hi,
                       int subpanels = 10) {
  const double wa = std::log(lo), wb = std::log(hi);
  const double step = (wb - wa) / subpanels;
  double total = 0.0;
  auto g = [&h](double w) {
    const double d = std::exp(w);
    const double v = h(d);
    return std::isfinite(v) ? v * d : v;
  };
  double left = g(wa);
  for (int i = 0; i < subpanels; ++i) {
    const double mid = g(wa + (i + 0.5) * step);
    const double right = g(wa + (i + 1.0) * step);
    if (!std::isfinite(left) || !std::isfinite(mid) || !std::isfinite(right)) return kInf;
    total += step / 6.0 * (left + 4.0 * mid + right);
    left = right;
  }
  return total;
}

// Inner distance integral: decade march around d0.  The downward direction is
// truncated without a divergence flag (profile cusps make single outer points
// log-divergent on a null set); the upward direction flags stalled decay.
double distance_march(const std::function<double(double)>& h, double d0, bool* diverged) {
  double total = 0.0;
  double edge = d0;
  for (int k = 0; k < 40; ++k) {  // downward
    const double lo = edge / 10.0;
    const double inc = decade_integral(h, lo, edge);
    if (std::isinf(inc)) { *diverged = true; return kInf; }
    total += inc;
    edge = lo;
    if (inc < 1e-11 * std::max(total, 1e-300)) break;
  }
  edge = d0;
  double prev = kInf;
  for (int k = 0; k < 60; ++k) {  // upward
    const double hi = edge * 10.0;
    const double inc = decade_integral(h, edge, hi);
    if (std::isinf(inc)) { *diverged = true; return kInf; }
    total += inc;
    if (k > 2 && inc >= prev * 0.999 && inc > 1e-10 * std::max(total, 1e-300)) {
      *diverged = true;
      return kInf;
    }
    prev = inc;
    edge = hi;
    if (inc < 1e-11 * std::max(total, 1e-300)) break;
    if (k == 59) *diverged = true;
  }
  return total;
}

}  // namespace

Estimate gagliardo_1d(const YoungFunction& a, double s, const std::function<double(double)>& u,
                      double support_radius, double lambda, double rel_tol) {
  const double R = support_radius;
  bool diverged = false;
  auto inner = [&](double x) {
    const double ux = u(x);
    auto h = [&](double d) {
      double total = 0.0;
      for (double e : {+1.0, -1.0}) {
        const double y = x + e * d;
        const double w = std::abs(y) > R ? 2.0 : 1.0;
        const double du = std::abs(u(y) - ux);
        if (du == 0.0) continue;
        total += w * a(du / (lambda * std::pow(d, s)));
      }
      return total / d;
    };
    return distance_march(h, std::max(R, 1e-12), &diverged);
  };
  double total = 0.0;
  const int panels = 16;
  for (int pi = -panels; pi < panels; ++pi) {
    const double lo = R * pi / panels, hi = R * (pi + 1) / panels;
    total += quad::adaptive(inner, lo, hi, rel_tol, 0.0, 10);
    if (std::isinf(total) || diverged) break;
  }
  Estimate est;
  est.method = "radial_quadrature";
  est.value = total;
  if (diverged || std::isinf(total)) {
    est.flag = Estimate::Flag::Diverges;
    est.value = kInf;
  }
  return est;
}

namespace {

// n >= 2 radial reduction over (r1, d, psi): `delta` maps (r1, r2, cos gamma)
// to |u(x) - u(y)| where gamma is the angle between x and y.
Estimate gagliardo_radial_nd(const YoungFunction& a, const SmoothnessParams& p, double order,
                             const std::function<double(double, double, double)>& delta,
                             double R, double lambda, double rel_tol) {
  const int n = p.n;
  bool diverged = false;
  auto inner_angle = [&](double r1, double d) {
    auto f = [&](double psi) {
      const double c = std::cos(psi);
      const double r2 = std::sqrt(std::max(r1 * r1 + d * d + 2.0 * r1 * d * c, 0.0));
      const double w = r2 > R ? 2.0 : 1.0;
      const double du = delta(r1, r2, r2 > 0.0 ? std::clamp((r1 + d * c) / r2, -1.0, 1.0) : 1.0);
      if (du == 0.0) return 0.0;
      const double ang = n == 2 ? 1.0 : std::pow(std::sin(psi), n - 2);
      return w * extreal::mul(a(du / (lambda * std::pow(d, order))), ang);
    };
    return quad::adaptive(f, 0.0, M_PI, 1e-6, 0.0, 10);
  };
  auto inner = [&](double r1) {
    auto h = [&](double d) { return inner_angle(r1, d) / d; };
    const double v = distance_march(h, std::max(R, 1e-12), &diverged);
    return std::isinf(v) ? v : v * std::pow(r1, n - 1.0);
  };
  double total = 0.0;
  const int panels = 10;
  for (int pi = 0; pi < panels; ++pi) {
    const double lo = R * pi / panels, hi = R * (pi + 1) / panels;
    total += quad::adaptive(inner, lo, hi, rel_tol, 0.0, 10);
    if (std::isinf(total) || diverged) break;
  }
  Estimate est;
  est.method = "radial_quadrature";
  est.value = total * surface_area(n) * surface_area(n - 1);
  if (diverged || std::isinf(total)) {
    est.flag = Estimate::Flag::Diverges;
    est.value = kInf;
  }
  return est;
}

}  // namespace

Estimate gagliardo_radial(const YoungFunction& a, const SmoothnessParams& p,
                          const TrialFunction& u, double lambda, double rel_tol) {
  const double R = u.support_radius();
  const double frac = p.int_part == 0 ? p.s : p.frac_part;
  if (p.int_part == 0) {
    if (p.n == 1) {
      auto f1 = [&u](double x) { return u.value_radial(std::abs(x)); };
      return gagliardo_1d(a, p.s, f1, R, lambda, rel_tol);
    }
    auto delta = [&u](double r1, double r2, double) {
      return std::abs(u.value_radial(r1) - u.value_radial(r2));
    };
    return gagliardo_radial_nd(a, p, p.s, delta, R, lambda, rel_tol);
  }
  if (p.int_part != 1)
    throw domain_error("gagliardo_radial: derivative reduction supports [s] <= 1 only");
  // first-order reduction: J_{ {s}, A } applied to grad u
  if (u.kind() == TrialKind::RadialHigher) {
    if (p.n == 1) {
      auto f1 = [&u](double x) {
        const double v = u.radial_derivative(std::abs(x));
        return x >= 0.0 ? v : -v;  // odd scalar derivative
      };
      return gagliardo_1d(a, frac, f1, R, lambda, rel_tol);
    }
    auto delta = [&u](double r1, double r2, double cosg) {
      const double a1 = u.radial_derivative(r1), a2 = u.radial_derivative(r2);
      return std::sqrt(std::max(a1 * a1 + a2 * a2 - 2.0 * a1 * a2 * cosg, 0.0));
    };
    return gagliardo_radial_nd(a, p, frac, delta, R, lambda, rel_tol);
  }
  if (u.kind() == TrialKind::Odd && p.n == 1) {
    auto f1 = [&u](double x) { return u.odd_derivative_1d(std::abs(x)); };  // even profile
    return gagliardo_1d(a, frac, f1, R, lambda, rel_tol);
  }
  throw domain_error("gagliardo_radial: unsupported trial/derivative combination");
}

// ---------------------------------------------------------------------------
// Monte Carlo

Estimate gagliardo_mc(const YoungFunction& a, const SmoothnessParams& p, const TrialFunction& u,
                      const MonteCarloOptions& opt, double lambda) {
  const int n = p.n;
  const double D = u.support_radius();
  if (p.int_part != 0)
    throw domain_error("gagliardo_mc: direct sampling supports s in (0,1); reduce derivatives first");
  const double frac = p.s;
  const double delta_min = 1e-8 * D;
  const double d_max = 1e4 * D;
  const double logrange = std::log(d_max / delta_min);
  const double volume = p.omega_n * std::pow(D, n);
  const double constant = volume * surface_area(n) * logrange;

  const int nb = std::max(2, opt.batches);
  const long long per_batch = std::max<long long>(1, opt.n / nb);
  std::vector<double> batch_mean(nb, 0.0);
  bool saw_inf = false;
  double top_sample = 0.0, grand_sum = 0.0;

  Point x(n), y(n), e(n);
  for (int b = 0; b < nb; ++b) {
    std::mt19937_64 rng(splitmix64(opt.seed ^ (0xA5C152EDULL + 7919ULL * b)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double acc = 0.0;
    for (long long i = 0; i < per_batch; ++i) {
      double norm2 = 0.0;
      for (int j = 0; j < n; ++j) { x[j] = gauss(rng); norm2 += x[j] * x[j]; }
      const double rx = D * std::pow(uni(rng), 1.0 / n) / std::sqrt(std::max(norm2, 1e-300));
      for (int j = 0; j < n; ++j) x[j] *= rx;
      norm2 = 0.0;
      for (int j = 0; j < n; ++j) { e[j] = gauss(rng); norm2 += e[j] * e[j]; }
      const double en = std::sqrt(std::max(norm2, 1e-300));
      const double d = delta_min * std::exp(uni(rng) * logrange);
      double ynorm2 = 0.0;
      for (int j = 0; j < n; ++j) { y[j] = x[j] + d * e[j] / en; ynorm2 += y[j] * y[j]; }
      const double w = ynorm2 > D * D ? 2.0 : 1.0;
      const double du = std::abs(u(x) - u(y));
      if (du == 0.0) continue;
      const double val = w * a(du / (lambda * std::pow(d, frac)));
      if (std::isinf(val)) { saw_inf = true; continue; }
      acc += val;
      top_sample = std::max(top_sample, val);
    }
    batch_mean[b] = acc / per_batch;
    grand_sum += acc;
  }
  Estimate est;
  est.method = "monte_carlo";
  est.seed = opt.seed;
  est.n_samples = per_batch * nb;
  double mean = 0.0;
  for (double m : batch_mean) mean += m;
  mean /= nb;
  double var = 0.0;
  for (double m : batch_mean) var += (m - mean) * (m - mean);
  var /= (nb - 1);
  est.value = constant * mean;
  est.stderr_ = constant * std::sqrt(var / nb);

  // analytic correction below delta_min from the profile's local modulus
  {
    double lip = 0.0;
    const double probe = 10.0 * delta_min;
    Point px(n, 0.0), py(n, 0.0);
    for (int j = 0; j < 32; ++j) {
      px[0] = -D + (2.0 * D) * (j + 0.5) / 32.0;
      py[0] = px[0] + probe;
      lip = std::max(lip, std::abs(u(px) - u(py)) / probe);
    }
    const AsymModel mz = a.model_zero();
    if (lip > 0.0 && mz.is_power_log() && frac < 1.0) {
      const double arg = lip * std::pow(delta_min, 1.0 - frac) / lambda;
      est.value += volume * surface_area(n) * a(arg) / ((1.0 - frac) * mz.q);
    }
  }

  if (saw_inf) est.flag = Estimate::Flag::Diverges;
  else if (est.value > 0.0 && est.stderr_ / est.value > opt.rel_se_cap)
    est.flag = Estimate::Flag::Inconclusive;
  else if (grand_sum > 0.0 && top_sample > 0.5 * grand_sum)
    est.flag = Estimate::Flag::Inconclusive;
  return est;
}

Estimate gagliardo_modular(const YoungFunction& a, const SmoothnessParams& p,
                           const TrialFunction& u, Method method, const MonteCarloOptions& opt,
                           double lambda) {
  if (method == Method::MonteCarlo) return gagliardo_mc(a, p, u, opt, lambda);
  return gagliardo_radial(a, p, u, lambda);
}

SeminormResult seminorm(const YoungFunction& a, const SmoothnessParams& p,
                        const TrialFunction& u, Method method, const MonteCarloOptions& opt) {
  SeminormResult res;
  // the modular is monotone in lambda; a coarser quadrature tolerance is
  // enough to locate the unit level set
  auto J = [&](double lambda) {
    if (method == Method::MonteCarlo) {
      Estimate e = gagliardo_mc(a, p, u, opt, lambda);
      return e.flag == Estimate::Flag::Diverges ? kInf : e.value;
    }
    Estimate e = gagliardo_radial(a, p, u, lambda, 3e-4);
    return e.flag == Estimate::Flag::Diverges ? kInf : e.value;
  };
  double hi = 1.0;
  int it = 0;
  while (J(hi) > 1.0) {
    hi *= 4.0;
    if (++it > 200 || hi > 1e150) { res.infinite = true; res.iterations = it; return res; }
  }
  double lo = hi;
  while (J(lo) <= 1.0) {
    lo /= 4.0;
    if (++it > 300 || lo < 1e-150) { res.value = 0.0; res.iterations = it; return res; }
  }
  for (int k = 0; k < 22; ++k) {
    const double mid = std::sqrt(lo * hi);
    (J(mid) <= 1.0 ? hi : lo) = mid;
    ++it;
  }
  res.value = hi;
  res.iterations = it;
  return res;
}

ModularBoundReport check_modular_bound(const YoungFunction& a, const SmoothnessParams& p,
                                       const TrialFunction& u,
                                       const std::vector<std::pair<Point, Point>>& pairs) {
  if (!(p.s < 1.0)) throw domain_error("check_modular_bound: requires s in (0,1)");
  Estimate J = gagliardo_radial(a, p, u);
  if (J.flag == Estimate::Flag::Diverges)
    throw domain_error("check_modular_bound: modular diverges");
  const YoungFunction E = gates::build_E(a, p);
  const YoungFunction B = young::conjugate_fast(E);
  ModularBoundReport rep;
  rep.modular = J.value;
  rep.pairs = static_cast<int>(pairs.size());
  for (const auto& [x, y] : pairs) {
    double d2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) d2 += sq(x[i] - y[i]);
    const double d = std::sqrt(d2);
    if (d == 0.0) continue;
    const double lhs = std::abs(u(x) - u(y));
    const double rhs = std::pow(d, p.s) * B.inverse(J.value / std::pow(d, p.n));
    if (rhs > 0.0 && lhs / rhs > rep.max_ratio) {
      rep.max_ratio = lhs / rhs;
      rep.worst_distance = d;
    }
  }
  return rep;
}

double holder_quotient(const std::function<double(const Point&)>& u,
                       const std::function<double(double)>& omega,
                       const std::vector<std::pair<Point, Point>>& pairs) {
  double best = 0.0;
  for (const auto& [x, y] : pairs) {
    double d2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) d2 += sq(x[i] - y[i]);
    const double d = std::sqrt(d2);
    if (d == 0.0) continue;
    const double om = omega(d);
    if (!(om > 0.0)) throw domain_error("holder_quotient: modulus not positive at sampled distance");
    best = std::max(best, std::abs(u(x) - u(y)) / om);
  }
  return best;
}

std::vector<std::pair<Point, Point>> make_pair_sampler(int n, unsigned long long seed,
                                                       double dist_lo, double dist_hi,
                                                       int per_decade, double box_radius) {
  std::mt19937_64 rng(splitmix64(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<std::pair<Point, Point>> out;
  const int decades = std::max(1, static_cast<int>(std::ceil(std::log10(dist_hi / dist_lo))));
  for (int dec = 0; dec < decades; ++dec) {
    const double lo = dist_lo * std::pow(10.0, dec);
    const double hi = std::min(lo * 10.0, dist_hi);
    for (int i = 0; i < per_decade; ++i) {
      Point x(n), e(n);
      double norm2 = 0.0;
      for (int j = 0; j < n; ++j) { x[j] = gauss(rng); norm2 += x[j] * x[j]; }
      const double rx = box_radius * std::pow(uni(rng), 1.0 / n) / std::sqrt(std::max(norm2, 1e-300));
      for (int j = 0; j < n; ++j) x[j] *= rx;
      norm2 = 0.0;
      for (int j = 0; j < n; ++j) { e[j] = gauss(rng); norm2 += e[j] * e[j]; }
      const double en = std::sqrt(std::max(norm2, 1e-300));
      const double d = lo * std::pow(hi / lo, uni(rng));
      Point y(n);
      for (int j = 0; j < n; ++j) y[j] = x[j] + d * e[j] / en;
      out.emplace_back(std::move(x), std::move(y));
    }
  }
  return out;
}

SampledFunction flatten_tail(const SampledFunction& g, double R) {
  if (!(R > 0.0)) throw domain_error("flatten_tail: need R > 0");
  if (g.infinite()) throw domain_error("flatten_tail: bounded-support profiles only");
  double prev = kInf;
  for (size_t i = 0; i < g.values.size(); ++i) {
    const double mid = 0.5 * (g.grid[i] + g.grid[i + 1]);
    if (mid < R && g.values[i] != 0.0)
      throw domain_error("flatten_tail: profile must vanish on (0, R)");
    if (mid >= R) {
      if (g.values[i] > prev * (1.0 + 1e-12))
        throw domain_error("flatten_tail: profile must be non-increasing past R");
      prev = g.values[i];
    }
  }
  // average over (R, 2R)
  double avg = 0.0;
  {
    std::vector<double> edges{R, 2.0 * R};
    for (double t : g.grid)
      if (t > R && t < 2.0 * R) edges.push_back(t);
    std::sort(edges.begin(), edges.end());
    for (size_t i = 0; i + 1 < edges.size(); ++i)
      avg += g(0.5 * (edges[i] + edges[i + 1])) * (edges[i + 1] - edges[i]);
    avg /= R;
  }
  std::vector<double> grid{0.0, 2.0 * R};
  std::vector<double> vals{avg};
  for (size_t i = 0; i < g.values.size(); ++i) {
    const double hi = g.grid[i + 1];
    if (hi <= 2.0 * R) continue;
    grid.push_back(hi);
    vals.push_back(g.values[i]);
  }
  return SampledFunction(std::move(grid), std::move(vals));
}

}  // namespace orso::trial

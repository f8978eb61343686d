// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "orso/examples_table.hpp"
#include "orso/io.hpp"

using namespace orso;
using young::YoungFunction;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int id, const char* name, bool pass, double secs, const std::string& detail = {}) {
  std::printf("%s criterion %2d: %-34s (%5.1fs)%s%s\n", pass ? "PASS" : "FAIL", id, name, secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::vector<YoungFunction> battery() {
  return {YoungFunction::power(1.2),
          YoungFunction::power(2.0),
          YoungFunction::power(5.0),
          YoungFunction::power_log(2, 1, 4, -1),
          YoungFunction::power_log(2, 0, 4, 4),
          YoungFunction::power_log(1, -0.5, 3, 0),
          YoungFunction::power_log(1.5, 0, 2, 1),
          YoungFunction::power_log(4, 3, 5, 0),
          YoungFunction::exponential(-1, 1),
          YoungFunction::exponential(-1, 2),
          YoungFunction::exponential(-0.5, 1),
          YoungFunction::linfty_gauge()};
}

norms::SampledFunction seeded_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ncells(1, 5);
  std::uniform_real_distribution<double> ulen(0.2, 1.0), uval(0.2, 2.0);
  const int m = ncells(rng);
  std::vector<double> grid{0.0}, vals;
  double level = 0.0;
  for (int i = 0; i < m; ++i) level += uval(rng);
  for (int i = 0; i < m; ++i) {
    grid.push_back(grid.back() + ulen(rng));
    vals.push_back(std::max(level, 0.01));
    level -= uval(rng) * 0.9;
  }
  for (size_t i = 1; i < vals.size(); ++i) vals[i] = std::min(vals[i], vals[i - 1]);
  return norms::SampledFunction(std::move(grid), std::move(vals));
}

norms::SampledFunction seeded_step(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ncells(2, 7);
  std::uniform_real_distribution<double> ulen(0.1, 2.0), uval(0.05, 5.0);
  const int m = ncells(rng);
  std::vector<double> grid{0.0}, vals;
  for (int i = 0; i < m; ++i) {
    grid.push_back(grid.back() + ulen(rng));
    vals.push_back(uval(rng));
  }
  return norms::SampledFunction(std::move(grid), std::move(vals));
}

// Calibration constants, frozen from the deterministic batteries below; the
// suite asserts no instance exceeds them by more than 5%.
constexpr double kModularBoundC = -1.0;   // criterion 10, (n, s) = (1, 0.5)
constexpr double kRadialBoundC = -1.0;    // criterion 11, radial kind
constexpr double kOddBoundC = -1.0;       // criterion 11, odd kind

// --- criteria ---

void c1_sandwich() {
  Timer tm;
  bool pass = true;
  std::string detail;
  for (const auto& a : battery()) {
    const auto conj = a.conjugate();
    for (double t : log_grid(1e-6, 1e6, 5)) {
      const double ai = a.inverse(t), ci = conj.inverse(t);
      if (std::isinf(ai) || std::isinf(ci)) continue;
      const double prod = ai * ci;
      if (!(prod >= t * (1.0 - 1e-6) && prod <= 2.0 * t * (1.0 + 1e-6))) {
        pass = false;
        detail = a.describe() + " at t = " + std::to_string(t);
      }
    }
  }
  report(1, "conjugate sandwich (AAtilde)", pass, tm.seconds(), detail);
}

void c2_legendre() {
  Timer tm;
  bool pass = true;
  std::string detail;
  for (double p : {1.2, 2.0, 5.0}) {
    auto numeric = YoungFunction::conjugate_of(YoungFunction::power(p));
    const double pc = p / (p - 1.0);
    for (double t : log_grid(1e-4, 1e4, 5)) {
      const double closed = (p - 1.0) * std::pow(t / p, pc);
      if (std::abs(numeric(t) - closed) > 1e-8 * closed) {
        pass = false;
        detail = "p = " + std::to_string(p);
      }
    }
  }
  report(2, "symbolic vs numeric Legendre", pass, tm.seconds(), detail);
}

void c3_gate_duality() {
  Timer tm;
  bool pass = true;
  std::string detail;
  const gates::SmoothnessParams sub(2, 0.5), grad(2, 1.5);
  for (const auto& a : battery()) {
    for (auto g : {gates::Gate::TailSub, gates::Gate::OriginSub, gates::Gate::OriginGrad,
                   gates::Gate::TailGrad}) {
      const auto& p = (g == gates::Gate::TailSub || g == gates::Gate::OriginSub) ? sub : grad;
      const auto rep = gates::classify_gate(a, p, g);
      if (rep.verdict == gates::Verdict::Inconclusive || !rep.dual_checked ||
          rep.verdict != rep.dual_verdict) {
        pass = false;
        detail = a.describe() + std::string(" gate ") + gates::gate_name(g);
      }
    }
  }
  report(3, "gate duality (ibero0/iberoinf)", pass, tm.seconds(), detail);
}

void c4_classical_exponent() {
  Timer tm;
  const gates::SmoothnessParams p(2, 0.5);
  auto sg = modulus::sigma(YoungFunction::power(5), p);
  modulus::EquivalenceConfig cfg;
  cfg.decades = 6;
  auto rep = modulus::verify_equivalence([&sg](double r) { return sg.eval(r); },
                                         [](double r) { return std::pow(r, 0.1); },
                                         modulus::End::NearZero, cfg);
  const bool pass = rep.verdict && rep.ratio_max / rep.ratio_min < 10.0 &&
                    std::abs(rep.slope) < 0.02;
  char buf[96];
  std::snprintf(buf, sizeof buf, "spread %.3g, slope %.4f", rep.ratio_max / rep.ratio_min,
                rep.slope);
  report(4, "classical Hoelder exponent", pass, tm.seconds(), buf);
}

void c5_example_matrix() {
  Timer tm;
  const auto rows = examples::load_manifest("");
  const auto results = examples::run_all(rows);
  int bad = 0;
  std::string detail;
  for (const auto& r : results)
    if (!r.pass) {
      ++bad;
      detail = r.row.id + ": " + r.detail;
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu rows%s%s", results.size() - bad, results.size(),
                detail.empty() ? "" : "; ", detail.c_str());
  report(5, "worked-example matrix", bad == 0, tm.seconds(), buf);
}

void c6_necessity() {
  Timer tm;
  using Status = modulus::EmbeddingClassification::Status;
  bool pass = true;
  std::string detail;
  auto expect = [&](const YoungFunction& a, int n, double s, Status want, const char* label) {
    const auto cls = modulus::classify_embedding(a, gates::SmoothnessParams(n, s));
    if (cls.status != want) {
      pass = false;
      detail = label;
    }
  };
  // excluded parameter rows of the power-log example
  expect(YoungFunction::power_log(2, 0, 4, 3), 2, 0.5, Status::NoEmbedding, "p=n/s alpha=n/s-1");
  expect(YoungFunction::power_log(2, 0, 2, 0), 2, 0.5, Status::NoEmbedding, "p<n/s");
  expect(YoungFunction::power_log(6, 5, 3, 0), 3, 1.5, Status::NoEmbedding, "origin borderline");
  expect(YoungFunction::exponential(-1, 1), 2, 1.5, Status::NoEmbedding, "exponential s>1");
  expect(YoungFunction::power(2), 1, 2.5, Status::Inadmissible, "s > n+1");
  report(6, "necessity direction", pass, tm.seconds(), detail);
}

void c7_kernel_norms() {
  Timer tm;
  bool pass = true;
  std::string detail;
  // closed form at (n=1, s=3/4, A=t^2)
  {
    const gates::SmoothnessParams p(1, 0.75);
    for (double r : {0.01, 1.0, 100.0}) {
      const auto kn = norms::kernel_norms(YoungFunction::power(2), p, r);
      const double want = std::pow(r, 0.25) / std::sqrt(2.0);
      if (kn.k0.infinite || std::abs(kn.k0.value - want) > 1e-6 * want) {
        pass = false;
        detail = "closed form K0";
      }
    }
  }
  modulus::EquivalenceConfig cfg;
  cfg.decades = 4;
  cfg.per_decade = 6;
  cfg.anchor = 1.0;
  cfg.slope_decades = 2;
  // K0 ~ theta for four members in the subcritical regime
  {
    const gates::SmoothnessParams p(2, 0.5);
    for (const auto& a : {YoungFunction::power(5), YoungFunction::power_log(2, 0, 5, -1),
                          YoungFunction::exponential(-1, 1), YoungFunction::linfty_gauge()}) {
      auto th = modulus::theta(a, p);
      for (auto end : {modulus::End::NearZero, modulus::End::NearInfinity}) {
        auto rep = modulus::verify_equivalence(
            [&](double r) {
              const auto kn = norms::kernel_norms(a, p, r);
              return kn.k0.infinite ? kInf : kn.k0.value;
            },
            [&th](double r) { return th.eval(r); }, end, cfg);
        if (!rep.verdict) {
          pass = false;
          detail = "K0 vs theta: " + a.describe();
        }
      }
    }
  }
  // Kinf ~ rho for four members in the gradient regime
  {
    const gates::SmoothnessParams p(3, 1.5);
    for (const auto& a :
         {YoungFunction::power(2), YoungFunction::power_log(2, 0, 3, 0),
          YoungFunction::power_log(1.5, 0, 4, 1), YoungFunction::power_log(2, 1, 3, 0)}) {
      auto rh = modulus::rho(a, p);
      for (auto end : {modulus::End::NearZero, modulus::End::NearInfinity}) {
        auto rep = modulus::verify_equivalence(
            [&](double r) {
              const auto kn = norms::kernel_norms(a, p, r);
              return kn.kinf.infinite ? kInf : kn.kinf.value;
            },
            [&rh](double r) { return rh.eval(r); }, end, cfg);
        if (!rep.verdict) {
          pass = false;
          detail = "Kinf vs rho: " + a.describe();
        }
      }
    }
  }
  report(7, "kernel-norm equivalences", pass, tm.seconds(), detail);
}

void c8_seminorm_oracles() {
  Timer tm;
  bool pass = true;
  std::string detail;
  const gates::SmoothnessParams p(1, 0.5);
  std::mt19937_64 rng(4242);
  std::vector<YoungFunction> gauges = {YoungFunction::power(2), YoungFunction::power(2),
                                       YoungFunction::power(3),
                                       YoungFunction::power_log(2, 0, 4, 1),
                                       YoungFunction::power(2)};
  for (int k = 0; k < 5; ++k) {
    auto f = k == 0 ? norms::SampledFunction::indicator(0, 1) : seeded_profile(rng);
    auto u = trial::make_trial(trial::TrialKind::Radial, f, p);
    const auto& A = gauges[k];
    auto rq = trial::gagliardo_radial(A, p, u);
    trial::MonteCarloOptions opt;
    opt.seed = 31337 + k;
    opt.n = 1000000;
    auto mc = trial::gagliardo_mc(A, p, u, opt);
    // brute-force midpoint grid with diagonal refinement and far tail
    const double R = u.support_radius();
    const double L = 4.0 * R;
    const int N = 2000;
    const double dx = 2.0 * L / N;
    auto fval = [&u](double x) { return u(trial::Point{x}); };
    double oracle = 0.0;
    for (int i = 0; i < N; ++i) {
      const double x = -L + (i + 0.5) * dx;
      const double ux = fval(x);
      for (int j = 0; j < N; ++j) {
        if (std::abs(i - j) <= 5) continue;
        const double y = -L + (j + 0.5) * dx;
        const double du = std::abs(fval(y) - ux);
        if (du == 0.0) continue;
        oracle += A(du / std::sqrt(std::abs(x - y))) / std::abs(x - y) * dx * dx;
      }
      const double hmax = 5.5 * dx;
      for (int kk = 0; kk < 240; ++kk) {
        const double h0 = 1e-9 * std::pow(hmax / 1e-9, kk / 240.0);
        const double h1 = 1e-9 * std::pow(hmax / 1e-9, (kk + 1) / 240.0);
        const double hm = std::sqrt(h0 * h1);
        for (double e : {1.0, -1.0}) {
          const double du = std::abs(fval(x + e * hm) - ux);
          if (du > 0.0) oracle += A(du / std::sqrt(hm)) / hm * (h1 - h0) * dx;
        }
      }
      if (ux > 0.0) {
        for (double side : {1.0, -1.0}) {
          const double d0 = side > 0 ? L - x : L + x;
          for (int kk = 0; kk < 400; ++kk) {
            const double h0 = d0 * std::pow(1e7, kk / 400.0);
            const double h1 = d0 * std::pow(1e7, (kk + 1) / 400.0);
            const double hm = std::sqrt(h0 * h1);
            oracle += 2.0 * A(ux / std::sqrt(hm)) / hm * (h1 - h0) * dx;
          }
        }
      }
    }
    const double tol_mc = 3.0 * mc.stderr_ + 0.02 * rq.value;
    if (std::abs(mc.value - rq.value) > tol_mc ||
        std::abs(oracle - rq.value) > 0.02 * rq.value) {
      pass = false;
      char buf[128];
      std::snprintf(buf, sizeof buf, "trial %d: rq %.5g mc %.5g oracle %.5g", k, rq.value,
                    mc.value, oracle);
      detail = buf;
    }
  }
  report(8, "seminorm oracle agreement", pass, tm.seconds(), detail);
}

void c9_scaling_blowup() {
  Timer tm;
  const gates::SmoothnessParams p(1, 2.5);
  // Hoelder quotient of the scaling family at the gradient direction pair
  auto grad = trial::TrialFunction::bump_gradient_at_origin(1);
  const double sign = grad[0] >= 0 ? 1.0 : -1.0;
  std::vector<double> lk, lq;
  auto omega = [](double) { return 1.0; };  // evaluated at unit distance only
  for (int e = 1; e <= 10; ++e) {
    const double k = std::pow(2.0, e);
    auto uk = trial::make_trial(trial::TrialKind::ScalingFamily, {}, p, k);
    std::vector<std::pair<trial::Point, trial::Point>> pair{{{sign}, {0.0}}};
    const double q = trial::holder_quotient([&uk](const trial::Point& x) { return uk(x); },
                                            omega, pair);
    lk.push_back(std::log(k));
    lq.push_back(std::log(q));
  }
  const double slope = fit_slope(lk, lq);
  const bool pass = slope >= 0.4 && slope <= 0.6;
  char buf[64];
  std::snprintf(buf, sizeof buf, "log-log slope %.4f (target 0.5)", slope);
  report(9, "scaling blow-up above n+1", pass, tm.seconds(), buf);
}

void c10_modular_bound() {
  Timer tm;
  const gates::SmoothnessParams p(1, 0.5);
  std::mt19937_64 rng(7001);
  std::vector<YoungFunction> gauges = {YoungFunction::power(3), YoungFunction::power(4),
                                       YoungFunction::power_log(2, 0, 4, 1)};
  double cmax = 0.0;
  for (const auto& A : gauges) {
    for (int k = 0; k < 5; ++k) {
      auto f = k == 0 ? norms::SampledFunction::indicator(0, 1) : seeded_profile(rng);
      auto u = trial::make_trial(trial::TrialKind::Radial, f, p);
      auto pairs = trial::make_pair_sampler(1, 9000 + k, 1e-3, 10.0, 13, 1.0);
      pairs.resize(50);
      auto rep = trial::check_modular_bound(A, p, u, pairs);
      cmax = std::max(cmax, rep.max_ratio);
    }
  }
  const bool pass = kModularBoundC > 0.0 && cmax <= 1.05 * kModularBoundC;
  char buf[96];
  std::snprintf(buf, sizeof buf, "max ratio %.6g (frozen %.6g)", cmax, kModularBoundC);
  report(10, "pointwise modular bound", pass, tm.seconds(), buf);
}

void c11_trial_bounds() {
  Timer tm;
  auto A = YoungFunction::power(2.0);
  std::mt19937_64 rng(7777);
  double cr = 0.0, co = 0.0;
  {
    const gates::SmoothnessParams p(1, 0.5);
    for (int k = 0; k < 10; ++k) {
      auto f = k == 0 ? norms::SampledFunction::indicator(0, 1) : seeded_profile(rng);
      auto u = trial::make_trial(trial::TrialKind::Radial, f, p);
      const auto sn = trial::seminorm(A, p, u);
      const double fn = norms::luxemburg_norm(A, f).value;
      cr = std::max(cr, sn.value / fn);
    }
  }
  {
    const gates::SmoothnessParams p(1, 1.5);
    for (int k = 0; k < 10; ++k) {
      auto f = k == 0 ? norms::SampledFunction::indicator(0, 1) : seeded_profile(rng);
      auto u = trial::make_trial(trial::TrialKind::Odd, f, p);
      const auto sn = trial::seminorm(A, p, u);
      const double fn = norms::luxemburg_norm(A, f).value;
      co = std::max(co, sn.value / fn);
    }
  }
  const bool pass = kRadialBoundC > 0.0 && cr <= 1.05 * kRadialBoundC &&
                    kOddBoundC > 0.0 && co <= 1.05 * kOddBoundC;
  char buf[128];
  std::snprintf(buf, sizeof buf, "radial %.6g (frozen %.6g), odd %.6g (frozen %.6g)", cr,
                kRadialBoundC, co, kOddBoundC);
  report(11, "trial-function seminorm bounds", pass, tm.seconds(), buf);
}

void c12_norm_properties() {
  Timer tm;
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(1312);
  auto p2 = YoungFunction::power(2.0);
  auto pl = YoungFunction::power_log(2, 1, 4, -1);
  for (int k = 0; k < 100; ++k) {
    auto u = seeded_step(rng);
    for (const auto& a : {p2, pl}) {
      const auto res = norms::luxemburg_norm(a, u);
      if (!(res.value > 0.0) || res.modular_at_value > 1.0 + 1e-8) {
        pass = false;
        detail = "unit ball (upper)";
      }
      double below = 0.0;
      for (size_t i = 0; i < u.values.size(); ++i)
        below += a(std::abs(u.values[i]) / (0.99 * res.value)) * (u.grid[i + 1] - u.grid[i]);
      if (!(below > 1.0 - 1e-9)) {
        pass = false;
        detail = "unit ball (lower)";
      }
      const double n2 = norms::luxemburg_norm(a, norms::decreasing_rearrangement(u)).value;
      if (std::abs(n2 - res.value) > 1e-6 * res.value) {
        pass = false;
        detail = "rearrangement invariance";
      }
    }
  }
  report(12, "unit ball and rearrangement invariance", pass, tm.seconds(), detail);
}

}  // namespace

int main() {
  Timer total;
  c1_sandwich();
  c2_legendre();
  c3_gate_duality();
  c4_classical_exponent();
  c5_example_matrix();
  c6_necessity();
  c7_kernel_norms();
  c8_seminorm_oracles();
  c9_scaling_blowup();
  c10_modular_bound();
  c11_trial_bounds();
  c12_norm_properties();
  std::printf("%s: %d criteria failed (total %.1fs)\n", failures == 0 ? "SUCCESS" : "FAILURE",
              failures, total.seconds());
  return failures == 0 ? 0 : 1;
}

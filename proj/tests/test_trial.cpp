#include <cmath>
#include <random>

#include "doctest.h"
#include "orso/trial.hpp"

using namespace orso;
using namespace orso::trial;
using gates::SmoothnessParams;
using norms::SampledFunction;
using young::YoungFunction;

namespace {

SampledFunction random_profile(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ncells(1, 5);
  std::uniform_real_distribution<double> ulen(0.2, 1.0), uval(0.2, 2.0);
  const int m = ncells(rng);
  std::vector<double> grid{0.0}, vals;
  double level = 0.0;
  for (int i = 0; i < m; ++i) level += uval(rng);
  for (int i = 0; i < m; ++i) {
    grid.push_back(grid.back() + ulen(rng));
    vals.push_back(level);
    level -= uval(rng) * 0.9;
    level = std::max(level, 0.01);
  }
  // make non-increasing explicitly
  for (size_t i = 1; i < vals.size(); ++i) vals[i] = std::min(vals[i], vals[i - 1]);
  return SampledFunction(std::move(grid), std::move(vals));
}

}  // namespace

TEST_CASE("radial trial closed form (n=1, s=1/2, f = indicator)") {
  const SmoothnessParams p(1, 0.5);
  auto u = make_trial(TrialKind::Radial, SampledFunction::indicator(0, 1), p);
  // u(0) = integral_0^1 r^{s/n - 1} dr = n/s = 2
  CHECK(u(Point{0.0}) == doctest::Approx(2.0));
  // u(x) = 2 (1 - sqrt(2|x|)) for 2|x| <= 1
  for (double x : {0.05, 0.2, 0.4}) {
    CHECK(u(Point{x}) == doctest::Approx(2.0 * (1.0 - std::sqrt(2.0 * x))).epsilon(1e-12));
    CHECK(u(Point{-x}) == doctest::Approx(u(Point{x})));
  }
  CHECK(u(Point{0.6}) == 0.0);
  CHECK(u.support_radius() == doctest::Approx(0.5));
  // (fi3) companion: |u(0) - u(x)| >= lower_bound(|x|); equality when [s] = 0
  for (double x : {0.1, 0.3, 0.45})
    CHECK(u(Point{0.0}) - u(Point{x}) == doctest::Approx(u.lower_bound(x)).epsilon(1e-12));
}

TEST_CASE("odd trial vanishes at the origin and has closed-form derivative") {
  const SmoothnessParams p(1, 1.5);
  auto u = make_trial(TrialKind::Odd, SampledFunction::indicator(0, 1), p);
  CHECK(u(Point{0.0}) == 0.0);
  CHECK(u(Point{0.2}) == doctest::Approx(-u(Point{-0.2})));
  // derivative consistency: finite difference against the closed form
  for (double x : {0.05, 0.17, 0.31}) {
    const double h = 1e-7;
    const double fd = (u(Point{x + h}) - u(Point{x - h})) / (2.0 * h);
    CHECK(u.odd_derivative_1d(x) == doctest::Approx(fd).epsilon(1e-5));
  }
  // (sep100) companion bound: |u(x) - u(0)| >= lower_bound(|x|)
  for (double x : {0.05, 0.2, 0.4})
    CHECK(std::abs(u(Point{x})) >= u.lower_bound(x) * (1.0 - 1e-12));
}

TEST_CASE("radial-higher derivative matches finite differences") {
  const SmoothnessParams p(3, 1.5);
  auto u = make_trial(TrialKind::RadialHigher, SampledFunction::indicator(0, 1), p);
  for (double r : {0.1, 0.25, 0.4}) {
    const double h = 1e-7;
    const double fd = (u.value_radial(r + h) - u.value_radial(r - h)) / (2.0 * h);
    CHECK(u.radial_derivative(r) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("scaling family reduces to the bump at k = 1") {
  const SmoothnessParams p(1, 2.5);
  auto u1 = make_trial(TrialKind::ScalingFamily, {}, p, 1.0);
  for (double x : {-0.3, 0.0, 0.4, 1.2}) {
    CHECK(u1(Point{x}) == doctest::Approx(TrialFunction::bump(Point{x})));
  }
  // gradient of the bump at the origin is nonzero along e1
  auto g = TrialFunction::bump_gradient_at_origin(1);
  CHECK(std::abs(g[0]) > 0.1);
  const double h = 1e-7;
  const double fd = (TrialFunction::bump(Point{h}) - TrialFunction::bump(Point{-h})) / (2 * h);
  CHECK(g[0] == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("profile validation") {
  const SmoothnessParams p(1, 0.5);
  CHECK_THROWS_AS(make_trial(TrialKind::Radial,
                             SampledFunction({0.0, 1.0, 2.0}, {1.0, 2.0}), p),
                  domain_error);  // increasing profile
  CHECK_THROWS_AS(make_trial(TrialKind::Radial, SampledFunction({0.0, 1.0}, {-1.0}), p),
                  domain_error);
  CHECK_THROWS_AS(make_trial(TrialKind::Odd, SampledFunction::indicator(0, 1), p),
                  domain_error);  // odd kind needs s > 1
}

TEST_CASE("gagliardo modular: constants give zero, scaling identity holds") {
  auto A = YoungFunction::power(2.0);
  // constant function: numerator vanishes identically
  auto est = gagliardo_1d(A, 0.5, [](double) { return 3.0; }, 1.0);
  CHECK(est.value == 0.0);

  // scaling identity J(lambda^s u(./lambda)) = lambda^n J(u) at lambda = 2
  const SmoothnessParams p(1, 0.5);
  auto u = make_trial(TrialKind::Radial, SampledFunction::indicator(0, 1), p);
  auto base = [&u](double x) { return u(Point{x}); };
  const double lam = 2.0;
  auto scaled = [&, lam](double x) { return std::pow(lam, 0.5) * base(x / lam); };
  auto j1 = gagliardo_1d(A, 0.5, base, u.support_radius());
  auto j2 = gagliardo_1d(A, 0.5, scaled, lam * u.support_radius());
  CHECK(j2.value == doctest::Approx(lam * j1.value).epsilon(2e-3));
}

TEST_CASE("radial quadrature agrees with a brute-force grid oracle (n=1)") {
  const SmoothnessParams p(1, 0.5);
  auto A = YoungFunction::power(2.0);
  auto u = make_trial(TrialKind::Radial, SampledFunction::indicator(0, 1), p);
  auto f = [&u](double x) { return u(Point{x}); };
  const double R = u.support_radius();

  auto rq = gagliardo_radial(A, p, u);
  REQUIRE(rq.flag == Estimate::Flag::Ok);

  // brute force: midpoint 2000^2 grid over the square, diagonal band refined
  // in the gap variable
  const int N = 2000;
  const double L = 4.0 * R;
  const double dx = 2.0 * L / N;
  double oracle = 0.0;
  for (int i = 0; i < N; ++i) {
    const double x = -L + (i + 0.5) * dx;
    const double ux = f(x);
    for (int j = 0; j < N; ++j) {
      if (std::abs(i - j) <= 2) continue;  // diagonal band handled below
      const double y = -L + (j + 0.5) * dx;
      const double d = std::abs(x - y);
      const double du = std::abs(f(y) - ux);
      if (du == 0.0) continue;
      oracle += A(du / std::sqrt(d)) / d * dx * dx;
    }
    // diagonal band: log grid in the gap h over [1e-9, 2.5 dx], both sides
    const double hmax = 2.5 * dx;
    const int M = 160;
    for (int k = 0; k < M; ++k) {
      const double h0 = 1e-9 * std::pow(hmax / 1e-9, static_cast<double>(k) / M);
      const double h1 = 1e-9 * std::pow(hmax / 1e-9, static_cast<double>(k + 1) / M);
      const double hm = std::sqrt(h0 * h1);
      for (double e : {1.0, -1.0}) {
        const double du = std::abs(f(x + e * hm) - ux);
        if (du == 0.0) continue;
        oracle += A(du / std::sqrt(hm)) / hm * (h1 - h0) * dx;
      }
    }
  }
  // ordered pairs with one point outside the box: u there is zero; the
  // mirrored set (x outside, y inside) contributes the same amount again
  for (int i = 0; i < N; ++i) {
    const double x = -L + (i + 0.5) * dx;
    const double ux = f(x);
    if (ux == 0.0) continue;
    for (double side : {1.0, -1.0}) {
      const double d0 = side > 0 ? L - x : L + x;
      const int M = 400;
      for (int k = 0; k < M; ++k) {
        const double h0 = d0 * std::pow(1e7, static_cast<double>(k) / M);
        const double h1 = d0 * std::pow(1e7, static_cast<double>(k + 1) / M);
        const double hm = std::sqrt(h0 * h1);
        oracle += 2.0 * A(ux / std::sqrt(hm)) / hm * (h1 - h0) * dx;
      }
    }
  }
  CHECK(rq.value == doctest::Approx(oracle).epsilon(0.02));
}

TEST_CASE("Monte Carlo agrees with radial quadrature") {
  auto A = YoungFunction::power(2.0);
  std::mt19937_64 rng(17);
  // five radial trials across n = 1 and n = 2
  for (int k = 0; k < 5; ++k) {
    const int n = (k % 2) ? 2 : 1;
    const SmoothnessParams p(n, 0.5);
    auto u = make_trial(TrialKind::Radial, random_profile(rng), p);
    auto rq = gagliardo_radial(A, p, u);
    MonteCarloOptions opt;
    opt.seed = 1000 + k;
    opt.n = 200000;
    auto mc = gagliardo_mc(A, p, u, opt);
    REQUIRE(rq.flag == Estimate::Flag::Ok);
    REQUIRE(mc.flag == Estimate::Flag::Ok);
    const double tol = 3.0 * mc.stderr_ + 0.02 * rq.value;
    CHECK(std::abs(mc.value - rq.value) <= tol);
  }
}

TEST_CASE("Monte Carlo is reproducible bit for bit") {
  const SmoothnessParams p(1, 0.5);
  auto A = YoungFunction::power(2.0);
  auto u = make_trial(TrialKind::Radial, SampledFunction::indicator(0, 1), p);
  MonteCarloOptions opt;
  opt.seed = 42;
  opt.n = 50000;
  auto a1 = gagliardo_mc(A, p, u, opt);
  auto a2 = gagliardo_mc(A, p, u, opt);
  CHECK(a1.value == a2.value);
  CHECK(a1.stderr_ == a2.stderr_);
  opt.seed = 43;
  auto b = gagliardo_mc(A, p, u, opt);
  CHECK(a1.value != b.value);
}

TEST_CASE("seminorm: homogeneity and vanishing on constants") {
  const SmoothnessParams p(1, 0.5);
  auto A = YoungFunction::power(2.0);
  auto f = SampledFunction::indicator(0, 1);
  auto u = make_trial(TrialKind::Radial, f, p);
  auto doubled_f = f;
  for (auto& v : doubled_f.values) v *= 2.0;
  auto u2 = make_trial(TrialKind::Radial, doubled_f, p);
  const auto s1 = seminorm(A, p, u);
  const auto s2 = seminorm(A, p, u2);
  REQUIRE(!s1.infinite);
  CHECK(s2.value == doctest::Approx(2.0 * s1.value).epsilon(1e-3));
  CHECK(s1.value > 0.0);

  auto zero = make_trial(TrialKind::Radial, SampledFunction({0.0, 1.0}, {0.0}), p);
  CHECK(seminorm(A, p, zero).value == 0.0);
}

TEST_CASE("seminorm bounded by the profile norm (radial and odd kinds)") {
  auto A = YoungFunction::power(2.0);
  std::mt19937_64 rng(23);
  // (july17): radial, s in (0,1)
  {
    const SmoothnessParams p(1, 0.5);
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      auto f = random_profile(rng);
      auto u = make_trial(TrialKind::Radial, f, p);
      const auto sn = seminorm(A, p, u);
      const double fnorm = norms::luxemburg_norm(A, f).value;
      REQUIRE(!sn.infinite);
      worst = std::max(worst, sn.value / fnorm);
    }
    CHECK(worst < 10.0);
  }
  // (sep109): odd, s in (1,2)
  {
    const SmoothnessParams p(1, 1.5);
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      auto f = random_profile(rng);
      auto u = make_trial(TrialKind::Odd, f, p);
      const auto sn = seminorm(A, p, u);
      const double fnorm = norms::luxemburg_norm(A, f).value;
      REQUIRE(!sn.infinite);
      worst = std::max(worst, sn.value / fnorm);
    }
    CHECK(worst < 10.0);
  }
}

TEST_CASE("pointwise modular bound (paseky form)") {
  const SmoothnessParams p(1, 0.5);
  auto A = YoungFunction::power(4.0);
  auto u = make_trial(TrialKind::Radial, SampledFunction::indicator(0, 1), p);
  auto pairs = make_pair_sampler(1, 2024, 1e-3, 1.0, 10, 1.0);
  auto rep = check_modular_bound(A, p, u, pairs);
  CHECK(rep.modular > 0.0);
  CHECK(rep.max_ratio > 0.0);
  CHECK(rep.max_ratio < 10.0);
  CHECK(rep.pairs == static_cast<int>(pairs.size()));
}

TEST_CASE("Hoelder quotient") {
  auto constant = [](const Point&) { return 1.0; };
  auto omega = [](double r) { return r; };
  auto pairs = make_pair_sampler(1, 7, 1e-2, 1.0, 5, 1.0);
  CHECK(holder_quotient(constant, omega, pairs) == 0.0);

  // a radial trial against its own optimal modulus stays bounded as the
  // sampler densifies
  const SmoothnessParams p(1, 0.5);
  auto A = YoungFunction::power(4.0);
  auto u = make_trial(TrialKind::Radial, SampledFunction::indicator(0, 1), p);
  auto sg = modulus::sigma(A, p);
  auto uf = [&u](const Point& x) { return u(x); };
  auto om = [&sg](double r) { return sg.eval(r); };
  const double q1 = holder_quotient(uf, om, make_pair_sampler(1, 11, 1e-4, 1.0, 20, 1.0));
  const double q2 = holder_quotient(uf, om, make_pair_sampler(1, 11, 1e-4, 1.0, 40, 1.0));
  CHECK(q1 > 0.0);
  CHECK(q2 >= q1 * (1.0 - 1e-12));
  CHECK(q2 <= q1 * 1.5);
}

TEST_CASE("flatten_tail") {
  // g = indicator(R, 2R): the average over (R, 2R) is one
  const double R = 0.5;
  auto g1 = SampledFunction({0.0, R, 2 * R}, {0.0, 1.0});
  auto f1 = flatten_tail(g1, R);
  CHECK(f1(0.1) == doctest::Approx(1.0));
  CHECK(f1(0.9) == doctest::Approx(1.0));
  CHECK(f1(1.1) == 0.0);

  // g = indicator(R, 3R): 1 on (0, 2R), then g beyond
  auto g2 = SampledFunction({0.0, R, 3 * R}, {0.0, 1.0});
  auto f2 = flatten_tail(g2, R);
  CHECK(f2(0.2) == doctest::Approx(1.0));
  CHECK(f2(1.2) == doctest::Approx(1.0));
  CHECK(f2(1.6) == 0.0);

  // precondition violations are rejected
  auto bad = SampledFunction({0.0, 0.5 * R, 2 * R}, {1.0, 1.0});
  CHECK_THROWS_AS(flatten_tail(bad, R), domain_error);

  // norm bound with a single constant across random tails
  auto A = YoungFunction::power(2.0);
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    auto base = random_profile(rng);
    // shift the profile past R so it vanishes on (0, R)
    std::vector<double> grid{0.0, R};
    std::vector<double> vals{0.0};
    for (size_t i = 0; i < base.values.size(); ++i) {
      grid.push_back(R + base.grid[i + 1]);
      vals.push_back(base.values[i]);
    }
    auto g = SampledFunction(std::move(grid), std::move(vals));
    auto f = flatten_tail(g, R);
    const double ng = norms::luxemburg_norm(A, g).value;
    const double nf = norms::luxemburg_norm(A, f).value;
    worst = std::max(worst, nf / ng);
    // the weighted tail integrals match up to constants
    const double e = -1.0 - 0.5;  // -1 - (s-1)/n at s = 1.5, n = 1
    auto wint = [&](const SampledFunction& h) {
      double total = 0.0;
      for (size_t i = 0; i < h.values.size(); ++i) {
        const double lo = std::max(h.grid[i], R), hi = h.grid[i + 1];
        if (hi <= lo || h.values[i] == 0.0) continue;
        total += h.values[i] * (std::pow(hi, e + 1) - std::pow(lo, e + 1)) / (e + 1);
      }
      return total;
    };
    const double wg = wint(g), wf = wint(f);
    CHECK(wf >= 0.2 * wg);
    CHECK(wf <= 5.0 * wg);
  }
  CHECK(worst <= 4.0);
}

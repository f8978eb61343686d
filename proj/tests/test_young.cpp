#include <cmath>

#include "battery.hpp"
#include "doctest.h"
#include "orso/young.hpp"

using namespace orso;
using young::YoungFunction;

TEST_CASE("evaluation basics") {
  auto p2 = YoungFunction::power(2.0);
  CHECK(p2(3.0) == doctest::Approx(9.0));
  for (const auto& a : young_battery()) CHECK(a(0.0) == 0.0);
  auto gauge = YoungFunction::linfty_gauge();
  CHECK(gauge(0.5) == 0.0);
  CHECK(std::isinf(gauge(2.0)));
  CHECK_THROWS_AS(p2(-1.0), domain_error);
}

TEST_CASE("generalized inverse") {
  auto p2 = YoungFunction::power(2.0);
  CHECK(p2.inverse(4.0) == doctest::Approx(2.0));
  CHECK(p2.inverse(0.0) == 0.0);
  // sup{t : A(t) <= 7} = 1 for the gauge
  CHECK(YoungFunction::linfty_gauge().inverse(7.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(p2.inverse(-1.0), domain_error);
}

TEST_CASE("closed-form conjugates") {
  auto p2c = YoungFunction::power(2.0).conjugate();
  for (double t : {0.1, 1.0, 7.0}) CHECK(p2c(t) == doctest::Approx(t * t / 4.0));

  auto gc = YoungFunction::linfty_gauge().conjugate();
  for (double t : {0.5, 2.0, 100.0}) CHECK(gc(t) == doctest::Approx(t));

  auto p1c = YoungFunction::power(1.0).conjugate();
  CHECK(p1c(0.5) == 0.0);
  CHECK(p1c(1.0) == 0.0);
  CHECK(std::isinf(p1c(1.5)));
}

TEST_CASE("numeric conjugate matches the closed form to 1e-8") {
  for (double p : {1.2, 2.0, 5.0}) {
    auto numeric = YoungFunction::conjugate_of(YoungFunction::power(p));
    const double pc = p / (p - 1.0);
    for (double t : log_grid(1e-4, 1e4, 5)) {
      const double closed = (p - 1.0) * std::pow(t / p, pc);
      CHECK(numeric(t) == doctest::Approx(closed).epsilon(1e-8));
    }
  }
}

TEST_CASE("conjugate sandwich t <= Ainv(t) conjinv(t) <= 2t") {
  for (const auto& a : young_battery()) {
    const auto conj = a.conjugate();
    for (double t : log_grid(1e-6, 1e6, 5)) {
      const double ai = a.inverse(t), ci = conj.inverse(t);
      if (std::isinf(ai) || std::isinf(ci)) continue;
      const double prod = ai * ci;
      CHECK(prod >= t * (1.0 - 1e-6));
      CHECK(prod <= 2.0 * t * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("biconjugation recovers the function") {
  // convex lower-semicontinuous: conj(conj(A)) == A on the finite region
  std::vector<YoungFunction> some = {YoungFunction::power(2.0),
                                     YoungFunction::power_log(2, 0, 4, 4),
                                     YoungFunction::exponential(-1, 1)};
  for (const auto& a : some) {
    auto bi = YoungFunction::conjugate_of(YoungFunction::conjugate_of(a));
    for (double t : log_grid(1e-3, 1e2, 2)) {
      const double v = a(t);
      if (!std::isfinite(v) || v < 1e-280) continue;
      CHECK(bi(t) == doctest::Approx(v).epsilon(1e-6));
    }
  }
}

TEST_CASE("inverse consistency") {
  for (const auto& a : young_battery()) {
    for (double y : log_grid(1e-4, 1e4, 3)) {
      const double t = a.inverse(y);
      if (std::isinf(t) || t == 0.0) continue;
      CHECK(a(t) <= y * (1.0 + 1e-8) + 1e-12);
    }
    for (double t : log_grid(1e-3, 1e3, 3)) {
      const double v = a(t);
      if (std::isinf(v)) continue;
      CHECK(a.inverse(v) >= t * (1.0 - 1e-8));
    }
  }
  // equality where A is continuous and strictly increasing
  auto pl = YoungFunction::power_log(2, 1, 4, -1);
  for (double t : log_grid(1e-3, 1e3, 3))
    CHECK(pl.inverse(pl(t)) == doctest::Approx(t).epsilon(1e-8));
}

TEST_CASE("Matuszewska indices") {
  auto idx3 = young::matuszewska_indices(YoungFunction::power(3.0));
  CHECK(idx3.i0.value == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(idx3.iinf.value == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(idx3.alt_valid);
  CHECK(idx3.i0_alt.value == doctest::Approx(3.0).epsilon(1e-6));

  auto idx_pl = young::matuszewska_indices(YoungFunction::power_log(2, 1, 4, -1));
  CHECK(idx_pl.i0.value == doctest::Approx(2.0).epsilon(0.025));
  CHECK(idx_pl.iinf.value == doctest::Approx(4.0).epsilon(0.0125));

  auto idx_exp = young::matuszewska_indices(YoungFunction::exponential(-1, 1));
  CHECK(idx_exp.iinf.is_inf);
}

TEST_CASE("index formulas agree on finite-valued battery members") {
  for (const auto& a : young_battery_finite()) {
    const auto idx = young::matuszewska_indices(a);
    if (!idx.alt_valid) continue;
    if (!idx.i0.is_inf && !idx.i0_alt.is_inf && !idx.i0.inconclusive && !idx.i0_alt.inconclusive)
      CHECK(std::abs(idx.i0.value - idx.i0_alt.value) <= 0.05);
    if (!idx.iinf.is_inf && !idx.iinf_alt.is_inf && !idx.iinf.inconclusive &&
        !idx.iinf_alt.inconclusive)
      CHECK(std::abs(idx.iinf.value - idx.iinf_alt.value) <= 0.05);
    if (idx.iinf.is_inf) CHECK(idx.iinf_alt.is_inf);
  }
}

TEST_CASE("axiom checker") {
  CHECK(young::check_axioms(YoungFunction::power(2.0)).ok);
  for (const auto& a : young_battery()) {
    auto rep = young::check_axioms(a);
    CHECK_MESSAGE(rep.ok, a.describe());
  }

  // concave tabulated sample fails convexity with a witness
  {
    std::vector<double> g, v;
    for (double t : log_grid(1e-4, 1e4, 8)) {
      g.push_back(t);
      v.push_back(std::sqrt(t));
    }
    auto bad = YoungFunction::tabulated(g, v);
    auto rep = young::check_axioms(bad);
    CHECK(!rep.ok);
    const auto* conv = rep.find("convex_midpoint");
    REQUIRE(conv != nullptr);
    CHECK(!conv->pass);
    CHECK(conv->witness_t > 0.0);
  }

  // p0 = 1 with alpha0 > 0 is inadmissible
  CHECK(!young::check_axioms(YoungFunction::power_log(1, 0.5, 2, 0)).ok);
}

TEST_CASE("domination search") {
  using young::Range;
  auto p2 = YoungFunction::power(2.0);
  auto p1 = YoungFunction::power(1.0);

  auto self = young::dominates(p2, p2, Range::Global);
  CHECK(self.dominated);
  CHECK(self.c == doctest::Approx(1.0));

  auto up = young::dominates(p2, p1, Range::NearInfinity);
  CHECK(up.dominated);

  auto down = young::dominates(p1, p2, Range::NearInfinity);
  CHECK(!down.dominated);
  CHECK(!down.witnesses.empty());

  CHECK(young::equivalent(p2, YoungFunction::scaled_power(0.25, 2.0), Range::Global));
}

TEST_CASE("factory edge cases") {
  CHECK(YoungFunction::power_log(2, 0, 4, 4, 2.0)(2.0) > 0.0);
  CHECK(YoungFunction::gauge_wall(3.0).inverse(5.0) == doctest::Approx(3.0));
  CHECK_THROWS_AS(YoungFunction::power(0.5), domain_error);
  CHECK_THROWS_AS(YoungFunction::exponential(1.0, 1.0), domain_error);
}

#pragma once

// Concrete YoungFunction representations.  Shared between young.cpp and the
// serialization layer; not part of the public surface.

#include <cmath>
#include <utility>

#include "orso/young.hpp"

namespace orso::young {

inline constexpr double kE1 = 1.718281828459045235360287471352662498;  // e - 1

// C * t^p with p >= 1 (closed under conjugation together with GaugeWall).
class ScaledPowerImpl final : public Impl {
 public:
  ScaledPowerImpl(double c, double p) : c_(c), p_(p) {
    if (!(c > 0.0) || !(p >= 1.0)) throw domain_error("power: need c > 0, p >= 1");
  }
  Kind kind() const override { return Kind::Power; }
  double value(double t) const override;
  double density(double t) const override;
  double inverse(double y) const override;
  bool has_log_density() const override { return p_ > 1.0; }
  double log_density(double xi) const override;
  double log_density_inverse(double w) const override;
  AsymModel model_zero() const override { return AsymModel::power_log(p_, 0, 0, std::log(c_)); }
  AsymModel model_inf() const override { return AsymModel::power_log(p_, 0, 0, std::log(c_)); }
  std::shared_ptr<const Impl> closed_conjugate() const override;
  std::string describe() const override;

  double c() const { return c_; }
  double p() const { return p_; }

 private:
  double c_, p_;
};

// 0 on [0, w], +inf beyond; w == 1 is the L^infty gauge.
class GaugeWallImpl final : public Impl {
 public:
  explicit GaugeWallImpl(double w) : w_(w) {
    if (!(w > 0.0)) throw domain_error("gauge wall: need threshold > 0");
  }
  Kind kind() const override { return Kind::LInftyGauge; }
  double value(double t) const override { return t <= w_ ? 0.0 : kInf; }
  double density(double t) const override { return t <= w_ ? 0.0 : kInf; }
  double finiteness_threshold() const override { return w_; }
  double inverse(double) const override { return w_; }
  AsymModel model_zero() const override { return AsymModel::zero_below(w_); }
  AsymModel model_inf() const override { return AsymModel::wall_at(w_); }
  std::shared_ptr<const Impl> closed_conjugate() const override;
  std::string describe() const override;

  double wall() const { return w_; }

 private:
  double w_;
};

// t^{p0} log(e-1 + 1/t)^{alpha0} below the crossover, scaled
// t^{p} log(e-1 + t)^{alpha} above it.  The scale keeps A continuous; with
// crossover 1 both log factors equal 1 there and the scale is 1.
class PowerLogImpl final : public Impl {
 public:
  PowerLogImpl(double p0, double a0, double p, double a, double cross);
  Kind kind() const override { return Kind::PowerLog; }
  double value(double t) const override;
  double density(double t) const override;
  bool has_log_density() const override { return true; }
  double log_density(double xi) const override;
  double log_density_inverse(double w) const override;
  AsymModel model_zero() const override { return AsymModel::power_log(p0_, a0_); }
  AsymModel model_inf() const override {
    return AsymModel::power_log(p_, a_, 0.0, std::log(scale_));
  }
  std::string describe() const override;

  double p0() const { return p0_; }
  double alpha0() const { return a0_; }
  double p() const { return p_; }
  double alpha() const { return a_; }
  double crossover() const { return cross_; }

 private:
  double left_log_value(double xi) const;
  double right_log_value(double xi) const;

  double p0_, a0_, p_, a_, cross_, scale_;
};

// exp(t^gamma - t^{1/gamma0} - 1) with gamma0 < 0 < gamma; behaves like
// exp(-t^{1/gamma0}) near zero and exp(t^gamma) near infinity.
class ExponentialImpl final : public Impl {
 public:
  ExponentialImpl(double gamma0, double gamma) : g0_(gamma0), g_(gamma) {
    if (!(gamma0 < 0.0) || !(gamma > 0.0))
      throw domain_error("exponential: need gamma0 < 0 < gamma");
  }
  Kind kind() const override { return Kind::Exponential; }
  double value(double t) const override;
  double density(double t) const override;
  bool has_log_density() const override { return true; }
  double log_density(double xi) const override;
  double log_density_inverse(double w) const override;
  AsymModel model_zero() const override { return AsymModel::rapid_decay(); }
  AsymModel model_inf() const override { return AsymModel::rapid_growth(); }
  // conjugate behaves like t log(1/t)^{gamma0} near zero and t log(t)^{1/gamma}
  // near infinity
  AsymModel conjugate_model_zero() const override { return AsymModel::power_log(1.0, g0_); }
  AsymModel conjugate_model_inf() const override {
    return AsymModel::power_log(1.0, 1.0 / g_);
  }
  std::string describe() const override;

  double gamma0() const { return g0_; }
  double gamma() const { return g_; }

 private:
  double log_value(double xi) const;  // log A(e^xi)

  double g0_, g_;
};

// sup_tau (tau t - A(tau)) by golden-section search on log tau.
class ConjugateImpl final : public Impl {
 public:
  explicit ConjugateImpl(std::shared_ptr<const Impl> of) : of_(std::move(of)) {}
  Kind kind() const override { return Kind::NumericConjugate; }
  double value(double t) const override;
  double density(double t) const override;
  double finiteness_threshold() const override;
  bool has_log_density() const override { return of_->has_log_density(); }
  double log_density(double xi) const override { return of_->log_density_inverse(xi); }
  double log_density_inverse(double w) const override { return of_->log_density(w); }
  AsymModel model_zero() const override { return of_->conjugate_model_zero(); }
  AsymModel model_inf() const override { return of_->conjugate_model_inf(); }
  AsymModel conjugate_model_zero() const override { return of_->model_zero(); }
  AsymModel conjugate_model_inf() const override { return of_->model_inf(); }
  std::string describe() const override { return "conjugate(" + of_->describe() + ")"; }

  std::shared_ptr<const Impl> source() const { return of_; }

 private:
  std::shared_ptr<const Impl> of_;
};

// Log-log table with monotone-cubic interpolation, optional zero prefix and
// calibrated asymptotic models past the node range.
class TabulatedImpl final : public Impl {
 public:
  TabulatedImpl(std::vector<double> grid, std::vector<double> values, AsymModel near_zero,
                AsymModel near_inf, std::string provenance);
  Kind kind() const override { return Kind::Tabulated; }
  double value(double t) const override;
  double density(double t) const override;
  double finiteness_threshold() const override;
  double inverse(double y) const override;
  AsymModel model_zero() const override { return mz_; }
  AsymModel model_inf() const override { return mi_; }
  std::string describe() const override;

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::string& provenance() const { return prov_; }
  double zero_prefix() const { return zero_prefix_; }

 private:
  std::vector<double> grid_, values_;
  double zero_prefix_ = 0.0;  // A == 0 on [0, zero_prefix_]
  MonotoneCubic curve_;       // log t -> log A
  AsymModel mz_, mi_;
  std::string prov_;
};

}  // namespace orso::young

#pragma once

#include <cmath>
#include <optional>

#include "orso/common.hpp"

namespace orso {

// Asymptotic behavior of a nonnegative monotone function at one end of
// (0, inf).  The PowerLog shape reads
//
//   f(t) ~= C * t^q * Lam(t)^beta * (log Lam(t))^gamma,
//
// where Lam(t) = log t toward infinity and log(1/t) toward zero.  Rapid
// growth/decay marks behavior beyond every power; Wall marks a finite
// finiteness threshold (f = inf past it); Zero marks f identically zero on a
// neighborhood of the end.
struct AsymModel {
  enum class Kind { PowerLog, RapidGrowth, RapidDecay, Wall, Zero, Unknown };

  Kind kind = Kind::Unknown;
  double logC = 0.0;
  double q = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double wall = kInf;  // threshold for Kind::Wall / Kind::Zero

  static AsymModel power_log(double q, double beta = 0.0, double gamma = 0.0,
                             double logC = 0.0) {
    AsymModel m;
    m.kind = Kind::PowerLog;
    m.q = q; m.beta = beta; m.gamma = gamma; m.logC = logC;
    return m;
  }
  static AsymModel rapid_growth() { return {Kind::RapidGrowth, 0, 0, 0, 0, kInf}; }
  static AsymModel rapid_decay() { return {Kind::RapidDecay, 0, 0, 0, 0, kInf}; }
  static AsymModel wall_at(double t) { return {Kind::Wall, 0, 0, 0, 0, t}; }
  static AsymModel zero_below(double t) { return {Kind::Zero, 0, 0, 0, 0, t}; }
  static AsymModel unknown() { return {}; }

  bool is_power_log() const { return kind == Kind::PowerLog; }

  // log f(t) under the PowerLog shape; `toward_inf` selects the Lam flavor.
  double log_eval(double t, bool toward_inf) const {
    const double lt = std::log(t);
    const double lam = toward_inf ? lt : -lt;
    double v = logC + q * lt;
    if (beta != 0.0) v += beta * std::log(lam);
    if (gamma != 0.0) v += gamma * std::log(std::log(lam));
    return v;
  }

  // Solve log f(t) = log y for log t by Newton iteration (PowerLog shape,
  // q > 0 required).
  double invert_log(double logy, bool toward_inf) const {
    double lt = (logy - logC) / q;
    const double sign = toward_inf ? 1.0 : -1.0;
    if (sign * lt < 2.0) lt = sign * 2.0;
    for (int i = 0; i < 80; ++i) {
      const double lam = sign * lt;
      double f = logC + q * lt + beta * std::log(lam) - logy;
      double df = q + sign * beta / lam;
      if (gamma != 0.0) {
        const double llam = std::log(lam);
        if (llam <= 0.0) break;
        f += gamma * std::log(llam);
        df += sign * gamma / (lam * llam);
      }
      const double step = f / df;
      lt -= step;
      if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(lt))) break;
      if (sign * lt < 1.5) lt = sign * 1.5;
    }
    return lt;
  }
};

// Young-conjugate transform of a one-end model.  Valid for the end it was
// derived at (conjugation preserves ends).
inline AsymModel conjugate_model(const AsymModel& m, bool toward_inf) {
  using K = AsymModel::Kind;
  switch (m.kind) {
    case K::RapidGrowth: {
      // conjugate of faster-than-power growth has bounded-slope flavor near
      // the same end; powers of log survive but are not tracked exactly
      return AsymModel::unknown();
    }
    case K::RapidDecay:
      return AsymModel::rapid_growth();  // not reached for Young functions
    case K::Wall:
      return AsymModel::unknown();
    case K::Zero:
      // A == 0 below t0: conjugate grows at most linearly with slope t0
      return AsymModel::power_log(1.0, 0.0, 0.0, std::log(m.wall));
    case K::Unknown:
      return AsymModel::unknown();
    case K::PowerLog:
      break;
  }
  const double q = m.q;
  if (q > 1.0 + 1e-12) {
    const double qc = q / (q - 1.0);
    const double logC = std::log(q - 1.0) - qc * std::log(q) - m.logC / (q - 1.0) +
                        (m.beta / (q - 1.0)) * std::log(q - 1.0);
    return AsymModel::power_log(qc, -m.beta / (q - 1.0), -m.gamma / (q - 1.0), logC);
  }
  // q == 1: slope tends to a constant (beta == 0) or the conjugate leaves the
  // power-log class (beta != 0).
  if (std::abs(m.beta) < 1e-12 && std::abs(m.gamma) < 1e-12) {
    if (toward_inf) return AsymModel::wall_at(std::exp(m.logC));
    return AsymModel::zero_below(std::exp(m.logC));
  }
  if (m.beta > 0.0)
    return toward_inf ? AsymModel::rapid_growth() : AsymModel::unknown();
  // beta < 0 admissible only toward zero: conjugate decays rapidly there
  return toward_inf ? AsymModel::unknown() : AsymModel::rapid_decay();
}

}  // namespace orso

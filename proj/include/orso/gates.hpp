#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orso/young.hpp"

namespace orso::gates {

using young::YoungFunction;

struct SmoothnessParams {
  int n = 1;
  double s = 0.5;
  int int_part = 0;     // [s]
  double frac_part = 0; // {s}
  double omega_n = 2.0; // Lebesgue measure of the unit ball in R^n

  SmoothnessParams() = default;
  SmoothnessParams(int n_, double s_);
};

// Gate integrals of the embedding theory.
//   TailSub:    integral^inf  (t/A(t))^{s/(n-s)} dt            (s < n)
//   OriginGrad: integral_0    (t/A(t))^{(s-1)/(n-(s-1))} dt    (1 < s < n+1)
//   OriginSub:  integral_0    (t/A(t))^{s/(n-s)} dt            (s < n)
//   TailGrad:   integral^inf  (t/A(t))^{(s-1)/(n-(s-1))} dt    (1 < s < n+1)
enum class Gate { TailSub, OriginGrad, OriginSub, TailGrad };

enum class Verdict { Converges, Diverges, Inconclusive };

struct ConvergenceReport {
  Gate gate = Gate::TailSub;
  Verdict verdict = Verdict::Inconclusive;
  enum class Method { ClosedForm, NumericTailFit } method = Method::ClosedForm;
  std::vector<double> local_exponents;  // per-decade fitted exponents (numeric path)
  bool dual_checked = false;
  Verdict dual_verdict = Verdict::Inconclusive;
};

ConvergenceReport classify_gate(const YoungFunction& a, const SmoothnessParams& p, Gate g);

struct GateError : std::runtime_error {
  GateError(std::string msg, ConvergenceReport rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
  ConvergenceReport report;
};

// E(t) = t^{n/(n-s)} integral_t^inf conj(A)(tau) tau^{-1-n/(n-s)} dtau
YoungFunction build_E(const YoungFunction& a, const SmoothnessParams& p);

// F(t) = t^{n/(n-(s-1))} integral_0^t conj(A)(tau) tau^{-1-n/(n-(s-1))} dtau
YoungFunction build_F(const YoungFunction& a, const SmoothnessParams& p);

// I(t) = t^{n/(n-s)} integral_0^t conj(A)(tau) tau^{n/(s-n)-1} dtau, s in (n, n+1)
YoungFunction build_I(const YoungFunction& a, const SmoothnessParams& p);

// hat-A from the nested integral of the optimal Orlicz-Lorentz target.
YoungFunction build_hatA(const YoungFunction& a, const SmoothnessParams& p);

const char* gate_name(Gate g);
const char* verdict_name(Verdict v);

}  // namespace orso::gates

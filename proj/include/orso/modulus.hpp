#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orso/gates.hpp"

namespace orso::modulus {

using gates::ConvergenceReport;
using gates::Gate;
using gates::SmoothnessParams;
using gates::Verdict;
using young::YoungFunction;

enum class Regime { Subcritical01, Mid1n_CaseI, Mid1n_CaseII, Super_CaseI, Super_CaseII };

// Evaluatable modulus of continuity r -> omega(r) with its regime tag and,
// when assembled from both components, the theta/rho parts.
struct ModulusOfContinuity {
  std::function<double(double)> eval;
  Regime regime = Regime::Subcritical01;
  std::function<double(double)> theta_part;  // may be empty
  std::function<double(double)> rho_part;    // may be empty
  double junction_ratio = 0.0;  // piecewise regimes: (right limit)/(left limit) at r = 1

  double operator()(double r) const {
    if (!(r > 0.0)) throw domain_error("modulus evaluated at non-positive r");
    return eval(r);
  }
};

struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoEmbeddingError : std::runtime_error {
  NoEmbeddingError(std::string msg, ConvergenceReport rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
  ConvergenceReport report;
};

// theta_s(r) = 1 / (r^{n-s} E^{-1}(r^{-n}))
ModulusOfContinuity theta(const YoungFunction& a, const SmoothnessParams& p);

// rho_s(r) = 1 / (r^{n-s} F^{-1}(r^{-n}))
ModulusOfContinuity rho(const YoungFunction& a, const SmoothnessParams& p);

// Optimal modulus sigma_s assembled by regime.
ModulusOfContinuity sigma(const YoungFunction& a, const SmoothnessParams& p);

// Structured embedding classification (exception-free view of sigma's gates).
struct EmbeddingClassification {
  enum class Status { Embedding, NoEmbedding, Inadmissible, Inconclusive };
  Status status = Status::Inconclusive;
  Regime regime = Regime::Subcritical01;  // valid when status == Embedding
  std::vector<std::pair<Gate, ConvergenceReport>> gates;
  std::string reason;
};

EmbeddingClassification classify_embedding(const YoungFunction& a, const SmoothnessParams& p);

// --- asymptotic equivalence testing ---

enum class End { NearZero, NearInfinity };

struct EquivalenceConfig {
  int decades = 8;
  int per_decade = 16;
  double anchor = 0.0;     // grid end closest to 1 (0 => 0.1 / 10 by End)
  double ratio_cap = 10.0; // verdict requires ratio in [1/cap, cap]
  double slope_tol = 0.02;
  int slope_decades = 3;
};

struct EquivalenceReport {
  double r_lo = 0, r_hi = 0;
  double ratio_min = 0, ratio_max = 0;
  double slope = 0;  // log-log slope of f/g over the last slope_decades
  bool verdict = false;
};

struct EvaluationError : std::runtime_error {
  EvaluationError(std::string msg, double witness_r)
      : std::runtime_error(std::move(msg)), witness(witness_r) {}
  double witness;
};

EquivalenceReport verify_equivalence(const std::function<double(double)>& f,
                                     const std::function<double(double)>& g, End end,
                                     const EquivalenceConfig& cfg = {});

// --- sigma table ---

struct SigmaTableRow {
  double r;
  double theta;  // NaN when not applicable
  double rho;    // NaN when not applicable
  double sigma;
};

std::vector<SigmaTableRow> sigma_table(const YoungFunction& a, const SmoothnessParams& p,
                                       const std::vector<double>& r_grid);

const char* regime_name(Regime r);

}  // namespace orso::modulus

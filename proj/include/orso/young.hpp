#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orso/asym.hpp"
#include "orso/common.hpp"
#include "orso/interp.hpp"

namespace orso::young {

enum class Kind { Power, PowerLog, Exponential, LInftyGauge, NumericConjugate, Tabulated };

// Immutable representation backing a YoungFunction.  All implementations are
// pure; a shared instance may be used concurrently.
class Impl {
 public:
  virtual ~Impl() = default;
  virtual Kind kind() const = 0;

  // A(t); +inf past the finiteness threshold.
  virtual double value(double t) const = 0;
  // Left-continuous density a with A(t) = integral_0^t a.
  virtual double density(double t) const = 0;
  virtual double finiteness_threshold() const { return kInf; }

  // Generalized right-continuous inverse A^{-1}(y) = sup{t : A(t) <= y}.
  virtual double inverse(double y) const;

  // Exact log-domain density calculus: log a(e^xi) and its inverse
  // xi(w) with log a(e^xi) = w.  Enables overflow-free improper integrals.
  virtual bool has_log_density() const { return false; }
  virtual double log_density(double) const { return -kInf; }
  virtual double log_density_inverse(double) const { return -kInf; }

  virtual AsymModel model_zero() const { return AsymModel::unknown(); }
  virtual AsymModel model_inf() const { return AsymModel::unknown(); }

  // End models of the Young conjugate.  The default applies the generic
  // conjugation transform; families whose conjugate has a sharper known form
  // (e.g. exponential growth conjugating to t log^{1/gamma} t) override.
  virtual AsymModel conjugate_model_zero() const {
    return conjugate_model(model_zero(), false);
  }
  virtual AsymModel conjugate_model_inf() const { return conjugate_model(model_inf(), true); }

  // Closed-form conjugate when one exists.
  virtual std::shared_ptr<const Impl> closed_conjugate() const { return nullptr; }

  virtual std::string describe() const = 0;
};

class YoungFunction {
 public:
  YoungFunction() = default;
  explicit YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  bool valid() const { return impl_ != nullptr; }
  Kind kind() const { return impl_->kind(); }
  const Impl& impl() const { return *impl_; }
  std::shared_ptr<const Impl> impl_ptr() const { return impl_; }

  double operator()(double t) const;
  double value(double t) const { return (*this)(t); }
  double density(double t) const;
  double inverse(double y) const;
  double finiteness_threshold() const { return impl_->finiteness_threshold(); }

  AsymModel model_zero() const { return impl_->model_zero(); }
  AsymModel model_inf() const { return impl_->model_inf(); }
  bool has_log_density() const { return impl_->has_log_density(); }
  double log_density(double xi) const { return impl_->log_density(xi); }
  double log_density_inverse(double w) const { return impl_->log_density_inverse(w); }

  // Young conjugate: closed form for power/gauge kinds, otherwise a
  // NumericConjugate evaluated by golden-section maximization.
  YoungFunction conjugate() const;

  std::string describe() const { return impl_->describe(); }

  // --- factories ---
  static YoungFunction power(double p);
  static YoungFunction scaled_power(double c, double p);
  static YoungFunction power_log(double p0, double alpha0, double p, double alpha,
                                 double crossover = 1.0);
  static YoungFunction exponential(double gamma0, double gamma);
  static YoungFunction linfty_gauge();
  static YoungFunction gauge_wall(double threshold);
  static YoungFunction conjugate_of(const YoungFunction& a);
  static YoungFunction tabulated(std::vector<double> grid, std::vector<double> values,
                                 AsymModel near_zero = AsymModel::unknown(),
                                 AsymModel near_inf = AsymModel::unknown(),
                                 std::string provenance = {});

 private:
  std::shared_ptr<const Impl> impl_;
};

// Tabulated stand-in for A's conjugate suitable for heavy quadrature loops:
// exact closed form when available, otherwise a value-adapted table of the
// numeric conjugate with calibrated asymptotic models.
YoungFunction conjugate_fast(const YoungFunction& a);

// Tabulates any Young function on a value-adapted log grid (helper for
// conjugate_fast and the auxiliary-function builders).
YoungFunction tabulate(const YoungFunction& a, int per_decade = 48,
                       double value_cap = 1e30, std::string provenance = {});

// --- Matuszewska-Orlicz indices ---

struct IndexEstimate {
  double value = 0.0;
  bool is_inf = false;
  bool inconclusive = false;
};

struct MatuszewskaIndices {
  IndexEstimate i0, iinf;        // from the inverse-based formula
  IndexEstimate i0_alt, iinf_alt;  // from the direct-ratio formula
  bool alt_valid = false;        // direct formula applies (finite-valued A)
};

MatuszewskaIndices matuszewska_indices(const YoungFunction& a);

// --- axiom checking ---

struct AxiomCheck {
  std::string name;
  bool pass = true;
  double witness_t = 0.0;
  double witness_aux = 0.0;
  std::string detail;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;
  const AxiomCheck* find(const std::string& name) const;
};

struct AxiomOptions {
  double grid_lo = 1e-6;
  double grid_hi = 1e6;
  int per_decade = 8;
  double rel_slack = 1e-9;
  unsigned seed = 12345;
  int random_pairs = 400;
};

AxiomReport check_axioms(const YoungFunction& a, const AxiomOptions& opt = {});

// --- domination (B(t) <= A(c t)) ---

enum class Range { Global, NearZero, NearInfinity };

struct DominationReport {
  bool dominated = false;
  double c = 0.0;
  double t0 = 0.0;
  std::vector<double> witnesses;  // sample t where B(t) > A(c_max t) on failure
};

DominationReport dominates(const YoungFunction& a, const YoungFunction& b, Range range);

inline bool equivalent(const YoungFunction& a, const YoungFunction& b, Range range) {
  return dominates(a, b, range).dominated && dominates(b, a, range).dominated;
}

const char* kind_name(Kind k);

}  // namespace orso::young

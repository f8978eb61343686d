#include "orso/modulus.hpp"

#include <cmath>

namespace orso::modulus {

namespace {

std::function<double(double)> inverse_modulus(const YoungFunction& built,
                                              const SmoothnessParams& p) {
  const double n = p.n, s = p.s;
  return [built, n, s](double r) {
    const double y = std::pow(r, -n);
    const double inv = built.inverse(y);
    return 1.0 / (std::pow(r, n - s) * inv);
  };
}

}  // namespace

ModulusOfContinuity theta(const YoungFunction& a, const SmoothnessParams& p) {
  if (!(p.s < p.n)) throw domain_error("theta: requires s in (0, n)");
  const YoungFunction E = gates::build_E(a, p);  // throws GateError when (convinf) fails
  ModulusOfContinuity m;
  m.eval = inverse_modulus(E, p);
  m.theta_part = m.eval;
  m.regime = p.s < 1.0 ? Regime::Subcritical01 : Regime::Mid1n_CaseI;
  return m;
}

ModulusOfContinuity rho(const YoungFunction& a, const SmoothnessParams& p) {
  if (!(p.s > 1.0) || !(p.s < p.n + 1.0)) throw domain_error("rho: requires s in (1, n+1)");
  const YoungFunction F = gates::build_F(a, p);  // throws GateError when (conv0') fails
  ModulusOfContinuity m;
  m.eval = inverse_modulus(F, p);
  m.rho_part = m.eval;
  m.regime = p.s > p.n ? Regime::Super_CaseI : Regime::Mid1n_CaseI;
  return m;
}

EmbeddingClassification classify_embedding(const YoungFunction& a, const SmoothnessParams& p) {
  EmbeddingClassification out;
  const double n = p.n, s = p.s;
  if (s > n + 1.0) {
    out.status = EmbeddingClassification::Status::Inadmissible;
    out.reason = "no embedding into uniformly continuous functions is possible for s > n+1";
    return out;
  }
  auto run = [&](Gate g) -> const ConvergenceReport& {
    out.gates.emplace_back(g, gates::classify_gate(a, p, g));
    return out.gates.back().second;
  };
  auto fail = [&](Gate g, Verdict v) {
    if (v == Verdict::Inconclusive) {
      out.status = EmbeddingClassification::Status::Inconclusive;
      out.reason = std::string("gate ") + gates::gate_name(g) + " did not stabilize";
    } else {
      out.status = EmbeddingClassification::Status::NoEmbedding;
      out.reason = std::string("gate ") + gates::gate_name(g) + " diverges";
    }
  };

  if (s < 1.0) {
    const auto& r = run(Gate::TailSub);
    if (r.verdict != Verdict::Converges) { fail(Gate::TailSub, r.verdict); return out; }
    out.status = EmbeddingClassification::Status::Embedding;
    out.regime = Regime::Subcritical01;
    return out;
  }
  if (s < n) {
    const auto& r1 = run(Gate::TailSub);
    if (r1.verdict != Verdict::Converges) { fail(Gate::TailSub, r1.verdict); return out; }
    const auto& r2 = run(Gate::OriginGrad);
    if (r2.verdict != Verdict::Converges) { fail(Gate::OriginGrad, r2.verdict); return out; }
    const auto& r3 = run(Gate::TailGrad);
    if (r3.verdict == Verdict::Inconclusive) { fail(Gate::TailGrad, r3.verdict); return out; }
    out.status = EmbeddingClassification::Status::Embedding;
    out.regime = r3.verdict == Verdict::Diverges ? Regime::Mid1n_CaseI : Regime::Mid1n_CaseII;
    return out;
  }
  // s in (n, n+1)
  const auto& r1 = run(Gate::OriginGrad);
  if (r1.verdict != Verdict::Converges) { fail(Gate::OriginGrad, r1.verdict); return out; }
  const auto& r2 = run(Gate::TailGrad);
  if (r2.verdict == Verdict::Inconclusive) { fail(Gate::TailGrad, r2.verdict); return out; }
  out.status = EmbeddingClassification::Status::Embedding;
  out.regime = r2.verdict == Verdict::Diverges ? Regime::Super_CaseI : Regime::Super_CaseII;
  return out;
}

ModulusOfContinuity sigma(const YoungFunction& a, const SmoothnessParams& p) {
  EmbeddingClassification cls = classify_embedding(a, p);
  using Status = EmbeddingClassification::Status;
  if (cls.status == Status::Inadmissible) throw AdmissibilityError(cls.reason);
  if (cls.status != Status::Embedding) {
    ConvergenceReport rep;
    for (auto& [g, r] : cls.gates)
      if (r.verdict != Verdict::Converges) { rep = r; break; }
    throw NoEmbeddingError(cls.reason.empty() ? "no embedding" : cls.reason, rep);
  }

  ModulusOfContinuity m;
  m.regime = cls.regime;
  switch (cls.regime) {
    case Regime::Subcritical01: {
      m = theta(a, p);
      m.regime = Regime::Subcritical01;
      return m;
    }
    case Regime::Mid1n_CaseI:
    case Regime::Mid1n_CaseII: {
      ModulusOfContinuity th = theta(a, p);
      ModulusOfContinuity rh = rho(a, p);
      m.theta_part = th.eval;
      m.rho_part = rh.eval;
      auto sum = [t = th.eval, r = rh.eval](double x) { return t(x) + r(x); };
      if (cls.regime == Regime::Mid1n_CaseI) {
        m.eval = sum;
      } else {
        m.eval = [sum](double x) { return x < 1.0 ? x : sum(x); };
        m.junction_ratio = sum(1.0);
      }
      return m;
    }
    case Regime::Super_CaseI:
    case Regime::Super_CaseII: {
      ModulusOfContinuity rh = rho(a, p);
      m.rho_part = rh.eval;
      if (cls.regime == Regime::Super_CaseI) {
        m.eval = rh.eval;
      } else {
        m.eval = [r = rh.eval](double x) { return x < 1.0 ? x : r(x); };
        m.junction_ratio = rh.eval(1.0);
      }
      return m;
    }
  }
  throw domain_error("sigma: unreachable");
}

EquivalenceReport verify_equivalence(const std::function<double(double)>& f,
                                     const std::function<double(double)>& g, End end,
                                     const EquivalenceConfig& cfg) {
  const bool zero = end == End::NearZero;
  const double anchor = cfg.anchor > 0.0 ? cfg.anchor : (zero ? 0.1 : 10.0);
  const double far = zero ? anchor * std::pow(10.0, -cfg.decades)
                          : anchor * std::pow(10.0, cfg.decades);
  EquivalenceReport rep;
  rep.r_lo = zero ? far : anchor;
  rep.r_hi = zero ? anchor : far;

  const auto grid = log_grid(rep.r_lo, rep.r_hi, cfg.per_decade);
  std::vector<double> lr, lratio;
  rep.ratio_min = kInf;
  rep.ratio_max = 0.0;
  for (double r : grid) {
    const double fv = f(r), gv = g(r);
    if (!(fv > 0.0) || !std::isfinite(fv))
      throw EvaluationError("lhs non-positive or non-finite at r", r);
    if (!(gv > 0.0) || !std::isfinite(gv))
      throw EvaluationError("rhs non-positive or non-finite at r", r);
    const double ratio = fv / gv;
    rep.ratio_min = std::min(rep.ratio_min, ratio);
    rep.ratio_max = std::max(rep.ratio_max, ratio);
    lr.push_back(std::log(r));
    lratio.push_back(std::log(ratio));
  }
  // slope over the last slope_decades toward the requested end
  const double edge = zero ? rep.r_lo * std::pow(10.0, cfg.slope_decades)
                           : rep.r_hi * std::pow(10.0, -cfg.slope_decades);
  std::vector<double> sx, sy;
  for (size_t i = 0; i < grid.size(); ++i) {
    if ((zero && grid[i] <= edge * (1 + 1e-12)) || (!zero && grid[i] >= edge * (1 - 1e-12))) {
      sx.push_back(lr[i]);
      sy.push_back(lratio[i]);
    }
  }
  rep.slope = fit_slope(sx, sy);
  rep.verdict = rep.ratio_max <= cfg.ratio_cap && rep.ratio_min >= 1.0 / cfg.ratio_cap &&
                std::abs(rep.slope) < cfg.slope_tol;
  return rep;
}

std::vector<SigmaTableRow> sigma_table(const YoungFunction& a, const SmoothnessParams& p,
                                       const std::vector<double>& r_grid) {
  ModulusOfContinuity m = sigma(a, p);
  std::vector<SigmaTableRow> rows;
  rows.reserve(r_grid.size());
  const double nan = std::nan("");
  for (double r : r_grid) {
    SigmaTableRow row;
    row.r = r;
    row.theta = m.theta_part ? m.theta_part(r) : nan;
    row.rho = m.rho_part ? m.rho_part(r) : nan;
    row.sigma = m.eval(r);
    rows.push_back(row);
  }
  return rows;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Subcritical01: return "subcritical_0_1";
    case Regime::Mid1n_CaseI: return "mid_1_n_case_i";
    case Regime::Mid1n_CaseII: return "mid_1_n_case_ii";
    case Regime::Super_CaseI: return "super_n_case_i";
    case Regime::Super_CaseII: return "super_n_case_ii";
  }
  return "?";
}

}  // namespace orso::modulus

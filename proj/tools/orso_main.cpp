#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orso/examples_table.hpp"
#include "orso/io.hpp"

using namespace orso;
using io::json;

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw domain_error("cannot write " + out_path);
  out << text;
}

struct CommonOpts {
  std::string young_spec;
  std::string young_json_path;
  int n = 1;
  double s = 0.5;
  std::string format = "json";
  std::string out;

  young::YoungFunction young() const {
    if (!young_json_path.empty()) {
      std::ifstream in(young_json_path);
      if (!in) throw domain_error("cannot open " + young_json_path);
      json j;
      in >> j;
      return io::young_from_json(j);
    }
    if (young_spec.empty()) throw domain_error("need --young or --young-json");
    return io::young_from_spec(young_spec);
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_params = true) {
  cmd->add_option("--young", o.young_spec,
                  "Young function: power:p=.. | powerlog:p0=..,alpha0=..,p=..,alpha=.. | "
                  "exp:gamma0=..,gamma=.. | linfty | table:path=FILE");
  cmd->add_option("--young-json", o.young_json_path, "JSON descriptor file");
  if (with_params) {
    cmd->add_option("--n", o.n, "dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--s", o.s, "fractional order")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--format", o.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

int cmd_classify(const CommonOpts& o) {
  const auto a = o.young();
  const gates::SmoothnessParams p(o.n, o.s);
  const auto cls = modulus::classify_embedding(a, p);
  using Status = modulus::EmbeddingClassification::Status;
  int code = 0;
  switch (cls.status) {
    case Status::Embedding: code = 0; break;
    case Status::NoEmbedding: code = 2; break;
    case Status::Inadmissible: code = 3; break;
    case Status::Inconclusive: code = 4; break;
  }
  json j = io::classification_to_json(cls);
  j["young"] = a.describe();
  j["n"] = o.n;
  j["s"] = o.s;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "status,regime,reason\n"
       << j["status"].get<std::string>() << ","
       << (j.contains("regime") ? j["regime"].get<std::string>() : "") << ","
       << (j.contains("reason") ? j["reason"].get<std::string>() : "") << "\n";
    emit(os.str(), o.out);
  } else {
    emit(j.dump(2) + "\n", o.out);
  }
  return code;
}

int cmd_sigma_table(const CommonOpts& o, double r_lo, double r_hi, int per_decade) {
  const auto a = o.young();
  const gates::SmoothnessParams p(o.n, o.s);
  const auto cls = modulus::classify_embedding(a, p);
  using Status = modulus::EmbeddingClassification::Status;
  if (cls.status != Status::Embedding) {
    std::cerr << "no embedding: " << cls.reason << "\n";
    return cls.status == Status::NoEmbedding ? 2 : cls.status == Status::Inadmissible ? 3 : 4;
  }
  const auto grid = log_grid(r_lo, r_hi, per_decade);
  const auto rows = modulus::sigma_table(a, p, grid);
  const char* regime = modulus::regime_name(cls.regime);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "r,theta,rho,sigma,regime\n";
    for (const auto& row : rows) {
      os << fmt(row.r) << "," << (std::isnan(row.theta) ? "" : fmt(row.theta)) << ","
         << (std::isnan(row.rho) ? "" : fmt(row.rho)) << "," << fmt(row.sigma) << "," << regime
         << "\n";
    }
    emit(os.str(), o.out);
  } else {
    json arr = json::array();
    for (const auto& row : rows) {
      json jr{{"r", row.r}, {"sigma", row.sigma}, {"regime", regime}};
      if (!std::isnan(row.theta)) jr["theta"] = row.theta;
      if (!std::isnan(row.rho)) jr["rho"] = row.rho;
      arr.push_back(jr);
    }
    emit(arr.dump(2) + "\n", o.out);
  }
  return 0;
}

int cmd_conjugate(const CommonOpts& o, double t_lo, double t_hi, int per_decade) {
  const auto a = o.young();
  const auto conj = a.conjugate();
  const auto grid = log_grid(t_lo, t_hi, per_decade);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "t,conjugate\n";
    for (double t : grid) os << fmt(t) << "," << fmt(conj(t)) << "\n";
    emit(os.str(), o.out);
  } else {
    json arr = json::array();
    for (double t : grid) arr.push_back(json{{"t", t}, {"value", conj(t)}});
    emit(json{{"young", a.describe()}, {"conjugate", arr}}.dump(2) + "\n", o.out);
  }
  return 0;
}

int cmd_verify_examples(const std::string& manifest, double tol_ratio, int decades,
                        const std::string& format, const std::string& out) {
  auto rows = examples::load_manifest(manifest);
  modulus::EquivalenceConfig cfg;
  if (tol_ratio > 0.0) cfg.ratio_cap = tol_ratio;
  if (decades > 0) cfg.decades = decades;
  const auto results = examples::run_all(rows, cfg);
  int failures = 0;
  std::ostringstream os;
  json arr = json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    if (format == "json") {
      json jr{{"id", r.row.id},   {"young", r.row.young_spec}, {"n", r.row.n},
              {"s", r.row.s},     {"pass", r.pass},            {"detail", r.detail}};
      if (r.row.target) jr["equivalence"] = io::report_to_json(r.equivalence);
      arr.push_back(jr);
    } else {
      os << (r.pass ? "PASS" : "FAIL") << "," << r.row.id << "," << r.detail << "\n";
    }
  }
  if (format == "json") {
    emit(json{{"rows", arr}, {"failures", failures}}.dump(2) + "\n", out);
  } else {
    std::ostringstream head;
    head << "result,id,detail\n" << os.str();
    emit(head.str(), out);
  }
  std::cerr << results.size() - failures << "/" << results.size() << " rows pass\n";
  return failures == 0 ? 0 : 2;
}

int cmd_seminorm(const CommonOpts& o, const std::string& kind, const std::string& profile_spec,
                 const std::string& method, unsigned long long seed, long long mc_n) {
  const auto a = o.young();
  const gates::SmoothnessParams p(o.n, o.s);
  norms::SampledFunction profile;
  if (profile_spec.rfind("indicator:", 0) == 0) {
    double lo = 0.0, hi = 1.0;
    std::sscanf(profile_spec.c_str(), "indicator:a=%lf,b=%lf", &lo, &hi);
    profile = norms::SampledFunction::indicator(lo, hi);
  } else {
    profile = norms::sampled_from_csv(profile_spec);
  }
  trial::TrialKind tk = trial::TrialKind::Radial;
  if (kind == "radial") tk = p.int_part == 0 ? trial::TrialKind::Radial : trial::TrialKind::RadialHigher;
  else if (kind == "odd") tk = trial::TrialKind::Odd;
  else throw domain_error("seminorm: kind must be radial|odd");
  const auto u = trial::make_trial(tk, profile, p);
  trial::MonteCarloOptions opt;
  opt.seed = seed;
  opt.n = mc_n;
  const auto m = method == "mc" ? trial::Method::MonteCarlo : trial::Method::RadialQuadrature;
  const auto sn = trial::seminorm(a, p, u, m, opt);
  json j{{"seminorm", sn.infinite ? json("inf") : json(sn.value)},
         {"iterations", sn.iterations},
         {"method", method},
         {"young", a.describe()}};
  emit(j.dump(2) + "\n", o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young-function calculus and optimal moduli of continuity for fractional "
               "Orlicz-Sobolev embeddings"};
  app.require_subcommand(1);

  CommonOpts oc, os_, oconj, osem;
  double r_lo = 1e-6, r_hi = 1e2;
  int per_decade = 16;
  double t_lo = 1e-6, t_hi = 1e6;
  std::string manifest, vformat = "csv", vout;
  double tol_ratio = 0.0;
  int grid_decades = 0;
  std::string sem_kind = "radial", sem_profile = "indicator:a=0,b=1", sem_method = "rq";
  unsigned long long seed = 1;
  long long mc_n = 1000000;

  auto* classify = app.add_subcommand("classify", "gate verdicts, regime and admissibility");
  add_common(classify, oc);

  auto* table = app.add_subcommand("sigma-table", "tabulate (r, theta, rho, sigma)");
  add_common(table, os_);
  table->add_option("--r-lo", r_lo, "left grid endpoint")->check(CLI::PositiveNumber);
  table->add_option("--r-hi", r_hi, "right grid endpoint")->check(CLI::PositiveNumber);
  table->add_option("--per-decade", per_decade, "grid points per decade");

  auto* conj = app.add_subcommand("conjugate", "tabulate the Young conjugate");
  add_common(conj, oconj, false);
  conj->add_option("--t-lo", t_lo)->check(CLI::PositiveNumber);
  conj->add_option("--t-hi", t_hi)->check(CLI::PositiveNumber);
  conj->add_option("--per-decade", per_decade);

  auto* verify = app.add_subcommand("verify-examples",
                                    "run the closed-form asymptotic rows of the worked examples");
  verify->add_option("--manifest", manifest, "manifest JSON (default: built-in)");
  verify->add_option("--tol-ratio", tol_ratio, "equivalence ratio cap override");
  verify->add_option("--grid-decades", grid_decades, "equivalence grid decades override");
  verify->add_option("--format", vformat, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", vout, "output file");

  auto* sem = app.add_subcommand("seminorm", "Gagliardo seminorm of a trial function");
  add_common(sem, osem);
  sem->add_option("--kind", sem_kind, "radial|odd");
  sem->add_option("--profile", sem_profile, "indicator:a=..,b=.. or CSV path");
  sem->add_option("--method", sem_method, "rq|mc")->check(CLI::IsMember({"rq", "mc"}));
  sem->add_option("--seed", seed, "Monte Carlo seed");
  sem->add_option("--mc-n", mc_n, "Monte Carlo sample count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(oc);
    if (table->parsed()) return cmd_sigma_table(os_, r_lo, r_hi, per_decade);
    if (conj->parsed()) return cmd_conjugate(oconj, t_lo, t_hi, per_decade);
    if (verify->parsed())
      return cmd_verify_examples(manifest, tol_ratio, grid_decades, vformat, vout);
    if (sem->parsed()) return cmd_seminorm(osem, sem_kind, sem_profile, sem_method, seed, mc_n);
  } catch (const modulus::AdmissibilityError& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return 3;
  } catch (const modulus::NoEmbeddingError& e) {
    std::cerr << "no embedding: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

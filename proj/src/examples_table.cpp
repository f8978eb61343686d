#include "orso/examples_table.hpp"

#include <cmath>
#include <fstream>

#include "orso/io.hpp"
#include "orso_manifest_data.hpp"

namespace orso::examples {

using modulus::End;

double Target::operator()(double r, End end) const {
  const double L = end == End::NearZero ? std::log1p(1.0 / r) : std::log1p(r);
  double v = std::pow(r, pow_r);
  if (pow_log != 0.0) v *= std::pow(L, pow_log);
  if (pow_loglog != 0.0) v *= std::pow(std::log(L), pow_loglog);
  return v;
}

std::string builtin_manifest_json() { return std::string(kManifestJson); }

std::vector<Row> load_manifest(const std::string& path) {
  io::json j;
  if (path.empty()) {
    j = io::json::parse(builtin_manifest_json());
  } else {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open manifest: " + path);
    in >> j;
  }
  std::vector<Row> rows;
  for (const auto& rj : j.at("rows")) {
    Row r;
    r.id = rj.at("id").get<std::string>();
    r.young_spec = rj.at("young").get<std::string>();
    r.n = rj.at("n").get<int>();
    r.s = rj.at("s").get<double>();
    r.end = rj.at("end").get<std::string>() == "zero" ? End::NearZero : End::NearInfinity;
    const std::string ex = rj.at("expect").get<std::string>();
    r.expect = ex == "embedding"     ? Row::Expect::Embedding
               : ex == "inadmissible" ? Row::Expect::Inadmissible
                                      : Row::Expect::NoEmbedding;
    r.decades = rj.value("decades", 0);
    if (rj.contains("target")) {
      Target t;
      t.pow_r = rj["target"].value("pow_r", 0.0);
      t.pow_log = rj["target"].value("pow_log", 0.0);
      t.pow_loglog = rj["target"].value("pow_loglog", 0.0);
      r.target = t;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

RowResult run_row(const Row& row, const modulus::EquivalenceConfig& cfg) {
  RowResult res;
  res.row = row;
  const young::YoungFunction a = io::young_from_spec(row.young_spec);
  const gates::SmoothnessParams p(row.n, row.s);
  const auto cls = modulus::classify_embedding(a, p);
  using Status = modulus::EmbeddingClassification::Status;

  switch (row.expect) {
    case Row::Expect::Inadmissible:
      res.pass = cls.status == Status::Inadmissible;
      res.detail = res.pass ? "inadmissible as expected" : "expected inadmissible, got embedding state";
      return res;
    case Row::Expect::NoEmbedding:
      res.pass = cls.status == Status::NoEmbedding;
      res.detail = res.pass ? "no embedding as expected"
                            : "expected no embedding, got " + std::string(cls.reason);
      return res;
    case Row::Expect::Embedding:
      break;
  }
  if (cls.status != Status::Embedding) {
    res.pass = false;
    res.detail = "expected embedding, classification said: " + cls.reason;
    return res;
  }
  if (!row.target) {
    res.pass = true;
    res.detail = "embedding exists (no target row)";
    return res;
  }
  const modulus::ModulusOfContinuity sig = modulus::sigma(a, p);
  const Target target = *row.target;
  const auto end = row.end;
  modulus::EquivalenceConfig row_cfg = cfg;
  if (row.decades > 0) row_cfg.decades = std::max(row.decades, cfg.decades);
  res.equivalence = modulus::verify_equivalence(
      [&sig](double r) { return sig.eval(r); },
      [&target, end](double r) { return target(r, end); }, end, row_cfg);
  res.pass = res.equivalence.verdict;
  char buf[160];
  std::snprintf(buf, sizeof buf, "ratio in [%.3g, %.3g], slope %.4f",
                res.equivalence.ratio_min, res.equivalence.ratio_max, res.equivalence.slope);
  res.detail = buf;
  return res;
}

std::vector<RowResult> run_all(const std::vector<Row>& rows,
                               const modulus::EquivalenceConfig& cfg) {
  std::vector<RowResult> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(run_row(r, cfg));
  return out;
}

}  // namespace orso::examples

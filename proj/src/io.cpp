#include "orso/io.hpp"

#include <fstream>
#include <sstream>

#include "orso/young_impls.hpp"

namespace orso::io {

using young::YoungFunction;

json young_to_json(const YoungFunction& a) {
  const young::Impl* impl = &a.impl();
  if (auto* p = dynamic_cast<const young::ScaledPowerImpl*>(impl)) {
    json j{{"kind", "power"}, {"p", p->p()}};
    if (p->c() != 1.0) j["c"] = p->c();
    return j;
  }
  if (auto* p = dynamic_cast<const young::GaugeWallImpl*>(impl)) {
    if (p->wall() == 1.0) return json{{"kind", "linfty_gauge"}};
    return json{{"kind", "gauge_wall"}, {"t", p->wall()}};
  }
  if (auto* p = dynamic_cast<const young::PowerLogImpl*>(impl)) {
    return json{{"kind", "power_log"}, {"p0", p->p0()},   {"alpha0", p->alpha0()},
                {"p", p->p()},         {"alpha", p->alpha()}, {"crossover", p->crossover()}};
  }
  if (auto* p = dynamic_cast<const young::ExponentialImpl*>(impl)) {
    return json{{"kind", "exponential"}, {"gamma0", p->gamma0()}, {"gamma", p->gamma()}};
  }
  if (auto* p = dynamic_cast<const young::ConjugateImpl*>(impl)) {
    return json{{"kind", "conjugate"}, {"of", young_to_json(YoungFunction(p->source()))}};
  }
  if (auto* p = dynamic_cast<const young::TabulatedImpl*>(impl)) {
    json j{{"kind", "tabulated"}, {"grid", p->grid()}, {"values", p->values()}};
    if (!p->provenance().empty()) j["provenance"] = p->provenance();
    auto model_json = [](const AsymModel& m) -> json {
      switch (m.kind) {
        case AsymModel::Kind::PowerLog:
          return json{{"shape", "power_log"}, {"logC", m.logC}, {"q", m.q},
                      {"beta", m.beta},       {"gamma", m.gamma}};
        case AsymModel::Kind::RapidGrowth: return json{{"shape", "rapid_growth"}};
        case AsymModel::Kind::RapidDecay: return json{{"shape", "rapid_decay"}};
        case AsymModel::Kind::Wall: return json{{"shape", "wall"}, {"t", m.wall}};
        case AsymModel::Kind::Zero: return json{{"shape", "zero"}, {"t", m.wall}};
        default: return json{{"shape", "unknown"}};
      }
    };
    j["tail_zero"] = model_json(p->model_zero());
    j["tail_inf"] = model_json(p->model_inf());
    return j;
  }
  throw domain_error("young_to_json: unknown representation");
}

namespace {

AsymModel model_from_json(const json& j) {
  const std::string shape = j.value("shape", "unknown");
  if (shape == "power_log")
    return AsymModel::power_log(j.value("q", 1.0), j.value("beta", 0.0),
                                j.value("gamma", 0.0), j.value("logC", 0.0));
  if (shape == "rapid_growth") return AsymModel::rapid_growth();
  if (shape == "rapid_decay") return AsymModel::rapid_decay();
  if (shape == "wall") return AsymModel::wall_at(j.value("t", 1.0));
  if (shape == "zero") return AsymModel::zero_below(j.value("t", 1.0));
  return AsymModel::unknown();
}

}  // namespace

YoungFunction young_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") {
    const double c = j.value("c", 1.0);
    return c == 1.0 ? YoungFunction::power(j.at("p").get<double>())
                    : YoungFunction::scaled_power(c, j.at("p").get<double>());
  }
  if (kind == "linfty_gauge") return YoungFunction::linfty_gauge();
  if (kind == "gauge_wall") return YoungFunction::gauge_wall(j.at("t").get<double>());
  if (kind == "power_log")
    return YoungFunction::power_log(j.at("p0").get<double>(), j.at("alpha0").get<double>(),
                                    j.at("p").get<double>(), j.at("alpha").get<double>(),
                                    j.value("crossover", 1.0));
  if (kind == "exponential")
    return YoungFunction::exponential(j.at("gamma0").get<double>(), j.at("gamma").get<double>());
  if (kind == "conjugate") return YoungFunction::conjugate_of(young_from_json(j.at("of")));
  if (kind == "tabulated") {
    AsymModel mz = j.contains("tail_zero") ? model_from_json(j["tail_zero"]) : AsymModel::unknown();
    AsymModel mi = j.contains("tail_inf") ? model_from_json(j["tail_inf"]) : AsymModel::unknown();
    return YoungFunction::tabulated(j.at("grid").get<std::vector<double>>(),
                                    j.at("values").get<std::vector<double>>(), mz, mi,
                                    j.value("provenance", std::string{}));
  }
  throw domain_error("young_from_json: unknown kind '" + kind + "'");
}

YoungFunction young_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::istringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw domain_error("young spec: expected key=value in " + spec);
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto need = [&](const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw domain_error("young spec: missing " + k + " in " + spec);
    return std::stod(it->second);
  };
  if (head == "power") return YoungFunction::power(need("p"));
  if (head == "powerlog" || head == "power_log")
    return YoungFunction::power_log(need("p0"), need("alpha0"), need("p"), need("alpha"));
  if (head == "exp" || head == "exponential")
    return YoungFunction::exponential(need("gamma0"), need("gamma"));
  if (head == "linfty" || head == "linfty_gauge") return YoungFunction::linfty_gauge();
  if (head == "table") {
    auto it = kv.find("path");
    if (it == kv.end()) throw domain_error("young spec: table needs path=");
    return young_from_csv(it->second);
  }
  throw domain_error("young spec: unknown family '" + head + "'");
}

YoungFunction young_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open csv: " + path);
  std::vector<double> g, v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string c1, c2;
    std::getline(ss, c1, ',');
    std::getline(ss, c2, ',');
    try {
      const double t = std::stod(c1), val = std::stod(c2);
      g.push_back(t);
      v.push_back(val);
    } catch (const std::exception&) {
      if (g.empty()) continue;
      throw domain_error("bad csv row: " + line);
    }
  }
  AsymModel mz = AsymModel::unknown(), mi = AsymModel::unknown();
  std::ifstream side(path + ".json");
  if (side) {
    json j;
    side >> j;
    if (j.contains("tail_zero")) mz = model_from_json(j["tail_zero"]);
    if (j.contains("tail_inf")) mi = model_from_json(j["tail_inf"]);
  }
  return YoungFunction::tabulated(std::move(g), std::move(v), mz, mi, "csv:" + path);
}

void young_to_csv(const YoungFunction& a, const std::string& path) {
  const auto* p = dynamic_cast<const young::TabulatedImpl*>(&a.impl());
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write csv: " + path);
  out << "t,value\n";
  char buf[80];
  if (p) {
    for (size_t i = 0; i < p->grid().size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p->grid()[i], p->values()[i]);
      out << buf;
    }
  } else {
    for (double t : log_grid(1e-8, 1e8, 16)) {
      const double v = a(t);
      if (!(v > 0.0) || !std::isfinite(v)) continue;
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, v);
      out << buf;
    }
  }
  json side = young_to_json(young::tabulate(a, 16));
  std::ofstream sj(path + ".json");
  sj << json{{"tail_zero", side["tail_zero"]}, {"tail_inf", side["tail_inf"]}}.dump(2) << "\n";
}

json report_to_json(const gates::ConvergenceReport& rep) {
  json j{{"gate", gates::gate_name(rep.gate)},
         {"verdict", gates::verdict_name(rep.verdict)},
         {"method", rep.method == gates::ConvergenceReport::Method::ClosedForm
                        ? "closed_form"
                        : "numeric_tail_fit"}};
  if (!rep.local_exponents.empty()) j["local_exponents"] = rep.local_exponents;
  if (rep.dual_checked) j["dual_verdict"] = gates::verdict_name(rep.dual_verdict);
  return j;
}

json report_to_json(const modulus::EquivalenceReport& rep) {
  return json{{"r_lo", rep.r_lo},           {"r_hi", rep.r_hi},
              {"ratio_min", rep.ratio_min}, {"ratio_max", rep.ratio_max},
              {"slope", rep.slope},         {"verdict", rep.verdict}};
}

json report_to_json(const norms::NormResult& res) {
  json j{{"value", res.infinite ? json("inf") : json(res.value)},
         {"modular_at_value", res.modular_at_value},
         {"iterations", res.iterations}};
  if (res.norm_condition_warning) j["norm_condition_warning"] = true;
  return j;
}

json report_to_json(const trial::Estimate& est) {
  json j{{"value", est.value}, {"stderr", est.stderr_}, {"method", est.method}};
  if (est.method == "monte_carlo") {
    j["seed"] = est.seed;
    j["n"] = est.n_samples;
  }
  switch (est.flag) {
    case trial::Estimate::Flag::Ok: j["flag"] = "ok"; break;
    case trial::Estimate::Flag::Diverges: j["flag"] = "diverges"; break;
    case trial::Estimate::Flag::Inconclusive: j["flag"] = "inconclusive"; break;
  }
  return j;
}

json classification_to_json(const modulus::EmbeddingClassification& cls) {
  using Status = modulus::EmbeddingClassification::Status;
  json j;
  switch (cls.status) {
    case Status::Embedding:
      j["status"] = "embedding";
      j["regime"] = modulus::regime_name(cls.regime);
      break;
    case Status::NoEmbedding: j["status"] = "no_embedding"; break;
    case Status::Inadmissible: j["status"] = "inadmissible"; break;
    case Status::Inconclusive: j["status"] = "inconclusive"; break;
  }
  if (!cls.reason.empty()) j["reason"] = cls.reason;
  json gates_json = json::array();
  for (const auto& [g, rep] : cls.gates) gates_json.push_back(report_to_json(rep));
  j["gates"] = gates_json;
  return j;
}

}  // namespace orso::io

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orso/examples_table.hpp"
#include "orso/io.hpp"

namespace py = pybind11;
using namespace orso;
using young::YoungFunction;

namespace {

YoungFunction young_from_any(const std::string& spec) { return io::young_from_spec(spec); }

}  // namespace

PYBIND11_MODULE(_orso, m) {
  m.doc() = "Young-function calculus, Orlicz norms and optimal moduli of continuity "
            "for fractional Orlicz-Sobolev embeddings";

  py::class_<YoungFunction>(m, "YoungFunction")
      .def("__call__", &YoungFunction::value, py::arg("t"))
      .def("inverse", &YoungFunction::inverse, py::arg("y"))
      .def("density", &YoungFunction::density, py::arg("t"))
      .def("conjugate", &YoungFunction::conjugate)
      .def("describe", &YoungFunction::describe)
      .def("__repr__", [](const YoungFunction& a) { return "<YoungFunction " + a.describe() + ">"; });

  m.def("power", &YoungFunction::power, py::arg("p"));
  m.def("power_log", &YoungFunction::power_log, py::arg("p0"), py::arg("alpha0"), py::arg("p"),
        py::arg("alpha"), py::arg("crossover") = 1.0);
  m.def("exponential", &YoungFunction::exponential, py::arg("gamma0"), py::arg("gamma"));
  m.def("linfty_gauge", &YoungFunction::linfty_gauge);
  m.def("young", &young_from_any, py::arg("spec"), "parse a CLI-style Young function spec");

  m.def("matuszewska_indices", [](const YoungFunction& a) {
    const auto idx = young::matuszewska_indices(a);
    py::dict d;
    d["i0"] = idx.i0.is_inf ? py::cast(std::numeric_limits<double>::infinity())
                            : py::cast(idx.i0.value);
    d["iinf"] = idx.iinf.is_inf ? py::cast(std::numeric_limits<double>::infinity())
                                : py::cast(idx.iinf.value);
    d["inconclusive"] = idx.i0.inconclusive || idx.iinf.inconclusive;
    return d;
  });

  m.def("check_axioms", [](const YoungFunction& a) {
    const auto rep = young::check_axioms(a);
    py::dict d;
    d["ok"] = rep.ok;
    py::list checks;
    for (const auto& c : rep.checks) {
      py::dict cd;
      cd["name"] = c.name;
      cd["pass"] = c.pass;
      if (!c.pass) cd["witness_t"] = c.witness_t;
      checks.append(cd);
    }
    d["checks"] = checks;
    return d;
  });

  py::class_<gates::SmoothnessParams>(m, "SmoothnessParams")
      .def(py::init<int, double>(), py::arg("n"), py::arg("s"))
      .def_readonly("n", &gates::SmoothnessParams::n)
      .def_readonly("s", &gates::SmoothnessParams::s)
      .def_readonly("int_part", &gates::SmoothnessParams::int_part)
      .def_readonly("frac_part", &gates::SmoothnessParams::frac_part)
      .def_readonly("omega_n", &gates::SmoothnessParams::omega_n);

  m.def("classify", [](const YoungFunction& a, int n, double s) {
    const gates::SmoothnessParams p(n, s);
    return io::classification_to_json(modulus::classify_embedding(a, p)).dump();
  }, py::arg("young"), py::arg("n"), py::arg("s"),
     "embedding classification as a JSON string");

  m.def("classify_gate", [](const YoungFunction& a, int n, double s, const std::string& gate) {
    const gates::SmoothnessParams p(n, s);
    gates::Gate g;
    if (gate == "tail_sub") g = gates::Gate::TailSub;
    else if (gate == "origin_grad") g = gates::Gate::OriginGrad;
    else if (gate == "origin_sub") g = gates::Gate::OriginSub;
    else if (gate == "tail_grad") g = gates::Gate::TailGrad;
    else throw domain_error("unknown gate: " + gate);
    return io::report_to_json(gates::classify_gate(a, p, g)).dump();
  });

  m.def("sigma", [](const YoungFunction& a, int n, double s) {
    const gates::SmoothnessParams p(n, s);
    auto mod = modulus::sigma(a, p);
    return py::cpp_function([mod](double r) { return mod.eval(r); });
  }, py::arg("young"), py::arg("n"), py::arg("s"),
     "optimal modulus of continuity as a callable r -> sigma_s(r)");

  m.def("theta", [](const YoungFunction& a, int n, double s) {
    auto mod = modulus::theta(a, gates::SmoothnessParams(n, s));
    return py::cpp_function([mod](double r) { return mod.eval(r); });
  });
  m.def("rho", [](const YoungFunction& a, int n, double s) {
    auto mod = modulus::rho(a, gates::SmoothnessParams(n, s));
    return py::cpp_function([mod](double r) { return mod.eval(r); });
  });

  py::class_<norms::SampledFunction>(m, "SampledFunction")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("grid"),
           py::arg("values"))
      .def_static("indicator", &norms::SampledFunction::indicator, py::arg("a"), py::arg("b"))
      .def("__call__", &norms::SampledFunction::operator(), py::arg("t"));

  m.def("luxemburg_norm", [](const YoungFunction& a, const norms::SampledFunction& f) {
    const auto res = norms::luxemburg_norm(a, f);
    return res.infinite ? std::numeric_limits<double>::infinity() : res.value;
  }, py::arg("young"), py::arg("f"));

  m.def("decreasing_rearrangement", &norms::decreasing_rearrangement, py::arg("u"));

  m.def("orlicz_lorentz_norm", [](const YoungFunction& a, double q,
                                  const norms::SampledFunction& u) {
    const auto res = norms::orlicz_lorentz_norm(a, q, u);
    return res.infinite ? std::numeric_limits<double>::infinity() : res.value;
  }, py::arg("young"), py::arg("q"), py::arg("u"));

  m.def("kernel_norms", [](const YoungFunction& a, int n, double s, double r) {
    const auto kn = norms::kernel_norms(a, gates::SmoothnessParams(n, s), r);
    py::dict d;
    d["k0"] = kn.k0.infinite ? std::numeric_limits<double>::infinity() : kn.k0.value;
    d["kinf"] = kn.kinf.infinite ? std::numeric_limits<double>::infinity() : kn.kinf.value;
    return d;
  }, py::arg("young"), py::arg("n"), py::arg("s"), py::arg("r"));

  py::class_<trial::TrialFunction>(m, "TrialFunction")
      .def("__call__", [](const trial::TrialFunction& t, const std::vector<double>& x) {
        return t(x);
      })
      .def("support_radius", &trial::TrialFunction::support_radius)
      .def("lower_bound", &trial::TrialFunction::lower_bound);

  m.def("make_trial", [](const std::string& kind, const norms::SampledFunction& profile, int n,
                         double s, double k) {
    trial::TrialKind tk;
    if (kind == "radial") tk = trial::TrialKind::Radial;
    else if (kind == "radial_higher") tk = trial::TrialKind::RadialHigher;
    else if (kind == "odd") tk = trial::TrialKind::Odd;
    else if (kind == "scaling") tk = trial::TrialKind::ScalingFamily;
    else throw domain_error("unknown trial kind: " + kind);
    return trial::make_trial(tk, profile, gates::SmoothnessParams(n, s), k);
  }, py::arg("kind"), py::arg("profile"), py::arg("n"), py::arg("s"), py::arg("k") = 1.0);

  m.def("gagliardo_modular", [](const YoungFunction& a, int n, double s,
                                const trial::TrialFunction& u, const std::string& method,
                                unsigned long long seed, long long samples) {
    const gates::SmoothnessParams p(n, s);
    trial::MonteCarloOptions opt;
    opt.seed = seed;
    opt.n = samples;
    const auto est = trial::gagliardo_modular(
        a, p, u, method == "mc" ? trial::Method::MonteCarlo : trial::Method::RadialQuadrature,
        opt);
    py::dict d;
    d["value"] = est.value;
    d["stderr"] = est.stderr_;
    d["method"] = est.method;
    d["flag"] = est.flag == trial::Estimate::Flag::Ok ? "ok"
                : est.flag == trial::Estimate::Flag::Diverges ? "diverges" : "inconclusive";
    return d;
  }, py::arg("young"), py::arg("n"), py::arg("s"), py::arg("u"), py::arg("method") = "rq",
     py::arg("seed") = 1, py::arg("samples") = 200000);

  m.def("seminorm", [](const YoungFunction& a, int n, double s, const trial::TrialFunction& u) {
    const auto res = trial::seminorm(a, gates::SmoothnessParams(n, s), u);
    return res.infinite ? std::numeric_limits<double>::infinity() : res.value;
  }, py::arg("young"), py::arg("n"), py::arg("s"), py::arg("u"));

  m.def("verify_examples", [](const std::string& manifest) {
    const auto rows = examples::load_manifest(manifest);
    const auto results = examples::run_all(rows);
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["id"] = r.row.id;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("manifest") = std::string{});

  m.attr("__version__") = "0.1.0";
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "neurobench/error.hpp"
#include "neurobench/report.hpp"

namespace py = pybind11;
using namespace neurobench;

namespace {

py::dict ade(const AdeTriple& t) {
  py::dict d;
  d["area"] = t.area;
  d["delay"] = t.delay;
  d["energy"] = t.energy;
  return d;
}

py::dict workload_dict(const WorkloadBench& w) {
  py::dict d;
  d["schedule"] = std::string(to_string(w.schedule));
  d["area"] = w.area;
  d["delay"] = w.delay;
  d["energy"] = w.energy;
  d["power_w"] = w.power_watts();
  d["inference_throughput"] = w.inference_throughput;
  d["inferences_per_s"] = w.inferences_per_second();
  return d;
}

std::optional<NetworkKind> kind_arg(const std::optional<std::string>& k) {
  if (!k) return std::nullopt;
  return network_kind_from_string(*k);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Area, delay and energy benchmarks for neural-inference hardware";

  static py::exception<Error> base(m, "NeurobenchError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<IncomputableError>(m, "IncomputableError", base.ptr());
  py::register_exception<UnknownNameError>(m, "UnknownNameError", base.ptr());

  py::class_<Registry, std::shared_ptr<Registry>>(m, "Registry")
      .def_static(
          "load",
          [](const std::optional<std::string>& dir) {
            return std::make_shared<Registry>(dir ? Registry::load_dir(*dir)
                                                  : Registry::load_default());
          },
          py::arg("data_dir") = py::none())
      .def(
          "technologies",
          [](const Registry& r, const std::optional<std::string>& kind) {
            std::vector<std::string> out;
            for (const auto& t : r.enumerate_technologies(kind_arg(kind))) out.push_back(t.label);
            return out;
          },
          py::arg("kind") = py::none())
      .def("chips",
           [](const Registry& r) {
             std::vector<std::string> out;
             for (const auto& c : r.chips()) out.push_back(c.name);
             return out;
           })
      .def("workloads",
           [](const Registry& r) {
             std::vector<std::string> out;
             for (const auto& w : r.workloads()) out.push_back(w.name);
             return out;
           })
      .def("serialize", &Registry::serialize)
      .def(
          "bench_element",
          [](const Registry& r, const std::string& label, const std::string& coding) {
            const ElementBench e =
                bench_element(r, r.technology(label),
                              coding == "temporal" ? SpikeCoding::temporal : SpikeCoding::rate);
            py::dict d;
            d["technology"] = e.technology;
            d["synapse"] = ade(e.synapse);
            d["core_ic"] = ade(e.core_ic);
            d["neuron"] = ade(e.neuron);
            d["chip_ic"] = ade(e.chip_ic);
            return d;
          },
          py::arg("tech"), py::arg("coding") = "rate")
      .def(
          "bench_chip",
          [](const Registry& r, const std::string& label) {
            const ChipBench b = nominal_chip_bench(r, r.technology(label));
            py::dict d;
            d["area"] = b.area;
            d["time_step"] = b.time_step;
            d["energy_per_event"] = b.energy_per_event;
            d["throughput"] = b.throughput;
            d["power"] = b.power;
            d["energy_per_step"] = b.energy_per_step;
            return d;
          },
          py::arg("tech"))
      .def(
          "bench_workload",
          [](const Registry& r, const std::string& name, const std::string& label,
             const std::optional<std::string>& schedule) {
            std::optional<Schedule> s;
            if (schedule) s = schedule_from_string(*schedule);
            return workload_dict(bench_workload(r, r.workload(name), r.technology(label), s));
          },
          py::arg("workload"), py::arg("tech"), py::arg("schedule") = py::none())
      .def(
          "topsdown",
          [](const Registry& r, const std::string& chip) {
            const TopsDownElement e = topsdown(r.chip(chip), r.constants());
            py::dict d;
            d["a_neu"] = e.a_neu;
            d["a_syn"] = e.a_syn;
            d["tau_syn"] = e.tau_syn;
            d["tau_neu"] = e.tau_neu;
            d["e_syn"] = e.e_syn;
            d["e_neu"] = e.e_neu;
            d["r_a"] = e.r_a;
            d["s_neu"] = e.s_neu;
            return d;
          },
          py::arg("chip"))
      .def(
          "backfill",
          [](const Registry& r, const std::string& chip) {
            const BackfillResult b = backfill_derived(r.chip(chip));
            py::dict fills;
            for (const auto& f : b.fills) fills[py::str(std::string(to_string(f.field)))] = f.value;
            py::dict residuals;
            for (const auto& x : b.residuals) {
              residuals[py::str(std::string(identity_name(x.identity)))] = x.relative;
            }
            py::dict d;
            d["fills"] = fills;
            d["residuals"] = residuals;
            return d;
          },
          py::arg("chip"))
      .def(
          "workload_on_chip",
          [](const Registry& r, const std::string& chip, const std::string& name) {
            return workload_dict(run_workload_on_chip(r, r.chip(chip), r.workload(name)));
          },
          py::arg("chip"), py::arg("workload"))
      .def(
          "matrix_csv",
          [](const Registry& r, const std::string& scope, const std::string& workload,
             int digits) {
            MatrixOptions o;
            o.scope = scope == "workload" ? MatrixScope::workload
                      : scope == "chips"  ? MatrixScope::chips
                                          : MatrixScope::elements;
            o.workload = workload;
            o.digits = digits;
            return to_csv(emit_matrix(r, o));
          },
          py::arg("scope") = "elements", py::arg("workload") = "", py::arg("digits") = 6);

  m.def(
      "cascade",
      [](int fan_in, std::int64_t s_neu) {
        const Cascade c = cascade(FanIn::limited(fan_in), s_neu);
        return py::make_tuple(c.levels, c.extra_neurons);
      },
      py::arg("fan_in"), py::arg("s_neu"));

  m.def(
      "pareto_front",
      [](const std::vector<std::tuple<std::string, double, double>>& pts) {
        std::vector<ScatterPoint> in;
        for (const auto& [label, x, y] : pts) in.push_back({label, x, y, Series::ANN});
        std::vector<std::tuple<std::string, double, double>> out;
        for (const auto& p : pareto_front(std::move(in))) out.emplace_back(p.label, p.x, p.y);
        return out;
      },
      py::arg("points"));

  m.def("default_data_dir", [] { return default_data_dir().string(); });
}

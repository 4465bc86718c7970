#include "neurobench/workload.hpp"

#include <algorithm>

#include "neurobench/error.hpp"

namespace neurobench {

FanInPolicy FanInPolicy::from(const GlobalConstants& c) {
  return {c.fan_in_digital_cmos, c.fan_in_analog_cmos, c.fan_in_spintronic};
}

FanIn FanInPolicy::for_technology(const TechnologyId& tech) const {
  if (tech.kind == NetworkKind::SNN) return FanIn::unlimited();
  switch (tech.fan_in) {
    case FanInClass::digital_cmos: return FanIn::limited(digital_cmos);
    case FanInClass::analog_cmos: return FanIn::limited(analog_cmos);
    case FanInClass::spintronic: return FanIn::limited(spintronic);
    case FanInClass::sequential: return FanIn::sequential();
  }
  return FanIn::sequential();
}

namespace {

std::int64_t conv_out(int image, int kernel, int stride, Padding pad) {
  if (pad == Padding::same) return (image + stride - 1) / stride;
  return (image - kernel) / stride + 1;
}

}  // namespace

StageParams stage_params(const LayerSpec& layer, int stage_index, bool spiking) {
  if (stage_index < 1) throw DomainError("stage index is 1-based");
  StageParams s;
  if (layer.kind == LayerKind::fully_connected) {
    if (layer.fc.inputs < 1 || layer.fc.outputs < 1) {
      throw DomainError("layer " + layer.name + ": sizes must be >= 1");
    }
    s.n_in = layer.fc.inputs;
    s.n_out = layer.fc.outputs;
    s.s_neu = layer.fc.inputs;
    s.f_st = 1;
  } else {
    const auto& cv = layer.conv;
    if (cv.image_w < 1 || cv.image_h < 1 || cv.kernel < 1 || cv.in_channels < 1 ||
        cv.feature_maps < 1 || cv.stride < 1) {
      throw DomainError("layer " + layer.name + ": dimensions must be >= 1");
    }
    if (cv.padding == Padding::valid && (cv.kernel > cv.image_w || cv.kernel > cv.image_h)) {
      throw DomainError("layer " + layer.name + ": kernel exceeds image with valid padding");
    }
    s.n_in = static_cast<std::int64_t>(cv.image_w) * cv.image_h * cv.in_channels;
    s.n_out = conv_out(cv.image_w, cv.kernel, cv.stride, cv.padding) *
              conv_out(cv.image_h, cv.kernel, cv.stride, cv.padding);
    s.s_neu = static_cast<std::int64_t>(cv.kernel) * cv.kernel * cv.in_channels;
    s.f_st = cv.feature_maps;
  }
  s.r_a = spiking ? 1.0 / stage_index : 1.0;
  return s;
}

Cascade cascade(const FanIn& fan_in, std::int64_t s_neu) {
  if (s_neu < 1) throw DomainError("cascade: s_neu must be >= 1");
  if (fan_in.kind == FanIn::Kind::unlimited || fan_in.kind == FanIn::Kind::sequential) {
    return {1, 1};
  }
  const std::int64_t f = fan_in.value;
  if (f < 2) throw DomainError("cascade: fan-in must be >= 2 (use sequential mode for 1)");
  // smallest l >= 1 with f^l >= s_neu, in integers
  std::int64_t levels = 1;
  std::int64_t reach = f;
  std::int64_t nodes = 1;
  std::int64_t width = 1;
  while (reach < s_neu) {
    ++levels;
    reach *= f;
    width *= f;
    nodes += width;
  }
  return {levels, nodes};
}

double wire_area(const StageParams& s, const GlobalConstants& c) {
  const double p = c.wire_pitch_nm();
  return static_cast<double>(s.n_in) * static_cast<double>(s.n_out) * p * p;
}

double core_area(const StageParams& s, Topology topology, const ElementBench& elem,
                 const FanIn& fan_in, const GlobalConstants& c) {
  const Cascade cas = cascade(fan_in, s.s_neu);
  const double n_cor = static_cast<double>(cas.extra_neurons) * s.n_out + s.n_in;
  const double fan = topology == Topology::cross_connect ? static_cast<double>(s.n_in)
                                                         : static_cast<double>(s.s_neu);
  const double a = c.overhead_core * (c.overhead_neuron * elem.neuron.area * n_cor +
                                      c.overhead_synapse * elem.synapse.area * s.n_out * fan);
  return std::max(a, wire_area(s, c));
}

StageTimeEnergy stage_time_energy(const StageParams& s, const ElementBench& elem,
                                  const FanIn& fan_in) {
  const AdeTriple syn = elem.synapse_total();
  const AdeTriple neu = elem.neuron_total();
  StageTimeEnergy out;
  if (fan_in.kind == FanIn::Kind::sequential) {
    out.delay = static_cast<double>(s.s_neu) * syn.delay + neu.delay;
  } else {
    out.delay = static_cast<double>(cascade(fan_in, s.s_neu).levels) * syn.delay + neu.delay;
  }
  const double n_out = static_cast<double>(s.n_out);
  out.energy = s.r_a * static_cast<double>(s.s_neu) * n_out * syn.energy + n_out * neu.energy;
  return out;
}

WorkloadBench aggregate(std::vector<StageBench> stages, Schedule schedule) {
  if (stages.empty()) throw DomainError("workload has no stages");
  WorkloadBench w;
  w.schedule = schedule;
  for (const auto& st : stages) {
    const double f = static_cast<double>(st.params.f_st);
    w.energy += st.energy * f;
    if (schedule == Schedule::parallel) {
      w.area += st.area * f;
      w.delay += st.delay;
    } else {
      w.area = std::max(w.area, st.area);
      w.delay += st.delay * f;
    }
  }
  w.power = w.energy / w.delay;
  w.inference_throughput = 1.0 / (w.area * w.delay);
  w.stages = std::move(stages);
  return w;
}

WorkloadBench run_workload(const WorkloadSpec& spec, const ElementBench& elem, const FanIn& fan_in,
                           bool spiking, Schedule schedule, const GlobalConstants& c) {
  std::vector<StageBench> stages;
  int index = 1;
  for (const auto& layer : spec.layers) {
    StageBench st;
    st.params = stage_params(layer, index++, spiking);
    st.topology = layer.kind == LayerKind::convolution ? Topology::convolution
                                                       : Topology::cross_connect;
    st.cascade = cascade(fan_in, st.params.s_neu);
    st.area = core_area(st.params, st.topology, elem, fan_in, c);
    const auto te = stage_time_energy(st.params, elem, fan_in);
    st.delay = te.delay;
    st.energy = te.energy;
    stages.push_back(st);
  }
  return aggregate(std::move(stages), schedule);
}

WorkloadBench bench_workload(const Registry& reg, const WorkloadSpec& spec,
                             const TechnologyId& tech, std::optional<Schedule> schedule) {
  const ElementBench elem = bench_element(reg, tech);
  const FanIn fan_in = FanInPolicy::from(reg.constants()).for_technology(tech);
  return run_workload(spec, elem, fan_in, tech.kind == NetworkKind::SNN,
                      schedule.value_or(reg.default_schedule(tech)), reg.constants());
}

std::int64_t total_synaptic_ops(const WorkloadSpec& spec) {
  std::int64_t total = 0;
  int index = 1;
  for (const auto& layer : spec.layers) {
    const StageParams s = stage_params(layer, index++, false);
    total += s.s_neu * s.n_out * s.f_st;
  }
  return total;
}

}  // namespace neurobench

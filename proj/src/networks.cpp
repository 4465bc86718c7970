#include "neurobench/networks.hpp"

#include "neurobench/error.hpp"

namespace neurobench {

std::string_view to_string(SpikeCoding c) { return c == SpikeCoding::rate ? "rate" : "temporal"; }

namespace {

NetworkElementBench carry(const RawElementBench& raw, NetworkKind kind) {
  NetworkElementBench n;
  n.synapse = raw.synapse;
  n.neuron = raw.neuron;
  n.kind = kind;
  n.family = raw.family;
  n.technology = raw.technology;
  n.synapse_resistance = raw.synapse_resistance;
  return n;
}

}  // namespace

NetworkElementBench ann_transform(const RawElementBench& raw) {
  return carry(raw, NetworkKind::ANN);
}

NetworkElementBench cnn_transform(const RawElementBench& raw, const GlobalConstants& c) {
  const double ms = c.cnn_synapse_factor;
  const double mt = c.cnn_settling_factor;
  if (!(ms > 0 && mt > 0)) throw DomainError("CNN factors must be positive");
  NetworkElementBench n = carry(raw, NetworkKind::CNN);
  n.synapse = raw.synapse.scaled(ms, mt * ms, mt * ms);
  n.neuron = raw.neuron.scaled(1.0, mt, mt);
  return n;
}

NetworkElementBench snn_transform(const RawElementBench& raw, const GlobalConstants& c,
                                  SpikeCoding coding) {
  const double spi = c.spike_duration_factor;
  const double spa = c.spike_spacing_factor;
  const double fire = c.spikes_to_fire;
  if (spi < 1 || spa < 1 || fire < 1) throw DomainError("SNN factors must be >= 1");
  NetworkElementBench n = carry(raw, NetworkKind::SNN);
  n.coding = coding;
  n.synapse = raw.synapse.scaled(1.0, spi * spa, spi);
  const double e_neu = coding == SpikeCoding::rate ? spi * fire : spi;
  n.neuron = raw.neuron.scaled(1.0, spi * spa * fire, e_neu);
  return n;
}

NetworkElementBench onn_transform(const RawElementBench& raw, const GlobalConstants& c,
                                  OscillatorClass osc, std::optional<double> inv4_delay,
                                  std::optional<AdeTriple> device) {
  if (!device || !(device->delay > 0)) {
    throw IncomputableError("ONN: oscillator needs device intrinsic delay and energy");
  }
  const double tau = device->delay;
  const double e = device->energy;
  double f = 0.0;
  double p = 0.0;
  switch (osc) {
    case OscillatorClass::transistor_ring:
      if (!inv4_delay || !(*inv4_delay > 0)) {
        throw IncomputableError("ONN: transistor ring needs the inv4 delay");
      }
      f = 0.1 / *inv4_delay;
      p = 3 * e / tau;
      break;
    case OscillatorClass::spintronic:
      f = 6 / tau;
      p = 6 * e / tau;
      break;
    case OscillatorClass::piezo:
      f = 1 / tau;
      p = 3 * e / tau;
      break;
  }
  NetworkElementBench n = carry(raw, NetworkKind::ONN);
  n.oscillator = osc;
  n.osc_frequency = f;
  n.osc_power = p;
  const double t_syn = c.sync_periods / f;
  n.synapse = {10 * raw.synapse.area, t_syn, p * t_syn};
  n.neuron = {30 * raw.neuron.area, t_syn, p * t_syn};
  return n;
}

NetworkElementBench network_element(const Registry& reg, const TechnologyId& tech,
                                    SpikeCoding coding) {
  const RawElementBench raw = raw_element(reg, tech);
  const GlobalConstants& c = reg.constants();
  switch (tech.kind) {
    case NetworkKind::ANN: return ann_transform(raw);
    case NetworkKind::CNN: return cnn_transform(raw, c);
    case NetworkKind::SNN: return snn_transform(raw, c, coding);
    case NetworkKind::ONN: {
      if (!tech.oscillator) throw ValidationError(tech.label + ": ONN label without oscillator");
      const auto& prims = reg.primitives(tech.primitives);
      std::optional<double> inv4;
      if (auto it = prims.entries.find(Primitive::inv4); it != prims.entries.end()) {
        inv4 = it->second.delay;
      }
      const DeviceRecord& dev = reg.lookup_device(tech.oscillator->device);
      auto n = onn_transform(raw, c, tech.oscillator->oscillator_class, inv4, dev.intrinsic());
      n.technology = tech.label;
      n.synapse_resistance = 0.0;
      return n;
    }
  }
  throw ValidationError("unhandled network kind");
}

}  // namespace neurobench

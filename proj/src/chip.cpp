#include "neurobench/chip.hpp"

#include "neurobench/error.hpp"

namespace neurobench {

ChipConfig nominal_config(const GlobalConstants& c, bool spiking) {
  ChipConfig cfg;
  cfg.cores = c.nominal_cores;
  cfg.neurons_per_core = c.nominal_neurons_per_core;
  cfg.synapses_per_neuron = c.nominal_synapses_per_neuron;
  cfg.activity = 1.0;
  cfg.spiking = spiking;
  return cfg;
}

void validate(const ChipConfig& cfg) {
  if (cfg.cores < 1 || cfg.neurons_per_core < 1 || cfg.synapses_per_neuron < 1) {
    throw DomainError("chip config: counts must be >= 1");
  }
  if (!(cfg.activity > 0 && cfg.activity <= 1)) {
    throw DomainError("chip config: activity must lie in (0, 1]");
  }
}

double chip_area(const ChipConfig& cfg, double neuron_area, double synapse_area,
                 const GlobalConstants& c) {
  validate(cfg);
  const double core = c.overhead_core * cfg.neurons_per_core *
                      (c.overhead_neuron * neuron_area +
                       cfg.synapses_per_neuron * c.overhead_synapse * synapse_area);
  return c.overhead_chip * cfg.cores * core;
}

double chip_area(const ChipConfig& cfg, const ElementBench& elem, const GlobalConstants& c) {
  return chip_area(cfg, elem.neuron.area, elem.synapse.area, c);
}

double firing_rate(const ChipConfig& cfg, double tau_syn) {
  validate(cfg);
  if (!(tau_syn > 0)) throw DomainError("firing rate: synapse delay must be positive");
  if (!cfg.spiking) return 1.0 / tau_syn;
  return 1.0 / (cfg.activity * cfg.synapses_per_neuron * tau_syn);
}

ChipBench chip_bench(const ChipConfig& cfg, const ElementBench& elem, const GlobalConstants& c) {
  const AdeTriple syn = elem.synapse_total();
  const AdeTriple neu = elem.neuron_total();
  ChipBench b;
  b.total_synapses = cfg.total_synapses();
  b.area = chip_area(cfg, elem, c);
  b.firing_rate = firing_rate(cfg, syn.delay);
  b.time_step = 1.0 / b.firing_rate + neu.delay;
  b.energy_per_event = syn.energy + neu.energy / (cfg.activity * cfg.synapses_per_neuron);
  b.throughput = b.firing_rate * cfg.activity * b.total_synapses;
  b.power = b.throughput * b.energy_per_event;
  b.energy_per_step = b.power * b.time_step;
  return b;
}

ChipBench nominal_chip_bench(const Registry& reg, const TechnologyId& tech) {
  const ElementBench elem = bench_element(reg, tech);
  return chip_bench(nominal_config(reg.constants(), tech.kind == NetworkKind::SNN), elem,
                    reg.constants());
}

}  // namespace neurobench

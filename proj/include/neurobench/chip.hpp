#pragma once

#include "neurobench/interconnect.hpp"

namespace neurobench {

struct ChipConfig {
  int cores = 1;
  int neurons_per_core = 1;
  int synapses_per_neuron = 1;
  double activity = 1.0;
  bool spiking = false;

  [[nodiscard]] double total_synapses() const {
    return static_cast<double>(cores) * neurons_per_core * synapses_per_neuron;
  }
};

struct ChipBench {
  double total_synapses = 0.0;
  double area = 0.0;              // nm^2
  double firing_rate = 0.0;       // 1/ps
  double time_step = 0.0;         // ps
  double energy_per_event = 0.0;  // aJ
  double throughput = 0.0;        // events/ps
  double power = 0.0;             // aJ/ps
  double energy_per_step = 0.0;   // aJ
};

/// The Table 1 nominal chip; spiking selects the SNN firing-rate convention.
ChipConfig nominal_config(const GlobalConstants& c, bool spiking = false);

void validate(const ChipConfig& cfg);

/// Overhead-corrected chip area from per-element areas (nm^2).
double chip_area(const ChipConfig& cfg, double neuron_area, double synapse_area,
                 const GlobalConstants& c);
double chip_area(const ChipConfig& cfg, const ElementBench& elem, const GlobalConstants& c);

/// Events per ps for a synapse delay `tau_syn` (ps).
double firing_rate(const ChipConfig& cfg, double tau_syn);

/// Chip figures from element totals (synapse incl. lic, neuron incl. gic).
ChipBench chip_bench(const ChipConfig& cfg, const ElementBench& elem, const GlobalConstants& c);

/// bench_element + chip_bench on the nominal chip.
ChipBench nominal_chip_bench(const Registry& reg, const TechnologyId& tech);

}  // namespace neurobench

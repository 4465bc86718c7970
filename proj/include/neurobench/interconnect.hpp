#pragma once

#include <optional>
#include <string>

#include "neurobench/networks.hpp"

namespace neurobench {

/// One row of the element matrix: synapse, core-wide interconnect ("lic"),
/// neuron, chip-wide interconnect ("gic").
struct ElementBench {
  AdeTriple synapse;
  AdeTriple core_ic;
  AdeTriple neuron;
  AdeTriple chip_ic;
  std::string technology;
  NetworkKind kind = NetworkKind::ANN;

  /// synapse + core_ic
  [[nodiscard]] AdeTriple synapse_total() const { return synapse + core_ic; }
  /// neuron + chip_ic
  [[nodiscard]] AdeTriple neuron_total() const { return neuron + chip_ic; }
  /// The 12 numbers in matrix column order: areas, then delays, then energies,
  /// each as syn, lic, neu, gic.
  [[nodiscard]] std::array<double, 12> columns() const;
};

struct ChipGeometry {
  double synapse_block_area = 0.0;  // nm^2
  double chip_area = 0.0;           // nm^2
};

struct IcLengths {
  double core = 0.0;  // nm
  double chip = 0.0;  // nm
};

/// E = c_ic * l * V^2, in aJ.
double ic_energy(double length_nm, double voltage, const GlobalConstants& c);

IcLengths ic_lengths(double synapse_block_area, double chip_area);

/// RC delay of a core-wide wire of `length_nm`, in ps. `load_cap` (F)
/// defaults to the constants' C_load.
double core_ic_delay(double length_nm, double r_eff, const GlobalConstants& c,
                     std::optional<double> load_cap = std::nullopt);

/// Charging time of a chip-wide wire driven by `drive_current` (A), in ps.
double chip_ic_delay(double length_nm, double drive_current, double voltage,
                     const GlobalConstants& c);

/// Footprint reported in the lic/gic area columns: wire length times pitch.
double ic_footprint(double length_nm, const GlobalConstants& c);

/// Per-technology electrical context for the interconnect equations.
struct IcDrive {
  double voltage = 0.0;        // V
  double drive_current = 0.0;  // A
  double load_cap = 0.0;       // F
  double r_eff = 0.0;          // Ohm
};

/// Voltage (0.1 V for spintronic neurons/oscillators), I_neu, C_load and R_eff
/// for a technology.
IcDrive ic_drive(const Registry& reg, const TechnologyId& tech, double synapse_resistance);

ElementBench assemble_row(const NetworkElementBench& net, const ChipGeometry& geom,
                          const IcDrive& drive, const GlobalConstants& c);

/// Full row on the nominal chip.
ElementBench bench_element(const Registry& reg, const TechnologyId& tech,
                           SpikeCoding coding = SpikeCoding::rate);

}  // namespace neurobench

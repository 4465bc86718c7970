#pragma once

#include "neurobench/ade.hpp"
#include "neurobench/registry.hpp"

// Reading / driving sub-circuits attached to neurons. Electrical quantities
// are SI; area, delay and energy come out canonical (nm^2, ps, aJ).

namespace neurobench {

struct SenseAmpBench {
  double area = 0.0;            // nm^2
  double transconductance = 0.0;  // S
  double load_cap = 0.0;        // F
  double delay = 0.0;           // ps
  double energy = 0.0;          // aJ

  [[nodiscard]] AdeTriple ade() const { return {area, delay, energy}; }
};

struct VoltageSenseAmpBench {
  double area = 0.0;        // nm^2
  double precharge_r = 0.0;  // Ohm
  double sense_cap = 0.0;   // F
  double bitline_cap = 0.0;  // F
  double delay = 0.0;       // ps
  double energy = 0.0;      // aJ

  [[nodiscard]] AdeTriple ade() const { return {area, delay, energy}; }
};

struct AnalogReadBench {
  double area = 0.0;            // nm^2
  double column_voltage = 0.0;  // V
  double delay = 0.0;           // ps
  double power = 0.0;           // W
  double energy = 0.0;          // aJ

  [[nodiscard]] AdeTriple ade() const { return {area, delay, energy}; }
};

struct OtaCellBench {
  double cell_cap = 0.0;           // C_f, F
  double subthreshold_swing = 0.0;  // V/decade
  double bias_current = 0.0;       // A
  double ota_transconductance = 0.0;  // S
  double output_conductance = 0.0;    // G_m, S
  double effective_resistance = 0.0;  // R_f, Ohm
  double opamp_current = 0.0;      // A
  double ota_current = 0.0;        // A
};

/// SRAM read sense amplifier, per bit.
SenseAmpBench sense_amp(const GlobalConstants& c, const CircuitPrimitiveTable& prims);

/// Voltage sense amplifier for digital resistive memories, per bit.
VoltageSenseAmpBench voltage_sense_amp(const GlobalConstants& c,
                                       const CircuitPrimitiveTable& prims, double r_on,
                                       double r_off, int synapses_per_neuron);

/// Read circuit for one analog resistive cell.
AnalogReadBench analog_read(const GlobalConstants& c, const CircuitPrimitiveTable& prims);

/// OTA-based analog cell. Transistor parameters come from the primitive
/// family (CMOS or TFET).
OtaCellBench ota_cell(const GlobalConstants& c, const TransistorParams& t);

}  // namespace neurobench

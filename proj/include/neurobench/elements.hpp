#pragma once

#include <string>

#include "neurobench/ade.hpp"
#include "neurobench/registry.hpp"

namespace neurobench {

/// Synapse and neuron of one technology before any network transform.
struct RawElementBench {
  AdeTriple synapse;
  AdeTriple neuron;
  ElementFamily family = ElementFamily::digital_sram;
  std::string technology;
  double synapse_resistance = 0.0;  // R_eff, Ohm; resistive families only
};

enum class ResistiveMode { digital, analog };

RawElementBench digital_sram_element(const GlobalConstants& c, const CircuitPrimitiveTable& prims);
RawElementBench digital_mac_element(const GlobalConstants& c, const CircuitPrimitiveTable& prims);
RawElementBench analog_transistor_element(const GlobalConstants& c,
                                          const CircuitPrimitiveTable& prims);
RawElementBench analog_single_device_element(const DeviceRecord& device,
                                             const GlobalConstants& c);
RawElementBench resistive_synapse(const DeviceRecord& device, const GlobalConstants& c,
                                  const CircuitPrimitiveTable& prims, ResistiveMode mode);

/// Digital CMOS neuron of Eqs 5-7 without any reading circuit.
AdeTriple digital_neuron(const GlobalConstants& c, const CircuitPrimitiveTable& prims);

/// Dispatches on the technology's element family. ONN technologies return the
/// element of their base combination.
RawElementBench raw_element(const Registry& reg, const TechnologyId& tech);

}  // namespace neurobench

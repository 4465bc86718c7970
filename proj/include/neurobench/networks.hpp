#pragma once

#include <optional>
#include <string>

#include "neurobench/elements.hpp"

namespace neurobench {

enum class SpikeCoding { rate, temporal };

std::string_view to_string(SpikeCoding c);

struct NetworkElementBench {
  AdeTriple synapse;
  AdeTriple neuron;
  NetworkKind kind = NetworkKind::ANN;
  ElementFamily family = ElementFamily::digital_sram;
  std::string technology;
  double synapse_resistance = 0.0;  // Ohm, carried from the raw element
  std::optional<SpikeCoding> coding;              // SNN only
  std::optional<OscillatorClass> oscillator;      // ONN only
  std::optional<double> osc_frequency;            // 1/ps, ONN only
  std::optional<double> osc_power;                // aJ/ps, ONN only
};

NetworkElementBench ann_transform(const RawElementBench& raw);
NetworkElementBench cnn_transform(const RawElementBench& raw, const GlobalConstants& c);
NetworkElementBench snn_transform(const RawElementBench& raw, const GlobalConstants& c,
                                  SpikeCoding coding = SpikeCoding::rate);

/// `inv4_delay` (ps) drives transistor rings; `device` supplies the intrinsic
/// delay/energy that sets oscillator power (and frequency, for spintronic and
/// piezo oscillators).
NetworkElementBench onn_transform(const RawElementBench& raw, const GlobalConstants& c,
                                  OscillatorClass osc, std::optional<double> inv4_delay,
                                  std::optional<AdeTriple> device);

/// Raw element plus the transform for the technology's network kind.
NetworkElementBench network_element(const Registry& reg, const TechnologyId& tech,
                                    SpikeCoding coding = SpikeCoding::rate);

}  // namespace neurobench

#include "neurobench/elements.hpp"

#include <cmath>

#include "neurobench/circuits.hpp"
#include "neurobench/error.hpp"
#include "neurobench/units.hpp"

namespace neurobench {

namespace {

void require_bits(const GlobalConstants& c) {
  if (c.bits_per_synapse < 1) throw DomainError("n_b must be >= 1");
}

// Reading circuits repeat per bit in area and energy; the bits are read in
// parallel so the delay is counted once.
AdeTriple per_bit(const AdeTriple& circuit, int bits) {
  return {circuit.area * bits, circuit.delay, circuit.energy * bits};
}

double ota_width_ratio(const GlobalConstants& c) {
  return (c.ota_width_nm(0) + c.ota_width_nm(1) + c.ota_width_nm(2)) / c.digital_width_nm();
}

}  // namespace

AdeTriple digital_neuron(const GlobalConstants& c, const CircuitPrimitiveTable& prims) {
  require_bits(c);
  const double nb = c.bits_per_synapse;
  const auto& reg = prims.at(Primitive::reg);
  const auto& se = prims.at(Primitive::state);
  const auto& nan = prims.at(Primitive::nand2);
  const auto& inv = prims.at(Primitive::inv);
  const auto& a1 = prims.at(Primitive::add1);
  return {nb * (2 * reg.area + inv.area + nan.area + a1.area + se.area),
          2 * reg.delay + 3 * se.delay + nan.delay + inv.delay + nb * a1.delay,
          nb * (2 * reg.energy + 3 * se.energy + nan.energy + inv.energy + a1.energy)};
}

RawElementBench digital_sram_element(const GlobalConstants& c, const CircuitPrimitiveTable& prims) {
  require_bits(c);
  const double nb = c.bits_per_synapse;
  const auto& reg = prims.at(Primitive::reg);
  const auto& se = prims.at(Primitive::state);
  const auto& nan = prims.at(Primitive::nand2);
  const auto& inv = prims.at(Primitive::inv);
  const auto& a1 = prims.at(Primitive::add1);

  RawElementBench b;
  b.family = ElementFamily::digital_sram;
  b.synapse = {nb * reg.area,
               3 * reg.delay + 4 * se.delay + nan.delay + inv.delay + nb * a1.delay,
               nb * (3 * reg.energy + 4 * se.energy + nan.energy + inv.energy + a1.energy)};
  b.neuron = digital_neuron(c, prims) + per_bit(sense_amp(c, prims).ade(), c.bits_per_synapse);
  return b;
}

RawElementBench digital_mac_element(const GlobalConstants& c, const CircuitPrimitiveTable& prims) {
  require_bits(c);
  const double nb = c.bits_per_synapse;
  const auto& add = prims.at(Primitive::add);
  const auto& se = prims.at(Primitive::state);
  const auto& ram = prims.ram();

  RawElementBench b;
  b.family = ElementFamily::digital_mac;
  b.synapse = {(nb + 1) * add.area + se.area, add.delay + se.delay,
               (nb + 1) * add.energy / 2 + se.energy};
  b.neuron = {add.area + 2 * se.area + nb * ram.area, add.delay + 2 * se.delay + ram.delay,
              add.energy + 2 * se.energy + nb * ram.energy};
  return b;
}

RawElementBench analog_transistor_element(const GlobalConstants& c,
                                          const CircuitPrimitiveTable& prims) {
  const OtaCellBench ota = ota_cell(c, prims.transistor_or(c));
  const double a_inv4 = prims.at(Primitive::inv4).area;
  const double ratio = ota_width_ratio(c);

  const double tau = units::s_to_ps(8.4 * ota.effective_resistance * ota.cell_cap);
  const double p_syn = c.supply_voltage * ota.ota_current;
  const double p_neu = c.supply_voltage * (ota.opamp_current + ota.ota_current);

  RawElementBench b;
  b.family = ElementFamily::analog_transistor;
  b.synapse = {2 * a_inv4 * ratio, tau, units::j_to_aj(p_syn * units::ps_to_s(tau))};
  b.neuron = {3 * a_inv4 * ratio, tau, units::j_to_aj(p_neu * units::ps_to_s(tau))};
  return b;
}

RawElementBench analog_single_device_element(const DeviceRecord& device,
                                             const GlobalConstants& c) {
  if (!(device.area_int > 0 && device.delay_int > 0 && device.energy_int > 0)) {
    throw IncomputableError("device " + device.name + " lacks intrinsic values");
  }
  const double nl = c.levels_per_analog_synapse;
  RawElementBench b;
  b.family = ElementFamily::analog_single_device;
  b.synapse = {nl * device.area_int, device.delay_int, device.energy_int};
  b.neuron = {nl * device.area_int, nl * device.delay_int / 4, nl * device.energy_int};
  return b;
}

RawElementBench resistive_synapse(const DeviceRecord& device, const GlobalConstants& c,
                                  const CircuitPrimitiveTable& prims, ResistiveMode mode) {
  if (!device.r_on || !device.r_off) {
    throw IncomputableError("device " + device.name + " has no r_on/r_off");
  }
  const double r_on = *device.r_on;
  const double i_on = c.supply_voltage / r_on;
  const double r_eff = r_on * std::sqrt(static_cast<double>(c.levels_per_analog_synapse));
  const double tau = units::s_to_ps(2.3 * r_eff * c.min_ic_capacitance());

  RawElementBench b;
  b.synapse_resistance = r_eff;
  b.synapse = {device.area_int, tau,
               units::j_to_aj(i_on * c.supply_voltage * units::ps_to_s(tau))};
  if (mode == ResistiveMode::digital) {
    b.family = ElementFamily::resistive_digital;
    const auto vsa = voltage_sense_amp(c, prims, r_on, *device.r_off,
                                       c.nominal_synapses_per_neuron);
    b.neuron = digital_neuron(c, prims) + per_bit(vsa.ade(), c.bits_per_synapse);
  } else {
    b.family = ElementFamily::resistive_analog;
    b.neuron = analog_transistor_element(c, prims).neuron + analog_read(c, prims).ade();
  }
  return b;
}

RawElementBench raw_element(const Registry& reg, const TechnologyId& tech) {
  const GlobalConstants& c = reg.constants();
  const Combination& comb = reg.combination(tech.combination);
  const CircuitPrimitiveTable& prims = reg.primitives(comb.primitives);
  RawElementBench b;
  switch (comb.family) {
    case ElementFamily::digital_sram: b = digital_sram_element(c, prims); break;
    case ElementFamily::digital_mac: b = digital_mac_element(c, prims); break;
    case ElementFamily::analog_transistor: b = analog_transistor_element(c, prims); break;
    case ElementFamily::analog_single_device:
      b = analog_single_device_element(reg.lookup_device(comb.synapse_device), c);
      break;
    case ElementFamily::resistive_digital:
      b = resistive_synapse(reg.lookup_device(comb.synapse_device), c, prims,
                            ResistiveMode::digital);
      break;
    case ElementFamily::resistive_analog:
      b = resistive_synapse(reg.lookup_device(comb.synapse_device), c, prims,
                            ResistiveMode::analog);
      break;
  }
  b.technology = tech.label;
  return b;
}

}  // namespace neurobench

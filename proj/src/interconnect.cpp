#include "neurobench/interconnect.hpp"

#include <cmath>

#include "neurobench/chip.hpp"
#include "neurobench/error.hpp"
#include "neurobench/units.hpp"

namespace neurobench {

std::array<double, 12> ElementBench::columns() const {
  return {synapse.area,   core_ic.area,   neuron.area,   chip_ic.area,
          synapse.delay,  core_ic.delay,  neuron.delay,  chip_ic.delay,
          synapse.energy, core_ic.energy, neuron.energy, chip_ic.energy};
}

double ic_energy(double length_nm, double voltage, const GlobalConstants& c) {
  if (length_nm < 0) throw DomainError("interconnect length must be >= 0");
  return units::j_to_aj(c.ic_cap_per_length * units::nm_to_m(length_nm) * voltage * voltage);
}

IcLengths ic_lengths(double synapse_block_area, double chip_area) {
  if (synapse_block_area < 0 || chip_area < 0) throw DomainError("areas must be >= 0");
  return {std::sqrt(synapse_block_area), std::sqrt(chip_area)};
}

double core_ic_delay(double length_nm, double r_eff, const GlobalConstants& c,
                     std::optional<double> load_cap) {
  if (length_nm < 0) throw DomainError("interconnect length must be >= 0");
  const double r_ic = c.min_ic_resistance;
  const double c_ic = c.min_ic_capacitance();
  const double c_load = load_cap.value_or(c.load_capacitance_F());
  const double per_segment = 0.38 * r_ic * c_ic + r_eff * c_ic + r_ic * c_load;
  return units::s_to_ps(per_segment * length_nm / c.min_ic_length_nm());
}

double chip_ic_delay(double length_nm, double drive_current, double voltage,
                     const GlobalConstants& c) {
  if (!(drive_current > 0)) throw DomainError("chip interconnect: I_neu must be positive");
  if (length_nm < 0) throw DomainError("interconnect length must be >= 0");
  return units::s_to_ps(c.ic_cap_per_length * units::nm_to_m(length_nm) * voltage /
                        drive_current);
}

double ic_footprint(double length_nm, const GlobalConstants& c) {
  return length_nm * c.wire_pitch_nm();
}

IcDrive ic_drive(const Registry& reg, const TechnologyId& tech, double synapse_resistance) {
  const GlobalConstants& c = reg.constants();
  const TransistorParams& t = reg.primitives(tech.primitives).transistor_or(c);
  const DeviceRecord& neuron = reg.lookup_device(tech.neuron_device);

  IcDrive d;
  d.voltage = neuron.device_class == DeviceClass::spintronic ? c.spintronic_supply_voltage
                                                             : c.supply_voltage;
  d.load_cap = c.load_capacitance ? *c.load_capacitance
                                  : t.cap_per_width * units::nm_to_m(c.digital_width_nm());
  d.r_eff = tech.kind == NetworkKind::ONN ? 0.0 : synapse_resistance;

  if (tech.neuron_drive_current) {
    d.drive_current = *tech.neuron_drive_current;
  } else if (c.neuron_drive_current) {
    d.drive_current = *c.neuron_drive_current;
  } else if (neuron.device_class == DeviceClass::transistor) {
    d.drive_current = t.on_current_per_width * units::nm_to_m(c.digital_width_nm());
  } else if (neuron.r_on) {
    d.drive_current = c.supply_voltage / *neuron.r_on;
  } else {
    // switching device: the current that delivers E_int over tau_int at V
    d.drive_current = units::aj_to_j(neuron.energy_int) /
                      (d.voltage * units::ps_to_s(neuron.delay_int));
  }
  return d;
}

ElementBench assemble_row(const NetworkElementBench& net, const ChipGeometry& geom,
                          const IcDrive& drive, const GlobalConstants& c) {
  const IcLengths l = ic_lengths(geom.synapse_block_area, geom.chip_area);
  ElementBench row;
  row.technology = net.technology;
  row.kind = net.kind;
  row.synapse = net.synapse;
  row.neuron = net.neuron;
  row.core_ic = {ic_footprint(l.core, c), core_ic_delay(l.core, drive.r_eff, c, drive.load_cap),
                 ic_energy(l.core, drive.voltage, c)};
  row.chip_ic = {ic_footprint(l.chip, c),
                 l.chip > 0 ? chip_ic_delay(l.chip, drive.drive_current, drive.voltage, c) : 0.0,
                 ic_energy(l.chip, drive.voltage, c)};
  return row;
}

ElementBench bench_element(const Registry& reg, const TechnologyId& tech, SpikeCoding coding) {
  const GlobalConstants& c = reg.constants();
  const NetworkElementBench net = network_element(reg, tech, coding);
  const ChipConfig cfg = nominal_config(c, tech.kind == NetworkKind::SNN);
  ChipGeometry geom;
  geom.synapse_block_area = cfg.synapses_per_neuron * net.synapse.area;
  geom.chip_area = chip_area(cfg, net.neuron.area, net.synapse.area, c);
  return assemble_row(net, geom, ic_drive(reg, tech, net.synapse_resistance), c);
}

}  // namespace neurobench

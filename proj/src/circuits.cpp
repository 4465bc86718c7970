#include "neurobench/circuits.hpp"

#include <cmath>
#include <numbers>

#include "neurobench/error.hpp"
#include "neurobench/units.hpp"

namespace neurobench {

using units::nm_to_m;
using units::s_to_ps;
using units::j_to_aj;

SenseAmpBench sense_amp(const GlobalConstants& c, const CircuitPrimitiveTable& prims) {
  if (c.sense_voltage >= c.supply_voltage) {
    throw DomainError("sense amp: V_sa must be below V_cc");
  }
  const TransistorParams& t = prims.transistor_or(c);
  const double w_dt = c.digital_width_nm();
  const double w_p = c.sa_width_nm(0);
  const double w_n = c.sa_width_nm(1);
  const double w_iso = c.sa_width_nm(2);
  const double w_en = c.sa_width_nm(3);

  SenseAmpBench b;
  b.area = prims.at(Primitive::inv1).area * (w_p + w_n + w_iso + w_en) / w_dt;
  b.transconductance = t.linear_transconductance * (w_p + w_n) / w_dt;
  if (!(b.transconductance > 0.0)) {
    throw DomainError("sense amp: zero transconductance (w_p + w_n = 0)");
  }
  b.load_cap = t.cap_per_width * nm_to_m(w_p + w_n);
  const double tau_1 = prims.at(Primitive::add1).delay;
  b.delay = s_to_ps(std::log(c.supply_voltage / c.sense_voltage) * b.load_cap /
                    b.transconductance) +
            c.bits_per_synapse * tau_1;
  b.energy = j_to_aj(b.load_cap * c.supply_voltage * c.supply_voltage);
  return b;
}

VoltageSenseAmpBench voltage_sense_amp(const GlobalConstants& c,
                                       const CircuitPrimitiveTable& prims, double r_on,
                                       double r_off, int synapses_per_neuron) {
  if (!(r_on > 0.0) || !(r_off > r_on)) {
    throw DomainError("voltage sense amp: need r_off > r_on > 0 (got r_on " +
                      std::to_string(r_on) + ", r_off " + std::to_string(r_off) + ")");
  }
  if (synapses_per_neuron < 0) throw DomainError("voltage sense amp: negative s_neu");
  const TransistorParams& t = prims.transistor_or(c);

  VoltageSenseAmpBench b;
  b.area = 6.0 * prims.at(Primitive::inv1).area;
  b.precharge_r = t.on_resistance;
  b.sense_cap = 2.0 * t.cap_per_width * nm_to_m(c.digital_width_nm());
  b.bitline_cap = synapses_per_neuron * c.min_ic_capacitance();
  const double drive = c.vsa_read_voltage / r_on - c.vsa_read_voltage / r_off;
  const double tau_1 = prims.at(Primitive::add1).delay;
  b.delay = s_to_ps(2.3 * b.precharge_r * b.sense_cap +
                    c.vsa_sense_voltage * (b.sense_cap + b.bitline_cap) / drive) +
            2.0 * c.bits_per_synapse * tau_1;
  b.energy = j_to_aj(b.sense_cap * c.supply_voltage * c.supply_voltage);
  return b;
}

AnalogReadBench analog_read(const GlobalConstants& c, const CircuitPrimitiveTable& prims) {
  if (c.analog_row_voltage <= c.vsa_read_voltage) {
    throw DomainError("analog read: V_row must exceed V_rvsa");
  }
  const TransistorParams& t = prims.transistor_or(c);
  AnalogReadBench b;
  b.area = 32.0 * prims.at(Primitive::inv1).area;
  b.column_voltage = c.analog_row_voltage - c.vsa_read_voltage;
  b.delay = c.analog_read_pulse + 2.0 * c.bits_per_synapse * prims.at(Primitive::add1).delay;
  b.power = 25.0 * b.column_voltage * b.column_voltage / t.on_resistance;
  b.energy = j_to_aj(b.power * units::ps_to_s(b.delay));
  return b;
}

OtaCellBench ota_cell(const GlobalConstants& c, const TransistorParams& t) {
  if (!(t.off_current_per_width > 0.0) || !(t.on_current_per_width > t.off_current_per_width)) {
    throw DomainError("OTA cell: need i_on > i_off > 0");
  }
  if (!(c.cnn_max_weight > 0.0)) throw DomainError("OTA cell: w_max must be positive");
  const double w_in = nm_to_m(c.ota_width_nm(0));
  const double w_up = c.ota_width_nm(1);
  const double w_out_nm = c.ota_width_nm(2);

  OtaCellBench b;
  b.cell_cap = 4.0 * t.cap_per_width * nm_to_m(w_out_nm);
  b.subthreshold_swing =
      c.saturation_voltage / std::log10(t.on_current_per_width / t.off_current_per_width);
  b.bias_current = std::sqrt(t.on_current_per_width * t.off_current_per_width) * w_in;
  b.ota_transconductance =
      b.bias_current * std::numbers::ln10 / b.subthreshold_swing * (w_out_nm / w_up);
  b.output_conductance = 2.0 * b.ota_transconductance / c.cnn_max_weight;
  b.effective_resistance = 4.0 / b.output_conductance;
  b.opamp_current = c.supply_voltage / b.effective_resistance;
  b.ota_current = 2.0 * b.bias_current * (2.0 * c.cnn_weight_sum / c.cnn_max_weight) *
                  (1.0 + w_out_nm / w_up);
  return b;
}

}  // namespace neurobench

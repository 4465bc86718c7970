#include <cmath>

#include "doctest.h"
#include "neurobench/circuits.hpp"
#include "neurobench/error.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

namespace {
const CircuitPrimitiveTable& cmos() { return shipped().primitives("CMOS"); }
}  // namespace

TEST_CASE("sense amplifier against hand arithmetic") {
  const auto b = sense_amp(shipped().constants(), cmos());
  // widths 4, 4, 6.5, 5 F at F = 15 nm, w_dt = 60 nm, A_inv1 = 6760 nm^2
  CHECK(b.area == doctest::Approx(6760.0 * 292.5 / 60.0));
  CHECK(b.transconductance == doctest::Approx(3.2742e-4 * 2.0));
  CHECK(b.load_cap == doctest::Approx(1.02318e-9 * 120e-9));
  const double rc_ps = std::log(2.0) * (1.02318e-9 * 120e-9) / (3.2742e-4 * 2.0) * 1e12;
  CHECK(b.delay == doctest::Approx(rc_ps + 8 * 3.44));
  CHECK(b.energy == doctest::Approx(1.02318e-9 * 120e-9 * 0.64 * 1e18));
}

TEST_CASE("sense amplifier domain checks") {
  GlobalConstants c = shipped().constants();
  c.sense_voltage = c.supply_voltage;
  CHECK_THROWS_AS(sense_amp(c, cmos()), DomainError);
  c = shipped().constants();
  c.sa_widths_F = {0.0, 0.0, 6.5, 5.0};
  CHECK_THROWS_AS(sense_amp(c, cmos()), DomainError);
}

TEST_CASE("voltage sense amplifier") {
  const auto& c = shipped().constants();
  const auto b = voltage_sense_amp(c, cmos(), 200e3, 1000e3, 256);
  CHECK(b.area == doctest::Approx(6 * 6760.0));
  CHECK(b.sense_cap == doctest::Approx(2 * 1.02318e-9 * 60e-9));
  CHECK(b.bitline_cap == doctest::Approx(256 * 0.5e-9 * 300e-9));
  CHECK(b.energy == doctest::Approx(b.sense_cap * 0.64 * 1e18));

  // more cells on the bit line, slower read; a wider on/off window, faster
  CHECK(voltage_sense_amp(c, cmos(), 200e3, 1000e3, 512).delay > b.delay);
  CHECK(voltage_sense_amp(c, cmos(), 200e3, 1e9, 256).delay < b.delay);

  CHECK_THROWS_AS(voltage_sense_amp(c, cmos(), 1000e3, 200e3, 256), DomainError);
  CHECK_THROWS_AS(voltage_sense_amp(c, cmos(), 200e3, 200e3, 256), DomainError);
}

TEST_CASE("analog read circuit") {
  const auto& c = shipped().constants();
  const auto b = analog_read(c, cmos());
  CHECK(b.column_voltage == doctest::Approx(0.15));
  CHECK(b.area == doctest::Approx(32 * 6760.0));
  CHECK(b.delay == doctest::Approx(1000.0 + 16 * 3.44));
  CHECK(b.power == doctest::Approx(25 * 0.15 * 0.15 / 8144.5));
  CHECK(b.energy == doctest::Approx(b.power * b.delay * 1e-12 * 1e18));

  GlobalConstants bad = c;
  bad.analog_row_voltage = bad.vsa_read_voltage;
  CHECK_THROWS_AS(analog_read(bad, cmos()), DomainError);
}

TEST_CASE("OTA cell identities") {
  const auto& c = shipped().constants();
  const auto o = ota_cell(c, c.transistor);
  CHECK(o.subthreshold_swing == doctest::Approx(0.3 / 4.0));
  CHECK(o.bias_current == doctest::Approx(std::sqrt(1637.1 * 0.16371) * 150e-9));
  CHECK(o.output_conductance == doctest::Approx(2 * o.ota_transconductance / 0.23));
  CHECK(o.effective_resistance * o.output_conductance == doctest::Approx(4.0));
  CHECK(o.opamp_current == doctest::Approx(0.8 / o.effective_resistance));
  CHECK(o.cell_cap == doctest::Approx(4 * 1.02318e-9 * 150e-9));

  TransistorParams t = c.transistor;
  t.off_current_per_width = t.on_current_per_width;
  CHECK_THROWS_AS(ota_cell(c, t), DomainError);
}

TEST_CASE("TFET family overrides the transistor set") {
  const auto& c = shipped().constants();
  const auto& tfet = shipped().primitives("TFET");
  REQUIRE(tfet.transistor.has_value());
  CHECK(!(tfet.transistor_or(c) == c.transistor));
  CHECK(cmos().transistor_or(c) == c.transistor);
}

#include <cmath>

#include "doctest.h"
#include "neurobench/chip.hpp"
#include "neurobench/error.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

TEST_CASE("wire energy: C V^2 per unit length") {
  const auto& c = shipped().constants();
  // 15 mm at 1 V: 0.5 nF/m * 0.015 m = 7.5 pJ
  CHECK(ic_energy(15e6, 1.0, c) == doctest::Approx(7.5e6));
  CHECK(ic_energy(0.0, 0.8, c) == 0.0);
  CHECK(ic_energy(2e6, 0.8, c) == doctest::Approx(2 * ic_energy(1e6, 0.8, c)));
  CHECK_THROWS_AS(ic_energy(-1.0, 0.8, c), DomainError);
}

TEST_CASE("wire lengths are square roots of the areas they span") {
  const auto l = ic_lengths(4e6, 9e10);
  CHECK(l.core == doctest::Approx(2e3));
  CHECK(l.chip == doctest::Approx(3e5));
  CHECK_THROWS_AS(ic_lengths(-1.0, 1.0), DomainError);
}

TEST_CASE("core wire delay: distributed RC plus driver and load terms") {
  const auto& c = shipped().constants();
  const double seg = 300.0;  // 20 F
  const double r_ic = 667.0;
  const double c_ic = 0.5e-9 * 300e-9;
  const double c_load = 1e-16;
  const double want = (0.38 * r_ic * c_ic + 1e4 * c_ic + r_ic * c_load) * (3000.0 / seg) * 1e12;
  CHECK(core_ic_delay(3000.0, 1e4, c, c_load) == doctest::Approx(want));
  // linear in length, increasing in the driver resistance
  CHECK(core_ic_delay(6000.0, 1e4, c, c_load) == doctest::Approx(2 * want));
  CHECK(core_ic_delay(3000.0, 2e4, c, c_load) > want);
}

TEST_CASE("chip wire delay: charge C V through I") {
  const auto& c = shipped().constants();
  const double i = 1e-4;
  CHECK(chip_ic_delay(1e6, i, 0.8, c) == doctest::Approx(0.5e-9 * 1e-3 * 0.8 / i * 1e12));
  CHECK_THROWS_AS(chip_ic_delay(1e6, 0.0, 0.8, c), DomainError);
}

TEST_CASE("drive context per technology") {
  const Registry& r = shipped();
  const auto& c = r.constants();
  const auto sram = ic_drive(r, r.technology("ANNDCSRAM"), 0.0);
  CHECK(sram.voltage == 0.8);
  CHECK(sram.drive_current == doctest::Approx(1637.1 * 60e-9));
  CHECK(sram.load_cap == doctest::Approx(1.02318e-9 * 60e-9));

  const auto stt = ic_drive(r, r.technology("OscSTT"), 123.0);
  CHECK(stt.voltage == c.spintronic_supply_voltage);
  CHECK(stt.r_eff == 0.0);

  const auto dw = ic_drive(r, r.technology("ANNDoWDoW"), 5.0);
  CHECK(dw.voltage == doctest::Approx(0.1));
  const DeviceRecord& d = r.lookup_device("DW");
  CHECK(dw.drive_current == doctest::Approx(d.energy_int * 1e-18 / (0.1 * d.delay_int * 1e-12)));
  CHECK(dw.r_eff == 5.0);
}

TEST_CASE("element row geometry on the nominal chip") {
  const Registry& r = shipped();
  const auto& c = r.constants();
  for (const char* label : {"ANNDCSRAM", "CNNAnCOxme", "SpiMEME", "OscPiezo"}) {
    CAPTURE(label);
    const TechnologyId& t = r.technology(label);
    const ElementBench e = bench_element(r, t);
    const double l_core = e.core_ic.area / c.wire_pitch_nm();
    const double l_chip = e.chip_ic.area / c.wire_pitch_nm();
    CHECK(l_core * l_core == doctest::Approx(256 * e.synapse.area));
    const ChipConfig cfg = nominal_config(c, t.kind == NetworkKind::SNN);
    CHECK(l_chip * l_chip == doctest::Approx(chip_area(cfg, e, c)));
    CHECK(e.synapse_total() == e.synapse + e.core_ic);
    CHECK(e.neuron_total() == e.neuron + e.chip_ic);
    const auto cols = e.columns();
    CHECK(cols[0] == e.synapse.area);
    CHECK(cols[7] == e.chip_ic.delay);
    CHECK(cols[11] == e.chip_ic.energy);
  }
}

TEST_CASE("every element row is finite and positive") {
  const Registry& r = shipped();
  for (const auto& t : r.enumerate_technologies()) {
    CAPTURE(t.label);
    for (double v : bench_element(r, t).columns()) {
      CHECK(std::isfinite(v));
      CHECK(v > 0);
    }
  }
}

#include <cmath>

#include "doctest.h"
#include "neurobench/circuits.hpp"
#include "neurobench/elements.hpp"
#include "neurobench/error.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

TEST_CASE("calibrated synapse areas match the published element table") {
  const Registry& r = shipped();
  // um^2 values printed in the element table
  CHECK(raw_element(r, r.technology("ANNDCSRAM")).synapse.area / 1e6 ==
        doctest::Approx(2.765).epsilon(1e-3));
  CHECK(raw_element(r, r.technology("ANNDCCMAC")).synapse.area / 1e6 ==
        doctest::Approx(336.9).epsilon(1e-3));
  CHECK(raw_element(r, r.technology("ANNAnCAnC")).synapse.area / 1e6 ==
        doctest::Approx(0.338).epsilon(1e-2));
}

TEST_CASE("SRAM element: per-bit register synapse and sense-amp neuron") {
  const auto& c = shipped().constants();
  const auto& p = shipped().primitives("CMOS");
  const auto e = digital_sram_element(c, p);
  CHECK(e.synapse.area == doctest::Approx(8 * 345600.0));
  const AdeTriple neu = digital_neuron(c, p);
  const auto sa = sense_amp(c, p);
  CHECK(e.neuron.area == doctest::Approx(neu.area + 8 * sa.area));
  CHECK(e.neuron.delay == doctest::Approx(neu.delay + sa.delay));
  CHECK(e.neuron.energy == doctest::Approx(neu.energy + 8 * sa.energy));
}

TEST_CASE("digital elements scale with bit width") {
  GlobalConstants c = shipped().constants();
  const auto& p = shipped().primitives("CMOS");
  const auto e8 = digital_sram_element(c, p);
  c.bits_per_synapse = 16;
  const auto e16 = digital_sram_element(c, p);
  CHECK(e16.synapse.area == doctest::Approx(2 * e8.synapse.area));
  CHECK(e16.synapse.delay > e8.synapse.delay);
  c.bits_per_synapse = 0;
  CHECK_THROWS_AS(digital_sram_element(c, p), DomainError);
}

TEST_CASE("OTA element: neuron is three inv4-equivalents, synapse two") {
  const auto& c = shipped().constants();
  for (const char* fam : {"CMOS", "TFET"}) {
    const auto e = analog_transistor_element(c, shipped().primitives(fam));
    CHECK(e.neuron.area / e.synapse.area == doctest::Approx(1.5));
    CHECK(e.neuron.delay == e.synapse.delay);
    CHECK(e.neuron.energy > e.synapse.energy);
  }
  // TFET runs on a lower current, so its cell is slower
  CHECK(analog_transistor_element(c, shipped().primitives("TFET")).synapse.delay >
        analog_transistor_element(c, shipped().primitives("CMOS")).synapse.delay);
}

TEST_CASE("resistive synapse against an independent RC oracle") {
  const auto& c = shipped().constants();
  const auto& p = shipped().primitives("CMOS");
  const DeviceRecord& dev = shipped().lookup_device("OxideR");
  const auto e = resistive_synapse(dev, c, p, ResistiveMode::digital);
  const double r_eff = 200e3 * 8.0;      // sqrt(64) levels
  const double c_ic = 0.5e-9 * 300e-9;   // one minimum wire segment
  const double tau_s = 2.3 * r_eff * c_ic;
  CHECK(e.synapse_resistance == doctest::Approx(r_eff));
  CHECK(e.synapse.area == doctest::Approx(3600.0));
  CHECK(e.synapse.delay == doctest::Approx(tau_s * 1e12));
  CHECK(e.synapse.energy == doctest::Approx(0.8 / 200e3 * 0.8 * tau_s * 1e18));

  const auto a = resistive_synapse(dev, c, p, ResistiveMode::analog);
  CHECK(a.synapse == e.synapse);
  CHECK(a.neuron.area == doctest::Approx(analog_transistor_element(c, p).neuron.area +
                                         analog_read(c, p).area));

  DeviceRecord plain = dev;
  plain.r_on.reset();
  CHECK_THROWS_AS(resistive_synapse(plain, c, p, ResistiveMode::digital), IncomputableError);
}

TEST_CASE("single-device analog element") {
  const auto& c = shipped().constants();
  const DeviceRecord& dev = shipped().lookup_device("FEFET");
  const auto e = analog_single_device_element(dev, c);
  CHECK(e.synapse == dev.intrinsic().scaled_area(64));
  CHECK(e.neuron.area == doctest::Approx(64 * dev.area_int));
  CHECK(e.neuron.delay == doctest::Approx(16 * dev.delay_int));
  CHECK(e.neuron.energy == doctest::Approx(64 * dev.energy_int));
}

TEST_CASE("every technology yields a positive raw element") {
  const Registry& r = shipped();
  for (const auto& t : r.enumerate_technologies()) {
    CAPTURE(t.label);
    const auto e = raw_element(r, t);
    for (double v : {e.synapse.area, e.synapse.delay, e.synapse.energy, e.neuron.area,
                     e.neuron.delay, e.neuron.energy}) {
      CHECK(std::isfinite(v));
      CHECK(v > 0);
    }
  }
}

TEST_CASE("network kinds share one raw element per combination") {
  const Registry& r = shipped();
  for (const auto& comb : r.combinations()) {
    const auto ann = raw_element(r, r.technology("ANN" + comb.code));
    const auto cnn = raw_element(r, r.technology("CNN" + comb.code));
    CHECK(ann.synapse == cnn.synapse);
    CHECK(ann.neuron == cnn.neuron);
  }
  CHECK(raw_element(r, r.technology("OscMOSring")).synapse ==
        raw_element(r, r.technology("ANNAnCAnC")).synapse);
}

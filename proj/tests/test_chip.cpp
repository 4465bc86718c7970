#include "doctest.h"
#include "neurobench/chip.hpp"
#include "neurobench/error.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

namespace {

ElementBench toy() {
  ElementBench e;
  e.synapse = {100.0, 10.0, 50.0};
  e.core_ic = {1.0, 2.0, 5.0};
  e.neuron = {1000.0, 100.0, 400.0};
  e.chip_ic = {1.0, 300.0, 600.0};
  return e;
}

}  // namespace

TEST_CASE("nominal configuration") {
  const ChipConfig cfg = nominal_config(shipped().constants());
  CHECK(cfg.cores == 64);
  CHECK(cfg.neurons_per_core == 256);
  CHECK(cfg.synapses_per_neuron == 256);
  CHECK(cfg.total_synapses() == 64.0 * 256 * 256);
}

TEST_CASE("chip area with overheads") {
  const auto& c = shipped().constants();
  ChipConfig cfg{2, 3, 4, 1.0, false};
  // M_ch c_ch M_cor n_cor (M_neu a_neu + s_neu M_syn a_syn), all overheads 2
  CHECK(chip_area(cfg, 1000.0, 100.0, c) == doctest::Approx(2 * 2 * 2 * 3 * (2 * 1000.0 + 4 * 2 * 100.0)));
  cfg.cores = 0;
  CHECK_THROWS_AS(chip_area(cfg, 1.0, 1.0, c), DomainError);
}

TEST_CASE("firing rate: clocked vs spiking") {
  ChipConfig cfg{1, 1, 100, 0.5, false};
  CHECK(firing_rate(cfg, 20.0) == doctest::Approx(1 / 20.0));
  cfg.spiking = true;
  CHECK(firing_rate(cfg, 20.0) == doctest::Approx(1 / (0.5 * 100 * 20.0)));
  CHECK_THROWS_AS(firing_rate(cfg, 0.0), DomainError);
  cfg.activity = 1.5;
  CHECK_THROWS_AS(firing_rate(cfg, 1.0), DomainError);
}

TEST_CASE("chip benchmark identities") {
  const auto& c = shipped().constants();
  const ChipConfig cfg{4, 16, 8, 1.0, false};
  const ChipBench b = chip_bench(cfg, toy(), c);
  CHECK(b.total_synapses == 512.0);
  CHECK(b.firing_rate == doctest::Approx(1 / 12.0));
  CHECK(b.time_step == doctest::Approx(12.0 + 400.0));
  CHECK(b.energy_per_event == doctest::Approx(55.0 + 1000.0 / 8));
  CHECK(b.throughput == doctest::Approx(512.0 / 12.0));
  CHECK(b.power == doctest::Approx(b.throughput * b.energy_per_event));
  CHECK(b.energy_per_step == doctest::Approx(b.power * b.time_step));
}

TEST_CASE("spiking chips run slower for the same element") {
  const auto& c = shipped().constants();
  ChipConfig cfg = nominal_config(c);
  const ChipBench clocked = chip_bench(cfg, toy(), c);
  cfg.spiking = true;
  const ChipBench spiking = chip_bench(cfg, toy(), c);
  CHECK(spiking.throughput < clocked.throughput);
  CHECK(spiking.area == clocked.area);
}

TEST_CASE("nominal chip benchmark for every technology") {
  const Registry& r = shipped();
  for (const auto& t : r.enumerate_technologies()) {
    CAPTURE(t.label);
    const ChipBench b = nominal_chip_bench(r, t);
    CHECK(b.area > 0);
    CHECK(b.power > 0);
    CHECK(b.throughput > 0);
  }
}

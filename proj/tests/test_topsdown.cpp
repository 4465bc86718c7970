#include <cmath>

#include "doctest.h"
#include "neurobench/error.hpp"
#include "neurobench/topsdown.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

TEST_CASE("TrueNorth per-element figures") {
  const auto& c = shipped().constants();
  const auto e = topsdown_neuromorphic(shipped().chip("TrueNorth"), c);
  const double neurons = 4096.0 * 256;
  CHECK(e.a_syn == doctest::Approx(0.95 * 430e12 / (neurons * 256)));
  CHECK(e.a_syn / 1e6 == doctest::Approx(1.522).epsilon(1e-3));  // um^2
  CHECK(e.a_neu == doctest::Approx(0.05 * 430e12 / neurons));
  CHECK(e.e_neu == doctest::Approx(3328e6));
  // 20 Hz, half the 256 synapses active
  CHECK(e.tau_syn == doctest::Approx(1e12 / (20.0 * 0.5 * 256)));
}

TEST_CASE("E_neu / E_syn = r_a s_neu on every computable neuromorphic chip") {
  const Registry& r = shipped();
  int computed = 0;
  for (const auto& chip : r.chips()) {
    if (chip.kind != ChipKind::neuromorphic) continue;
    try {
      const auto e = topsdown_neuromorphic(chip, r.constants());
      CHECK(e.e_neu / e.e_syn == doctest::Approx(e.r_a * e.s_neu));
      CHECK(e.a_neu / (e.a_syn * e.s_neu) == doctest::Approx(0.05 / 0.95));
      ++computed;
    } catch (const IncomputableError&) {
    }
  }
  CHECK(computed >= 10);
}

TEST_CASE("missing fields are named") {
  const Registry& r = shipped();
  ChipRecord tn = r.chip("TrueNorth");
  tn.area.reset();
  try {
    topsdown_neuromorphic(tn, r.constants());
    FAIL("expected an error");
  } catch (const IncomputableError& e) {
    CHECK(std::string(e.what()).find("area required") != std::string::npos);
  }
  CHECK_THROWS_AS(topsdown(r.chip("SpiNNaker 2"), r.constants()), IncomputableError);
  CHECK_THROWS_AS(topsdown(r.chip("DYNAPSEL"), r.constants()), IncomputableError);

  ChipRecord ey = r.chip("Eyeriss");
  ey.clock.reset();
  CHECK_THROWS_AS(topsdown_accelerator(ey, r.constants()), IncomputableError);
  CHECK_THROWS_AS(topsdown_accelerator(r.chip("TrueNorth"), r.constants()), DomainError);
}

TEST_CASE("accelerator energy per MAC from power and throughput") {
  const Registry& r = shipped();
  const ChipRecord& ey = r.chip("Eyeriss");
  CHECK(*ey.power / *ey.throughput / 1e6 == doctest::Approx(8.3).epsilon(0.01));
  const ChipRecord& tpu = r.chip("TPU");
  CHECK(*tpu.power / *tpu.throughput / 1e6 == doctest::Approx(3.5).epsilon(0.01));

  ChipRecord bare = ey;
  bare.energy_per_event.reset();
  const auto e = topsdown_accelerator(bare, r.constants());
  CHECK(e.e_syn == doctest::Approx(*ey.power / *ey.throughput));
  CHECK(e.tau_syn == doctest::Approx(1.0 / *ey.clock));
  CHECK(e.a_neu + e.a_syn * e.s_neu == doctest::Approx(0.10 * *ey.area));
}

TEST_CASE("backfill: fully specified record is a no-op with small residuals") {
  const auto b = backfill_derived(shipped().chip("TrueNorth"));
  CHECK(b.fills.empty());
  REQUIRE(b.residuals.size() == 2);
  for (const auto& res : b.residuals) CHECK(std::abs(res.relative) < 0.15);
}

TEST_CASE("backfill: starred SpiNNaker activity is re-derived") {
  const auto b = backfill_derived(shipped().chip("SpiNNaker"));
  bool seen = false;
  for (const auto& d : b.rederived) {
    if (d.field == ChipField::activity) {
      seen = true;
      CHECK(d.quoted == doctest::Approx(0.4));
      CHECK(d.implied == doctest::Approx(64e6 / (10.0 * 16 * 1024 * 1024)).epsilon(1e-6));
      CHECK(d.implied == doctest::Approx(0.4).epsilon(0.06));
    }
  }
  CHECK(seen);
}

TEST_CASE("backfill fills one unknown, never overwrites, and is idempotent") {
  const Registry& r = shipped();
  ChipRecord tn = r.chip("TrueNorth");
  tn.power.reset();
  const auto once = backfill_derived(tn);
  REQUIRE(once.fills.size() == 1);
  CHECK(once.fills[0].field == ChipField::power);
  CHECK(once.fills[0].identity == Identity::power);
  CHECK(*once.record.power == doctest::Approx(*tn.throughput * *tn.energy_per_event));
  CHECK(*once.record.area == *tn.area);

  const auto twice = backfill_derived(once.record);
  CHECK(twice.fills.empty());
  CHECK(twice.record.power == once.record.power);
  CHECK(twice.record.derived == once.record.derived);

  for (const auto& chip : r.chips()) {
    try {
      const auto a = backfill_derived(chip);
      const auto b = backfill_derived(a.record);
      CHECK(b.fills.empty());
    } catch (const IncomputableError&) {
    }
  }
}

TEST_CASE("backfill: two unknowns in one identity is under-determined") {
  ChipRecord tn = shipped().chip("TrueNorth");
  tn.fire_rate.reset();
  tn.activity.reset();
  CHECK_THROWS_AS(backfill_derived(tn), IncomputableError);
  CHECK_THROWS_AS(backfill_derived(shipped().chip("DYNAPSEL")), IncomputableError);
}

TEST_CASE("workloads on published chips") {
  const Registry& r = shipped();
  const auto& speech = r.workload("speech_mlp");
  const auto loihi = run_workload_on_chip(r, r.chip("Loihi"), speech);
  CHECK(loihi.schedule == Schedule::time_multiplexed);
  CHECK(loihi.delay > 0);
  CHECK(loihi.energy > 0);
  const auto myriad = run_workload_on_chip(r, r.chip("Myriad 2"), speech);
  CHECK(myriad.inferences_per_second() > 0);

  WorkloadSpec empty;
  empty.name = "empty";
  CHECK_THROWS_AS(run_workload_on_chip(r, r.chip("Loihi"), empty), DomainError);
}

#include <set>
#include <thread>

#include "doctest.h"
#include "neurobench/error.hpp"
#include "neurobench/interconnect.hpp"
#include "support.hpp"

using namespace neurobench;
using nbtest::shipped;

TEST_CASE("shipped datasets: table sizes") {
  const Registry& r = shipped();
  CHECK(r.devices().size() == 15);
  CHECK(r.combinations().size() == 17);
  CHECK(r.enumerate_technologies().size() == 56);
  CHECK(r.enumerate_technologies(NetworkKind::ANN).size() == 17);
  CHECK(r.enumerate_technologies(NetworkKind::CNN).size() == 17);
  CHECK(r.enumerate_technologies(NetworkKind::SNN).size() == 15);
  CHECK(r.enumerate_technologies(NetworkKind::ONN).size() == 7);
  CHECK(r.workloads().size() == 6);
  CHECK(r.chips().size() == 27);
}

TEST_CASE("technology labels, aliases and ordering") {
  const Registry& r = shipped();
  CHECK(r.technology("ANNDCSRAM").label == "ANNDCSRAM");
  CHECK(r.technology("ANNDiCSRAM").label == "ANNDCSRAM");
  CHECK(r.technology("OscTFering").label == "OscTFEring");
  CHECK_THROWS_AS((void)r.technology("ANNNoSuch"), UnknownNameError);
  CHECK_THROWS_AS((void)r.lookup_device("Unobtanium"), UnknownNameError);

  // no spiking MAC labels
  for (const auto& t : r.enumerate_technologies(NetworkKind::SNN)) {
    CHECK(t.label.find("MAC") == std::string::npos);
  }
  const auto all = r.enumerate_technologies();
  CHECK(all.front().label == "ANNDCSRAM");
  CHECK(all.back().label == "OscOxide");
  std::set<std::string> labels;
  for (const auto& t : all) labels.insert(t.label);
  CHECK(labels.size() == all.size());
}

TEST_CASE("dataset values arrive in canonical units") {
  const Registry& r = shipped();
  const auto& c = r.constants();
  CHECK(c.feature_size == 15.0);
  CHECK(c.supply_voltage == 0.8);
  CHECK(c.ic_cap_per_length == doctest::Approx(0.5e-9));
  CHECK(c.min_ic_resistance == doctest::Approx(667.0));

  const ChipRecord& tn = r.chip("TrueNorth");
  CHECK(*tn.area == doctest::Approx(430e12));
  CHECK(*tn.power == doctest::Approx(72e3));
  CHECK(*tn.throughput == doctest::Approx(3000e6 * 1e-12));
  CHECK(*tn.energy_per_event == doctest::Approx(26e6));
  CHECK(tn.total_synapses() == doctest::Approx(4096.0 * 256 * 256));

  const ChipRecord& ey = r.chip("Eyeriss");
  CHECK(ey.kind == ChipKind::accelerator);
  CHECK(*ey.clock == doctest::Approx(200e6 * 1e-12));
  CHECK(*ey.power == doctest::Approx(0.278e6));
  CHECK(ey.derived.count(ChipField::energy_per_event) == 1);

  CHECK(!r.chip("DYNAPSEL").power);
  CHECK(*r.lookup_device("OxideR").r_on == doctest::Approx(200e3));
}

TEST_CASE("default schedules") {
  const Registry& r = shipped();
  CHECK(r.default_schedule(r.technology("ANNDCSRAM")) == Schedule::parallel);
  CHECK(r.default_schedule(r.technology("ANNDCCMAC")) == Schedule::time_multiplexed);
  CHECK(r.topsdown_schedule() == Schedule::time_multiplexed);
  CHECK(schedule_from_string("tmux") == Schedule::time_multiplexed);
}

TEST_CASE("loader rejects r_off below r_on") {
  const auto dir = nbtest::scratch_data("roff");
  auto j = nbtest::read_json(dir / "devices.json");
  for (auto& d : j["devices"]) {
    if (d["name"] == "OxideR") d["r_off"] = 100;
  }
  nbtest::write_json(dir / "devices.json", j);
  try {
    Registry::load_dir(dir);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("OxideR") != std::string::npos);
    CHECK(std::string(e.what()).find("r_off") != std::string::npos);
  }
}

TEST_CASE("loader rejects a missing constant") {
  const auto dir = nbtest::scratch_data("vcc");
  auto j = nbtest::read_json(dir / "constants.json");
  bool erased = false;
  for (auto& [k, v] : j.items()) {
    if (v.is_object() && v.contains("supply_voltage")) erased = v.erase("supply_voltage") == 1;
  }
  if (!erased) erased = j.erase("supply_voltage") == 1;
  REQUIRE(erased);
  nbtest::write_json(dir / "constants.json", j);
  try {
    Registry::load_dir(dir);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("supply_voltage") != std::string::npos);
  }
}

TEST_CASE("loader rejects a file without a units block") {
  const auto dir = nbtest::scratch_data("units");
  auto j = nbtest::read_json(dir / "devices.json");
  j.erase("units");
  nbtest::write_json(dir / "devices.json", j);
  try {
    Registry::load_dir(dir);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("units") != std::string::npos);
  }
}

TEST_CASE("loader rejects malformed JSON and missing files") {
  const auto dir = nbtest::scratch_data("garbage");
  std::ofstream(dir / "chips_accelerators.json") << "{ not json";
  CHECK_THROWS_AS(Registry::load_dir(dir), ParseError);
  std::filesystem::remove(dir / "chips_accelerators.json");
  CHECK_THROWS_AS(Registry::load_dir(dir), Error);
}

TEST_CASE("loader rejects dangling device references") {
  const auto dir = nbtest::scratch_data("dangle");
  auto j = nbtest::read_json(dir / "technologies.json");
  j["combinations"][0]["synapse_device"] = "NoSuchDevice";
  nbtest::write_json(dir / "technologies.json", j);
  CHECK_THROWS_AS(Registry::load_dir(dir), ValidationError);
}

TEST_CASE("export round-trips through the loader") {
  const Registry& r = shipped();
  const auto dir = std::filesystem::temp_directory_path() / "neurobench_export";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  r.export_to(dir);
  const Registry back = Registry::load_dir(dir);
  CHECK(back.serialize() == r.serialize());
}

TEST_CASE("serialize is deterministic") {
  CHECK(shipped().serialize() == Registry::load_default().serialize());
}

TEST_CASE("concurrent evaluation matches serial evaluation") {
  const Registry& r = shipped();
  const auto techs = r.enumerate_technologies();
  std::vector<std::array<double, 12>> serial;
  for (const auto& t : techs) serial.push_back(bench_element(r, t).columns());

  std::vector<std::array<double, 12>> par(techs.size());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < techs.size(); i += 4) par[i] = bench_element(r, techs[i]).columns();
    });
  }
  for (auto& th : pool) th.join();
  CHECK(par == serial);
}

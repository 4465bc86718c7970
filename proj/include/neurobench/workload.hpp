#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "neurobench/interconnect.hpp"
#include "neurobench/units.hpp"

namespace neurobench {

struct StageParams {
  std::int64_t n_in = 1;
  std::int64_t n_out = 1;
  std::int64_t s_neu = 1;  // synapses per output neuron
  std::int64_t f_st = 1;   // feature maps, i.e. copies of the core
  double r_a = 1.0;
};

enum class Topology { cross_connect, convolution };

/// Fan-in of the neuron device: a finite f_i, unlimited (spiking), or
/// sequential accumulation (MAC synapses, accelerators).
struct FanIn {
  enum class Kind { limited, unlimited, sequential };
  Kind kind = Kind::limited;
  int value = 2;

  static FanIn limited(int f) { return {Kind::limited, f}; }
  static FanIn unlimited() { return {Kind::unlimited, 0}; }
  static FanIn sequential() { return {Kind::sequential, 1}; }
};

struct FanInPolicy {
  int digital_cmos = 2;
  int analog_cmos = 16;
  int spintronic = 32;

  static FanInPolicy from(const GlobalConstants& c);
  /// SNN: unlimited; MAC: sequential; otherwise the class value.
  [[nodiscard]] FanIn for_technology(const TechnologyId& tech) const;
};

struct Cascade {
  std::int64_t levels = 1;
  std::int64_t extra_neurons = 1;
};

struct StageBench {
  StageParams params;
  Topology topology = Topology::cross_connect;
  Cascade cascade;
  double area = 0.0;    // nm^2, one core
  double delay = 0.0;   // ps
  double energy = 0.0;  // aJ, one core
};

struct WorkloadBench {
  double area = 0.0;    // nm^2
  double delay = 0.0;   // ps
  double energy = 0.0;  // aJ
  double power = 0.0;   // aJ/ps
  double inference_throughput = 0.0;  // inferences per nm^2 per ps
  Schedule schedule = Schedule::parallel;
  std::vector<StageBench> stages;

  [[nodiscard]] double power_watts() const { return units::aj_per_ps_to_w(power); }
  [[nodiscard]] double inferences_per_second() const { return units::s_to_ps(1.0) / delay; }
};

/// `stage_index` is 1-based; spiking networks get r_a = 1/stage_index.
StageParams stage_params(const LayerSpec& layer, int stage_index, bool spiking);

/// Cascading levels and neurons for fan-in `fan_in` over `s_neu` inputs.
Cascade cascade(const FanIn& fan_in, std::int64_t s_neu);

double wire_area(const StageParams& s, const GlobalConstants& c);

/// max(topology area, wire-limited area) for one core.
double core_area(const StageParams& s, Topology topology, const ElementBench& elem,
                 const FanIn& fan_in, const GlobalConstants& c);

struct StageTimeEnergy {
  double delay = 0.0;
  double energy = 0.0;
};

StageTimeEnergy stage_time_energy(const StageParams& s, const ElementBench& elem,
                                  const FanIn& fan_in);

WorkloadBench aggregate(std::vector<StageBench> stages, Schedule schedule);

/// Maps every layer of `spec` and aggregates. Synapse timing includes the
/// core interconnect and neuron timing the chip interconnect.
WorkloadBench run_workload(const WorkloadSpec& spec, const ElementBench& elem, const FanIn& fan_in,
                           bool spiking, Schedule schedule, const GlobalConstants& c);

/// Bottoms-up: element of `tech` on its default (or the given) schedule.
WorkloadBench bench_workload(const Registry& reg, const WorkloadSpec& spec,
                             const TechnologyId& tech,
                             std::optional<Schedule> schedule = std::nullopt);

/// Sum over stages of s_neu * n_out * f_st.
std::int64_t total_synaptic_ops(const WorkloadSpec& spec);

}  // namespace neurobench

#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "neurobench/ade.hpp"

namespace neurobench {

// ---------------------------------------------------------------------------
// Global constants
// ---------------------------------------------------------------------------

/// Per-width transistor parameters. The CMOS set lives in GlobalConstants; a
/// primitive family (e.g. TFET) may override it.
struct TransistorParams {
  double cap_per_width = 0.0;          // F/m
  double on_current_per_width = 0.0;   // A/m
  double off_current_per_width = 0.0;  // A/m
  double linear_transconductance = 0.0;  // S, one minimum digital transistor
  double on_resistance = 0.0;            // Ohm, one minimum digital transistor

  bool operator==(const TransistorParams&) const = default;
};

/// Process, circuit and architecture constants. Widths and the wire pitch are
/// stored as multiples of the feature size so that overriding F rescales them;
/// the `*_nm()` accessors give canonical lengths.
struct GlobalConstants {
  double feature_size = 15.0;  // nm
  std::optional<double> min_ic_length_F;  // defaults to 20 F
  int bits_per_synapse = 8;
  int levels_per_analog_synapse = 64;
  double digital_width_F = 4.0;
  double analog_width_F = 16.0;

  TransistorParams transistor;
  double saturation_voltage = 0.3;
  double supply_voltage = 0.8;
  double spintronic_supply_voltage = 0.1;

  double ic_cap_per_length = 0.5e-9;   // F/m, already carries the empirical x5
  double ic_res_per_length = 2.2e9;    // Ohm/m
  double min_ic_resistance = 667.0;    // Ohm
  std::optional<double> load_capacitance;  // F; defaults to one digital gate

  double sense_voltage = 0.4;
  std::array<double, 4> sa_widths_F{4.0, 4.0, 6.5, 5.0};  // p, n, iso, en
  double vsa_sense_voltage = 0.1;
  double vsa_read_voltage = 0.5;
  double analog_row_voltage = 0.65;
  double analog_read_pulse = 1000.0;  // ps
  std::array<double, 3> ota_widths_F{10.0, 5.0, 10.0};  // in, up, out

  std::optional<double> neuron_drive_current;  // A, global override

  double cnn_synapse_factor = 4.0;
  double cnn_settling_factor = 5.0;
  double cnn_max_weight = 0.23;
  double cnn_weight_sum = 1.26;

  double spike_duration_factor = 3.0;
  double spike_spacing_factor = 3.0;
  double spikes_to_fire = 10.0;
  double sync_periods = 30.0;

  double overhead_synapse = 2.0;
  double overhead_neuron = 2.0;
  double overhead_core = 2.0;
  double overhead_chip = 2.0;

  int nominal_cores = 64;
  int nominal_neurons_per_core = 256;
  int nominal_synapses_per_neuron = 256;
  double wire_pitch_F = 8.0;

  int fan_in_digital_cmos = 2;
  int fan_in_analog_cmos = 16;
  int fan_in_spintronic = 32;

  double topsdown_neuron_area_share = 0.05;
  double accelerator_element_area_share = 0.10;

  [[nodiscard]] double min_ic_length_nm() const { return min_ic_length_F.value_or(20.0) * feature_size; }
  [[nodiscard]] double digital_width_nm() const { return digital_width_F * feature_size; }
  [[nodiscard]] double analog_width_nm() const { return analog_width_F * feature_size; }
  [[nodiscard]] double wire_pitch_nm() const { return wire_pitch_F * feature_size; }
  [[nodiscard]] double sa_width_nm(std::size_t i) const { return sa_widths_F.at(i) * feature_size; }
  [[nodiscard]] double ota_width_nm(std::size_t i) const { return ota_widths_F.at(i) * feature_size; }

  /// C_ic = c_ic * l_ic, in F.
  [[nodiscard]] double min_ic_capacitance() const;
  /// Input capacitance of the receiving gate, in F.
  [[nodiscard]] double load_capacitance_F() const;
};

// ---------------------------------------------------------------------------
// Circuit primitives
// ---------------------------------------------------------------------------

enum class Primitive { inv, inv1, inv4, nand2, reg, state, add1, add, ram };

inline constexpr std::array<Primitive, 9> kAllPrimitives{
    Primitive::inv, Primitive::inv1, Primitive::inv4, Primitive::nand2, Primitive::reg,
    Primitive::state, Primitive::add1, Primitive::add, Primitive::ram};

std::string_view to_string(Primitive p);
Primitive primitive_from_string(std::string_view name);

/// ADE values of the standard cells of one technology family.
struct CircuitPrimitiveTable {
  std::string family;
  std::map<Primitive, AdeTriple> entries;
  std::optional<TransistorParams> transistor;

  /// Throws IncomputableError naming the family and primitive when absent.
  [[nodiscard]] const AdeTriple& at(Primitive p) const;
  /// RAM bit; falls back to the register bit when the table has no entry.
  [[nodiscard]] const AdeTriple& ram() const;
  [[nodiscard]] const TransistorParams& transistor_or(const GlobalConstants& c) const {
    return transistor ? *transistor : c.transistor;
  }
};

// ---------------------------------------------------------------------------
// Devices
// ---------------------------------------------------------------------------

enum class DeviceClass { transistor, ferroelectric, spintronic, resistive };

std::string_view to_string(DeviceClass c);

struct DeviceRecord {
  std::string name;
  DeviceClass device_class = DeviceClass::transistor;
  double area_int = 0.0;    // nm^2
  double delay_int = 0.0;   // ps
  double delay_ic = 0.0;    // ps
  double energy_int = 0.0;  // aJ
  double energy_ic = 0.0;   // aJ
  std::optional<double> r_on;   // Ohm
  std::optional<double> r_off;  // Ohm

  [[nodiscard]] AdeTriple intrinsic() const { return {area_int, delay_int, energy_int}; }
};

// ---------------------------------------------------------------------------
// Technologies
// ---------------------------------------------------------------------------

enum class NetworkKind { ANN, CNN, SNN, ONN };

inline constexpr std::array<NetworkKind, 4> kAllKinds{NetworkKind::ANN, NetworkKind::CNN,
                                                      NetworkKind::SNN, NetworkKind::ONN};

std::string_view to_string(NetworkKind k);
/// Label prefix: "ANN", "CNN", "Spi", "Osc".
std::string_view label_prefix(NetworkKind k);
NetworkKind network_kind_from_string(std::string_view s);

enum class ElementFamily {
  digital_sram,
  digital_mac,
  analog_transistor,
  analog_single_device,
  resistive_digital,
  resistive_analog,
};

std::string_view to_string(ElementFamily f);
ElementFamily element_family_from_string(std::string_view s);

enum class FanInClass { digital_cmos, analog_cmos, spintronic, sequential };

std::string_view to_string(FanInClass f);
FanInClass fan_in_class_from_string(std::string_view s);

enum class OscillatorClass { transistor_ring, spintronic, piezo };

std::string_view to_string(OscillatorClass c);
OscillatorClass oscillator_class_from_string(std::string_view s);

/// One neuron/synapse device pairing, shared by the ANN, CNN and SNN labels.
struct Combination {
  std::string code;          // e.g. "DCSRAM"
  std::string table_code;    // the short label used in the label table, e.g. "DiCSRAM"
  std::string neuron_code;   // "DC"
  std::string synapse_code;  // "SRAM"
  std::string neuron_device;
  std::string synapse_device;
  ElementFamily family = ElementFamily::digital_sram;
  std::string primitives;  // circuit-primitive family name
  FanInClass fan_in = FanInClass::digital_cmos;
  std::vector<NetworkKind> kinds;
  std::vector<std::string> aliases;  // alternative full labels
  std::optional<double> neuron_drive_current;  // A
};

struct OscillatorSpec {
  OscillatorClass oscillator_class = OscillatorClass::transistor_ring;
  std::string base;    // combination code supplying the ANN element
  std::string device;  // device whose intrinsics set the oscillator power
};

/// A fully-labelled technology, e.g. "CNNAnCAnC" or "OscME".
struct TechnologyId {
  NetworkKind kind = NetworkKind::ANN;
  std::string label;
  std::string neuron_code;
  std::string synapse_code;
  std::string neuron_device;
  std::string synapse_device;
  std::string combination;  // element combination code (ONN: the base)
  ElementFamily family = ElementFamily::digital_sram;
  std::string primitives;
  FanInClass fan_in = FanInClass::digital_cmos;
  std::optional<OscillatorSpec> oscillator;
  std::optional<double> neuron_drive_current;
  std::vector<std::string> aliases;
};

// ---------------------------------------------------------------------------
// Chips
// ---------------------------------------------------------------------------

enum class ChipKind { neuromorphic, accelerator };

std::string_view to_string(ChipKind k);

enum class ChipField { area, power, throughput, energy_per_event, fire_rate, activity, clock };

inline constexpr std::array<ChipField, 7> kAllChipFields{
    ChipField::area,     ChipField::power,    ChipField::throughput, ChipField::energy_per_event,
    ChipField::fire_rate, ChipField::activity, ChipField::clock};

std::string_view to_string(ChipField f);
ChipField chip_field_from_string(std::string_view s);

/// Published figures of one fabricated chip. Absent values stay std::nullopt.
/// Values are canonical: nm^2, aJ/ps, events/ps, aJ, 1/ps.
struct ChipRecord {
  std::string name;
  ChipKind kind = ChipKind::neuromorphic;
  std::string affiliation;
  int year = 0;
  int cores = 1;
  int neurons_per_core = 1;
  int synapses_per_neuron = 1;
  std::optional<double> area;
  std::optional<double> power;
  std::optional<double> throughput;
  std::optional<double> energy_per_event;
  std::optional<double> fire_rate;
  std::optional<double> activity;
  std::optional<double> clock;
  std::optional<double> process_node;  // nm
  std::optional<double> voltage;       // V
  std::optional<std::string> memory;   // as published, e.g. "32M"
  std::set<ChipField> derived;         // values the source itself derived
  std::string references;
  std::map<std::string, std::string> unit_overrides;  // per-record units block

  [[nodiscard]] const std::optional<double>& get(ChipField f) const;
  std::optional<double>& get(ChipField f);
  [[nodiscard]] double total_synapses() const {
    return static_cast<double>(cores) * neurons_per_core * synapses_per_neuron;
  }
};

// ---------------------------------------------------------------------------
// Workloads
// ---------------------------------------------------------------------------

enum class LayerKind { fully_connected, convolution };
enum class Padding { valid, same };

struct FullyConnected {
  int inputs = 1;
  int outputs = 1;
};

struct Convolution {
  int image_w = 1;
  int image_h = 1;
  int kernel = 1;
  int in_channels = 1;
  int feature_maps = 1;
  int stride = 1;
  Padding padding = Padding::valid;
};

struct LayerSpec {
  LayerKind kind = LayerKind::fully_connected;
  std::string name;
  FullyConnected fc;
  Convolution conv;
};

struct WorkloadSpec {
  std::string name;
  std::string description;
  bool reconstructed = false;  // layer dimensions rebuilt from the original network papers
  std::vector<LayerSpec> layers;
};

enum class Schedule { parallel, time_multiplexed };

std::string_view to_string(Schedule s);
Schedule schedule_from_string(std::string_view s);

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct DatasetPaths {
  std::filesystem::path constants;
  std::filesystem::path circuit_primitives;
  std::filesystem::path devices;
  std::filesystem::path technologies;
  std::filesystem::path chips_neuromorphic;
  std::filesystem::path chips_accelerators;
  std::filesystem::path workloads;

  static DatasetPaths in_directory(const std::filesystem::path& dir);
};

/// Directory holding the shipped datasets: $NEUROBENCH_DATA_DIR when set,
/// otherwise the build-time default.
std::filesystem::path default_data_dir();

/// Immutable, validated view of every dataset. Safe to share across threads.
class Registry {
 public:
  static Registry load(const DatasetPaths& paths);
  static Registry load_dir(const std::filesystem::path& dir) {
    return load(DatasetPaths::in_directory(dir));
  }
  static Registry load_default() { return load_dir(default_data_dir()); }

  [[nodiscard]] const GlobalConstants& constants() const { return constants_; }
  [[nodiscard]] const CircuitPrimitiveTable& primitives(std::string_view family) const;
  [[nodiscard]] const std::vector<CircuitPrimitiveTable>& primitive_tables() const {
    return primitive_tables_;
  }

  [[nodiscard]] const DeviceRecord& lookup_device(std::string_view name) const;
  [[nodiscard]] const std::vector<DeviceRecord>& devices() const { return devices_; }

  [[nodiscard]] const std::vector<Combination>& combinations() const { return combinations_; }
  [[nodiscard]] const Combination& combination(std::string_view code) const;
  /// Technologies in table order (all ANN, then CNN, SNN, ONN); optional kind filter.
  [[nodiscard]] std::vector<TechnologyId> enumerate_technologies(
      std::optional<NetworkKind> kind = std::nullopt) const;
  /// Resolves a label or any of its aliases.
  [[nodiscard]] const TechnologyId& technology(std::string_view label) const;

  [[nodiscard]] const std::vector<ChipRecord>& chips() const { return chips_; }
  [[nodiscard]] const ChipRecord& chip(std::string_view name) const;

  [[nodiscard]] const std::vector<WorkloadSpec>& workloads() const { return workloads_; }
  [[nodiscard]] const WorkloadSpec& workload(std::string_view name) const;
  /// Default schedule for a technology (MAC synapses time-multiplex).
  [[nodiscard]] Schedule default_schedule(const TechnologyId& tech) const;
  [[nodiscard]] Schedule topsdown_schedule() const { return topsdown_schedule_; }

  /// Canonical JSON of the whole registry (canonical units, fixed key order).
  [[nodiscard]] std::string serialize() const;
  /// Writes the seven dataset files into `dir`, in the units they were read with.
  void export_to(const std::filesystem::path& dir) const;

 private:
  Registry() = default;
  void validate() const;

  GlobalConstants constants_;
  std::vector<CircuitPrimitiveTable> primitive_tables_;
  std::vector<DeviceRecord> devices_;
  std::vector<Combination> combinations_;
  std::vector<OscillatorSpec> oscillator_specs_;
  std::vector<TechnologyId> technologies_;
  std::vector<ChipRecord> chips_;
  std::vector<WorkloadSpec> workloads_;
  std::map<std::string, Schedule> default_schedules_;
  Schedule topsdown_schedule_ = Schedule::time_multiplexed;

  // unit blocks as read, keyed by file stem; reused on export
  std::map<std::string, std::map<std::string, std::string>> unit_blocks_;
  // raw oscillator entries, for export
  struct OscillatorEntry {
    std::string label;
    OscillatorSpec spec;
    std::string primitives;
    FanInClass fan_in = FanInClass::analog_cmos;
    std::vector<std::string> aliases;
  };
  std::vector<OscillatorEntry> oscillator_entries_;
  std::string primitives_note_;

  friend class RegistryIo;
};

}  // namespace neurobench

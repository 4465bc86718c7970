#include "neurobench/registry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <utility>
#include <variant>

#include "json.hpp"

#include "neurobench/error.hpp"
#include "neurobench/units.hpp"

#ifndef NEUROBENCH_DEFAULT_DATA_DIR
#define NEUROBENCH_DEFAULT_DATA_DIR "data"
#endif

namespace neurobench {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;
using units::Category;

// ---------------------------------------------------------------------------
// enum <-> string
// ---------------------------------------------------------------------------

namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::array<std::pair<E, std::string_view>, N>& table,
             std::string_view what) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  throw ParseError("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

template <typename E, std::size_t N>
std::string_view enum_name(E e, const std::array<std::pair<E, std::string_view>, N>& table) {
  for (const auto& [v, name] : table) {
    if (v == e) return name;
  }
  return "?";
}

constexpr std::array<std::pair<Primitive, std::string_view>, 9> kPrimitiveNames{{
    {Primitive::inv, "inv"},
    {Primitive::inv1, "inv1"},
    {Primitive::inv4, "inv4"},
    {Primitive::nand2, "nan"},
    {Primitive::reg, "reg"},
    {Primitive::state, "se"},
    {Primitive::add1, "add1"},
    {Primitive::add, "add"},
    {Primitive::ram, "ram"},
}};

constexpr std::array<std::pair<DeviceClass, std::string_view>, 4> kDeviceClassNames{{
    {DeviceClass::transistor, "transistor"},
    {DeviceClass::ferroelectric, "ferroelectric"},
    {DeviceClass::spintronic, "spintronic"},
    {DeviceClass::resistive, "resistive"},
}};

constexpr std::array<std::pair<NetworkKind, std::string_view>, 4> kKindNames{{
    {NetworkKind::ANN, "ANN"},
    {NetworkKind::CNN, "CNN"},
    {NetworkKind::SNN, "SNN"},
    {NetworkKind::ONN, "ONN"},
}};

constexpr std::array<std::pair<ElementFamily, std::string_view>, 6> kFamilyNames{{
    {ElementFamily::digital_sram, "digital_sram"},
    {ElementFamily::digital_mac, "digital_mac"},
    {ElementFamily::analog_transistor, "analog_transistor"},
    {ElementFamily::analog_single_device, "analog_single_device"},
    {ElementFamily::resistive_digital, "resistive_digital"},
    {ElementFamily::resistive_analog, "resistive_analog"},
}};

constexpr std::array<std::pair<FanInClass, std::string_view>, 4> kFanInNames{{
    {FanInClass::digital_cmos, "digital_cmos"},
    {FanInClass::analog_cmos, "analog_cmos"},
    {FanInClass::spintronic, "spintronic"},
    {FanInClass::sequential, "sequential"},
}};

constexpr std::array<std::pair<OscillatorClass, std::string_view>, 3> kOscNames{{
    {OscillatorClass::transistor_ring, "transistor_ring"},
    {OscillatorClass::spintronic, "spintronic"},
    {OscillatorClass::piezo, "piezo"},
}};

constexpr std::array<std::pair<ChipKind, std::string_view>, 2> kChipKindNames{{
    {ChipKind::neuromorphic, "neuromorphic"},
    {ChipKind::accelerator, "accelerator"},
}};

constexpr std::array<std::pair<ChipField, std::string_view>, 7> kChipFieldNames{{
    {ChipField::area, "area"},
    {ChipField::power, "power"},
    {ChipField::throughput, "throughput"},
    {ChipField::energy_per_event, "energy_per_event"},
    {ChipField::fire_rate, "fire_rate"},
    {ChipField::activity, "activity"},
    {ChipField::clock, "clock"},
}};

constexpr std::array<std::pair<Schedule, std::string_view>, 2> kScheduleNames{{
    {Schedule::parallel, "parallel"},
    {Schedule::time_multiplexed, "time_multiplexed"},
}};

}  // namespace

std::string_view to_string(Primitive p) { return enum_name(p, kPrimitiveNames); }
Primitive primitive_from_string(std::string_view s) {
  return parse_enum(s, kPrimitiveNames, "circuit primitive");
}
std::string_view to_string(DeviceClass c) { return enum_name(c, kDeviceClassNames); }
std::string_view to_string(NetworkKind k) { return enum_name(k, kKindNames); }
std::string_view label_prefix(NetworkKind k) {
  switch (k) {
    case NetworkKind::ANN: return "ANN";
    case NetworkKind::CNN: return "CNN";
    case NetworkKind::SNN: return "Spi";
    case NetworkKind::ONN: return "Osc";
  }
  return "?";
}
NetworkKind network_kind_from_string(std::string_view s) {
  if (s == "Spi") return NetworkKind::SNN;
  if (s == "Osc") return NetworkKind::ONN;
  return parse_enum(s, kKindNames, "network kind");
}
std::string_view to_string(ElementFamily f) { return enum_name(f, kFamilyNames); }
ElementFamily element_family_from_string(std::string_view s) {
  return parse_enum(s, kFamilyNames, "element family");
}
std::string_view to_string(FanInClass f) { return enum_name(f, kFanInNames); }
FanInClass fan_in_class_from_string(std::string_view s) {
  return parse_enum(s, kFanInNames, "fan-in class");
}
std::string_view to_string(OscillatorClass c) { return enum_name(c, kOscNames); }
OscillatorClass oscillator_class_from_string(std::string_view s) {
  return parse_enum(s, kOscNames, "oscillator class");
}
std::string_view to_string(ChipKind k) { return enum_name(k, kChipKindNames); }
std::string_view to_string(ChipField f) { return enum_name(f, kChipFieldNames); }
ChipField chip_field_from_string(std::string_view s) {
  return parse_enum(s, kChipFieldNames, "chip field");
}
std::string_view to_string(Schedule s) { return enum_name(s, kScheduleNames); }
Schedule schedule_from_string(std::string_view s) {
  if (s == "tmux") return Schedule::time_multiplexed;
  return parse_enum(s, kScheduleNames, "schedule");
}

// ---------------------------------------------------------------------------
// small accessors
// ---------------------------------------------------------------------------

double GlobalConstants::min_ic_capacitance() const {
  return ic_cap_per_length * units::nm_to_m(min_ic_length_nm());
}

double GlobalConstants::load_capacitance_F() const {
  if (load_capacitance) return *load_capacitance;
  return transistor.cap_per_width * units::nm_to_m(digital_width_nm());
}

const AdeTriple& CircuitPrimitiveTable::at(Primitive p) const {
  auto it = entries.find(p);
  if (it == entries.end()) {
    throw IncomputableError("primitive table " + family + " has no entry '" +
                            std::string(to_string(p)) + "'");
  }
  return it->second;
}

const AdeTriple& CircuitPrimitiveTable::ram() const {
  auto it = entries.find(Primitive::ram);
  return it != entries.end() ? it->second : at(Primitive::reg);
}

const std::optional<double>& ChipRecord::get(ChipField f) const {
  switch (f) {
    case ChipField::area: return area;
    case ChipField::power: return power;
    case ChipField::throughput: return throughput;
    case ChipField::energy_per_event: return energy_per_event;
    case ChipField::fire_rate: return fire_rate;
    case ChipField::activity: return activity;
    case ChipField::clock: return clock;
  }
  return area;
}

std::optional<double>& ChipRecord::get(ChipField f) {
  return const_cast<std::optional<double>&>(std::as_const(*this).get(f));
}

DatasetPaths DatasetPaths::in_directory(const std::filesystem::path& dir) {
  return {dir / "constants.json",          dir / "circuit_primitives.json",
          dir / "devices.json",            dir / "technologies.json",
          dir / "chips_neuromorphic.json", dir / "chips_accelerators.json",
          dir / "workloads.json"};
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("NEUROBENCH_DATA_DIR"); env && *env) return env;
  return NEUROBENCH_DEFAULT_DATA_DIR;
}

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

namespace {

using UnitBlock = std::map<std::string, std::string>;

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

UnitBlock read_units(const json& doc, const std::string& file) {
  if (!doc.is_object() || !doc.contains("units") || !doc["units"].is_object()) {
    throw ParseError(file + ": missing units block");
  }
  UnitBlock block;
  for (const auto& [key, value] : doc["units"].items()) {
    units::category_from_key(key);
    if (!value.is_string()) throw ParseError(file + ": unit for " + key + " must be a string");
    units::to_canonical(units::category_from_key(key), value.get<std::string>());
    block[key] = value.get<std::string>();
  }
  return block;
}

double factor(const UnitBlock& block, Category cat, const std::string& where) {
  auto it = block.find(std::string(units::category_key(cat)));
  if (it == block.end()) {
    throw ParseError(where + ": units block has no '" + std::string(units::category_key(cat)) +
                     "' entry");
  }
  return units::to_canonical(cat, it->second);
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing field " + key);
  const auto& v = obj[key];
  if (!v.is_number()) throw ParseError(where + ": field " + key + " must be a number");
  return v.get<double>();
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& where) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  if (!obj[key].is_number()) throw ParseError(where + ": field " + key + " must be a number");
  return obj[key].get<double>();
}

int integer(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(where + ": missing field " + key);
  const auto& v = obj[key];
  if (!v.is_number_integer()) throw ParseError(where + ": field " + key + " must be an integer");
  return v.get<int>();
}

std::string string(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw ParseError(where + ": missing string field " + key);
  }
  return obj[key].get<std::string>();
}

std::vector<std::string> string_list(const json& obj, const std::string& key,
                                     const std::string& where) {
  std::vector<std::string> out;
  if (!obj.contains(key)) return out;
  if (!obj[key].is_array()) throw ParseError(where + ": field " + key + " must be a list");
  for (const auto& v : obj[key]) {
    if (!v.is_string()) throw ParseError(where + ": field " + key + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// ---- constants descriptor table ----

using ConstMember = std::variant<double GlobalConstants::*, int GlobalConstants::*,
                                 std::optional<double> GlobalConstants::*,
                                 double TransistorParams::*>;

struct ConstantField {
  const char* key;
  std::optional<Category> category;  // nullopt: dimensionless
  ConstMember member;
  bool required = true;
};

const std::vector<ConstantField>& constant_fields() {
  using G = GlobalConstants;
  using T = TransistorParams;
  static const std::vector<ConstantField> kFields{
      {"feature_size", Category::length, &G::feature_size},
      {"min_ic_length_F", std::nullopt, &G::min_ic_length_F, false},
      {"bits_per_synapse", std::nullopt, &G::bits_per_synapse},
      {"levels_per_analog_synapse", std::nullopt, &G::levels_per_analog_synapse},
      {"digital_width_F", std::nullopt, &G::digital_width_F},
      {"analog_width_F", std::nullopt, &G::analog_width_F},
      {"transistor_cap_per_width", Category::capacitance_per_length, &T::cap_per_width},
      {"on_current_per_width", Category::current_per_width, &T::on_current_per_width},
      {"off_current_per_width", Category::current_per_width, &T::off_current_per_width},
      {"linear_transconductance", Category::conductance, &T::linear_transconductance},
      {"on_resistance", Category::resistance, &T::on_resistance},
      {"saturation_voltage", Category::voltage, &G::saturation_voltage},
      {"supply_voltage", Category::voltage, &G::supply_voltage},
      {"spintronic_supply_voltage", Category::voltage, &G::spintronic_supply_voltage},
      {"ic_cap_per_length", Category::capacitance_per_length, &G::ic_cap_per_length},
      {"ic_res_per_length", Category::resistance_per_length, &G::ic_res_per_length},
      {"min_ic_resistance", Category::resistance, &G::min_ic_resistance},
      {"load_capacitance", Category::capacitance, &G::load_capacitance, false},
      {"sense_voltage", Category::voltage, &G::sense_voltage},
      {"vsa_sense_voltage", Category::voltage, &G::vsa_sense_voltage},
      {"vsa_read_voltage", Category::voltage, &G::vsa_read_voltage},
      {"analog_row_voltage", Category::voltage, &G::analog_row_voltage},
      {"analog_read_pulse", Category::time, &G::analog_read_pulse},
      {"neuron_drive_current", Category::current, &G::neuron_drive_current, false},
      {"cnn_synapse_factor", std::nullopt, &G::cnn_synapse_factor},
      {"cnn_settling_factor", std::nullopt, &G::cnn_settling_factor},
      {"cnn_max_weight", std::nullopt, &G::cnn_max_weight},
      {"cnn_weight_sum", std::nullopt, &G::cnn_weight_sum},
      {"spike_duration_factor", std::nullopt, &G::spike_duration_factor},
      {"spike_spacing_factor", std::nullopt, &G::spike_spacing_factor},
      {"spikes_to_fire", std::nullopt, &G::spikes_to_fire},
      {"sync_periods", std::nullopt, &G::sync_periods},
      {"overhead_synapse", std::nullopt, &G::overhead_synapse},
      {"overhead_neuron", std::nullopt, &G::overhead_neuron},
      {"overhead_core", std::nullopt, &G::overhead_core},
      {"overhead_chip", std::nullopt, &G::overhead_chip},
      {"nominal_cores", std::nullopt, &G::nominal_cores},
      {"nominal_neurons_per_core", std::nullopt, &G::nominal_neurons_per_core},
      {"nominal_synapses_per_neuron", std::nullopt, &G::nominal_synapses_per_neuron},
      {"wire_pitch_F", std::nullopt, &G::wire_pitch_F},
      {"fan_in_digital_cmos", std::nullopt, &G::fan_in_digital_cmos},
      {"fan_in_analog_cmos", std::nullopt, &G::fan_in_analog_cmos},
      {"fan_in_spintronic", std::nullopt, &G::fan_in_spintronic},
      {"topsdown_neuron_area_share", std::nullopt, &G::topsdown_neuron_area_share},
      {"accelerator_element_area_share", std::nullopt, &G::accelerator_element_area_share},
  };
  return kFields;
}

struct ArrayField {
  const char* key;
  std::size_t size;
  double* (*data)(GlobalConstants&);
};

const std::array<ArrayField, 2>& array_fields() {
  static const std::array<ArrayField, 2> kArrays{{
      {"sa_widths_F", 4, [](GlobalConstants& c) { return c.sa_widths_F.data(); }},
      {"ota_widths_F", 3, [](GlobalConstants& c) { return c.ota_widths_F.data(); }},
  }};
  return kArrays;
}

// Reads one constant into `c`. Returns false when the key is absent.
bool read_constant(const ConstantField& field, const json& obj, const UnitBlock& block,
                   GlobalConstants& c) {
  const std::string key = field.key;
  if (!obj.contains(key) || obj[key].is_null()) return false;
  const std::string where = "constants.json";
  const double scale = field.category ? factor(block, *field.category, where) : 1.0;
  std::visit(
      [&](auto member) {
        using M = decltype(member);
        if constexpr (std::is_same_v<M, int GlobalConstants::*>) {
          c.*member = integer(obj, key, where);
        } else if constexpr (std::is_same_v<M, double TransistorParams::*>) {
          c.transistor.*member = number(obj, key, where) * scale;
        } else {
          c.*member = number(obj, key, where) * scale;
        }
      },
      field.member);
  return true;
}

ojson write_constant(const ConstantField& field, const GlobalConstants& c, double scale) {
  return std::visit(
      [&](auto member) -> ojson {
        using M = decltype(member);
        if constexpr (std::is_same_v<M, int GlobalConstants::*>) {
          return c.*member;
        } else if constexpr (std::is_same_v<M, double TransistorParams::*>) {
          return c.transistor.*member / scale;
        } else if constexpr (std::is_same_v<M, std::optional<double> GlobalConstants::*>) {
          if (!(c.*member)) return nullptr;
          return *(c.*member) / scale;
        } else {
          return c.*member / scale;
        }
      },
      field.member);
}

double lookup_scale(const UnitBlock& block, Category cat) {
  auto it = block.find(std::string(units::category_key(cat)));
  return it == block.end() ? 1.0 : units::to_canonical(cat, it->second);
}

ojson units_json(const UnitBlock& block) {
  ojson out = ojson::object();
  for (const auto& [k, v] : block) out[k] = v;
  return out;
}

TransistorParams read_transistor(const json& obj, const UnitBlock& block,
                                 const std::string& where) {
  TransistorParams t;
  t.cap_per_width =
      number(obj, "cap_per_width", where) * factor(block, Category::capacitance_per_length, where);
  t.on_current_per_width = number(obj, "on_current_per_width", where) *
                           factor(block, Category::current_per_width, where);
  t.off_current_per_width = number(obj, "off_current_per_width", where) *
                            factor(block, Category::current_per_width, where);
  t.linear_transconductance =
      number(obj, "linear_transconductance", where) * factor(block, Category::conductance, where);
  t.on_resistance =
      number(obj, "on_resistance", where) * factor(block, Category::resistance, where);
  return t;
}

ojson write_transistor(const TransistorParams& t, const UnitBlock& block) {
  ojson o;
  o["cap_per_width"] = t.cap_per_width / lookup_scale(block, Category::capacitance_per_length);
  o["on_current_per_width"] =
      t.on_current_per_width / lookup_scale(block, Category::current_per_width);
  o["off_current_per_width"] =
      t.off_current_per_width / lookup_scale(block, Category::current_per_width);
  o["linear_transconductance"] =
      t.linear_transconductance / lookup_scale(block, Category::conductance);
  o["on_resistance"] = t.on_resistance / lookup_scale(block, Category::resistance);
  return o;
}

// activity is dimensionless
std::optional<Category> chip_field_category(ChipField f) {
  switch (f) {
    case ChipField::area: return Category::area;
    case ChipField::power: return Category::power;
    case ChipField::throughput: return Category::throughput;
    case ChipField::energy_per_event: return Category::energy;
    case ChipField::fire_rate:
    case ChipField::clock: return Category::frequency;
    case ChipField::activity: return std::nullopt;
  }
  return std::nullopt;
}

UnitBlock merged(const UnitBlock& base, const UnitBlock& over) {
  UnitBlock out = base;
  for (const auto& [k, v] : over) out[k] = v;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RegistryIo: the only code that knows the file schemas
// ---------------------------------------------------------------------------

class RegistryIo {
 public:
  static void read_constants(Registry& r, const std::filesystem::path& path);
  static void read_primitives(Registry& r, const std::filesystem::path& path);
  static void read_devices(Registry& r, const std::filesystem::path& path);
  static void read_technologies(Registry& r, const std::filesystem::path& path);
  static void read_chips(Registry& r, const std::filesystem::path& path, ChipKind kind);
  static void read_workloads(Registry& r, const std::filesystem::path& path);
  static void build_technologies(Registry& r);

  static ojson write_constants(const Registry& r, const UnitBlock& block);
  static ojson write_primitives(const Registry& r, const UnitBlock& block);
  static ojson write_devices(const Registry& r, const UnitBlock& block);
  static ojson write_technologies(const Registry& r, const UnitBlock& block);
  static ojson write_chips(const Registry& r, const UnitBlock& block, ChipKind kind);
  static ojson write_workloads(const Registry& r, const UnitBlock& block);
};

void RegistryIo::read_constants(Registry& r, const std::filesystem::path& path) {
  const json doc = read_json(path);
  const UnitBlock block = read_units(doc, "constants.json");
  r.unit_blocks_["constants"] = block;
  if (!doc.contains("constants") || !doc["constants"].is_object()) {
    throw ParseError("constants.json: missing constants object");
  }
  const json& obj = doc["constants"];
  GlobalConstants c;
  for (const auto& field : constant_fields()) {
    if (!read_constant(field, obj, block, c)) {
      if (field.required) throw ValidationError(std::string("missing constant ") + field.key);
      // optional members keep their default (nullopt)
    }
  }
  for (const auto& arr : array_fields()) {
    const std::string key = arr.key;
    if (!obj.contains(key)) throw ValidationError("missing constant " + key);
    const auto& v = obj[key];
    if (!v.is_array() || v.size() != arr.size) {
      throw ParseError("constants.json: " + key + " must be a list of " +
                       std::to_string(arr.size) + " numbers");
    }
    double* out = arr.data(c);
    for (std::size_t i = 0; i < arr.size; ++i) {
      if (!v[i].is_number()) throw ParseError("constants.json: " + key + " must hold numbers");
      out[i] = v[i].get<double>();
    }
  }
  r.constants_ = c;
}

void RegistryIo::read_primitives(Registry& r, const std::filesystem::path& path) {
  const json doc = read_json(path);
  const UnitBlock block = read_units(doc, "circuit_primitives.json");
  r.unit_blocks_["circuit_primitives"] = block;
  if (doc.contains("note") && doc["note"].is_string()) r.primitives_note_ = doc["note"];
  if (!doc.contains("families") || !doc["families"].is_array()) {
    throw ParseError("circuit_primitives.json: missing families list");
  }
  for (const auto& fam : doc["families"]) {
    CircuitPrimitiveTable t;
    t.family = string(fam, "name", "circuit_primitives.json");
    const std::string where = "circuit_primitives.json family " + t.family;
    if (!fam.contains("primitives") || !fam["primitives"].is_object()) {
      throw ParseError(where + ": missing primitives object");
    }
    for (const auto& [name, ade] : fam["primitives"].items()) {
      const std::string w = where + " primitive " + name;
      t.entries[primitive_from_string(name)] = {
          number(ade, "area", w) * factor(block, Category::area, w),
          number(ade, "delay", w) * factor(block, Category::time, w),
          number(ade, "energy", w) * factor(block, Category::energy, w)};
    }
    if (fam.contains("transistor") && !fam["transistor"].is_null()) {
      t.transistor = read_transistor(fam["transistor"], block, where);
    }
    r.primitive_tables_.push_back(std::move(t));
  }
}

void RegistryIo::read_devices(Registry& r, const std::filesystem::path& path) {
  const json doc = read_json(path);
  const UnitBlock block = read_units(doc, "devices.json");
  r.unit_blocks_["devices"] = block;
  if (!doc.contains("devices") || !doc["devices"].is_array()) {
    throw ParseError("devices.json: missing devices list");
  }
  for (const auto& d : doc["devices"]) {
    DeviceRecord rec;
    rec.name = string(d, "name", "devices.json");
    const std::string where = "device " + rec.name;
    rec.device_class = parse_enum(string(d, "class", where), kDeviceClassNames, "device class");
    rec.area_int = number(d, "area_int", where) * factor(block, Category::area, where);
    rec.delay_int = number(d, "delay_int", where) * factor(block, Category::time, where);
    rec.delay_ic = number(d, "delay_ic", where) * factor(block, Category::time, where);
    rec.energy_int = number(d, "energy_int", where) * factor(block, Category::energy, where);
    rec.energy_ic = number(d, "energy_ic", where) * factor(block, Category::energy, where);
    if (auto v = optional_number(d, "r_on", where)) {
      rec.r_on = *v * factor(block, Category::resistance, where);
    }
    if (auto v = optional_number(d, "r_off", where)) {
      rec.r_off = *v * factor(block, Category::resistance, where);
    }
    r.devices_.push_back(std::move(rec));
  }
}

void RegistryIo::read_technologies(Registry& r, const std::filesystem::path& path) {
  const json doc = read_json(path);
  const UnitBlock block = read_units(doc, "technologies.json");
  r.unit_blocks_["technologies"] = block;
  if (!doc.contains("combinations") || !doc["combinations"].is_array()) {
    throw ParseError("technologies.json: missing combinations list");
  }
  for (const auto& c : doc["combinations"]) {
    Combination comb;
    comb.code = string(c, "code", "technologies.json");
    const std::string where = "combination " + comb.code;
    comb.table_code = c.value("table_code", comb.code);
    comb.neuron_code = string(c, "neuron", where);
    comb.synapse_code = string(c, "synapse", where);
    comb.neuron_device = string(c, "neuron_device", where);
    comb.synapse_device = string(c, "synapse_device", where);
    comb.family = element_family_from_string(string(c, "family", where));
    comb.primitives = string(c, "primitives", where);
    comb.fan_in = fan_in_class_from_string(string(c, "fan_in", where));
    for (const auto& k : string_list(c, "kinds", where)) {
      comb.kinds.push_back(network_kind_from_string(k));
    }
    comb.aliases = string_list(c, "aliases", where);
    if (auto v = optional_number(c, "neuron_drive_current", where)) {
      comb.neuron_drive_current = *v * factor(block, Category::current, where);
    }
    r.combinations_.push_back(std::move(comb));
  }
  if (doc.contains("oscillators")) {
    for (const auto& o : doc["oscillators"]) {
      Registry::OscillatorEntry e;
      e.label = string(o, "label", "technologies.json");
      const std::string where = "oscillator " + e.label;
      e.spec.oscillator_class = oscillator_class_from_string(string(o, "class", where));
      e.spec.base = string(o, "base", where);
      e.spec.device = string(o, "device", where);
      e.primitives = string(o, "primitives", where);
      e.fan_in = fan_in_class_from_string(string(o, "fan_in", where));
      e.aliases = string_list(o, "aliases", where);
      r.oscillator_entries_.push_back(std::move(e));
    }
  }
}

void RegistryIo::read_chips(Registry& r, const std::filesystem::path& path, ChipKind kind) {
  const std::string file = path.filename().string();
  const json doc = read_json(path);
  const UnitBlock block = read_units(doc, file);
  r.unit_blocks_[path.stem().string()] = block;
  if (!doc.contains("chips") || !doc["chips"].is_array()) {
    throw ParseError(file + ": missing chips list");
  }
  for (const auto& c : doc["chips"]) {
    ChipRecord rec;
    rec.kind = kind;
    rec.name = string(c, "name", file);
    const std::string where = "chip " + rec.name;
    rec.affiliation = c.value("affiliation", "");
    rec.year = c.value("year", 0);
    rec.cores = integer(c, "cores", where);
    rec.neurons_per_core = integer(c, "neurons_per_core", where);
    rec.synapses_per_neuron = integer(c, "synapses_per_neuron", where);
    if (c.contains("units")) {
      for (const auto& [k, v] : c["units"].items()) {
        units::to_canonical(units::category_from_key(k), v.get<std::string>());
        rec.unit_overrides[k] = v.get<std::string>();
      }
    }
    const UnitBlock local = merged(block, rec.unit_overrides);
    for (ChipField f : kAllChipFields) {
      const std::string key(to_string(f));
      auto v = optional_number(c, key, where);
      if (!v) continue;
      auto cat = chip_field_category(f);
      rec.get(f) = *v * (cat ? factor(local, *cat, where) : 1.0);
    }
    if (auto v = optional_number(c, "process_node", where)) {
      rec.process_node = *v * factor(local, Category::length, where);
    }
    if (auto v = optional_number(c, "voltage", where)) {
      rec.voltage = *v * factor(local, Category::voltage, where);
    }
    if (c.contains("memory") && c["memory"].is_string()) rec.memory = c["memory"];
    for (const auto& name : string_list(c, "derived", where)) {
      rec.derived.insert(chip_field_from_string(name));
    }
    rec.references = c.value("references", "");
    r.chips_.push_back(std::move(rec));
  }
}

void RegistryIo::read_workloads(Registry& r, const std::filesystem::path& path) {
  const json doc = read_json(path);
  const UnitBlock block = read_units(doc, "workloads.json");
  r.unit_blocks_["workloads"] = block;
  if (!doc.contains("workloads") || !doc["workloads"].is_array()) {
    throw ParseError("workloads.json: missing workloads list");
  }
  for (const auto& w : doc["workloads"]) {
    WorkloadSpec spec;
    spec.name = string(w, "name", "workloads.json");
    const std::string where = "workload " + spec.name;
    spec.description = w.value("description", "");
    spec.reconstructed = w.value("reconstructed", false);
    if (!w.contains("layers") || !w["layers"].is_array()) {
      throw ParseError(where + ": missing layers list");
    }
    for (const auto& l : w["layers"]) {
      LayerSpec layer;
      layer.name = l.value("name", "");
      const std::string lw = where + " layer " + layer.name;
      const std::string kind = string(l, "kind", lw);
      if (kind == "fully_connected") {
        layer.kind = LayerKind::fully_connected;
        layer.fc.inputs = integer(l, "inputs", lw);
        layer.fc.outputs = integer(l, "outputs", lw);
      } else if (kind == "convolution") {
        layer.kind = LayerKind::convolution;
        auto& cv = layer.conv;
        cv.image_w = integer(l, "image_w", lw);
        cv.image_h = integer(l, "image_h", lw);
        cv.kernel = integer(l, "kernel", lw);
        cv.in_channels = integer(l, "in_channels", lw);
        cv.feature_maps = integer(l, "feature_maps", lw);
        cv.stride = l.contains("stride") ? integer(l, "stride", lw) : 1;
        const std::string pad = l.value("padding", "valid");
        if (pad == "valid") {
          cv.padding = Padding::valid;
        } else if (pad == "same") {
          cv.padding = Padding::same;
        } else {
          throw ParseError(lw + ": unknown padding '" + pad + "'");
        }
      } else {
        throw ParseError(lw + ": unknown layer kind '" + kind + "'");
      }
      spec.layers.push_back(std::move(layer));
    }
    r.workloads_.push_back(std::move(spec));
  }
  if (doc.contains("default_schedule")) {
    for (const auto& [key, sched] : doc["default_schedule"].items()) {
      if (!sched.is_string()) throw ParseError("workloads.json: schedule for " + key + " must be a string");
      const Schedule s = schedule_from_string(sched.get<std::string>());
      if (key == "topsdown") {
        r.topsdown_schedule_ = s;
        continue;
      }
      bool known = std::any_of(kKindNames.begin(), kKindNames.end(),
                               [&](const auto& e) { return e.second == key; }) ||
                   std::any_of(kFamilyNames.begin(), kFamilyNames.end(),
                               [&](const auto& e) { return e.second == key; });
      if (!known) throw ParseError("workloads.json: default_schedule key '" + key + "' is neither a network kind nor an element family");
      r.default_schedules_[key] = s;
    }
  }
}

void RegistryIo::build_technologies(Registry& r) {
  // Table order: every ANN label, then CNN, SNN, ONN.
  for (NetworkKind kind : {NetworkKind::ANN, NetworkKind::CNN, NetworkKind::SNN}) {
    for (const auto& c : r.combinations_) {
      if (std::find(c.kinds.begin(), c.kinds.end(), kind) == c.kinds.end()) continue;
      TechnologyId t;
      t.kind = kind;
      const std::string prefix(label_prefix(kind));
      t.label = prefix + c.code;
      t.neuron_code = c.neuron_code;
      t.synapse_code = c.synapse_code;
      t.neuron_device = c.neuron_device;
      t.synapse_device = c.synapse_device;
      t.combination = c.code;
      t.family = c.family;
      t.primitives = c.primitives;
      t.fan_in = c.fan_in;
      t.neuron_drive_current = c.neuron_drive_current;
      if (c.table_code != c.code) t.aliases.push_back(prefix + c.table_code);
      for (const auto& a : c.aliases) t.aliases.push_back(prefix + a);
      r.technologies_.push_back(std::move(t));
    }
  }
  for (const auto& e : r.oscillator_entries_) {
    const Combination& base = r.combination(e.spec.base);
    TechnologyId t;
    t.kind = NetworkKind::ONN;
    t.label = e.label;
    t.neuron_code = e.label.substr(3);
    t.synapse_code = t.neuron_code;
    t.neuron_device = e.spec.device;
    t.synapse_device = e.spec.device;
    t.combination = base.code;
    t.family = base.family;
    t.primitives = e.primitives;
    t.fan_in = e.fan_in;
    t.oscillator = e.spec;
    t.aliases = e.aliases;
    r.technologies_.push_back(std::move(t));
  }
}

// ---- writers ----

ojson RegistryIo::write_constants(const Registry& r, const UnitBlock& block) {
  ojson doc;
  doc["units"] = units_json(block);
  ojson obj = ojson::object();
  for (const auto& field : constant_fields()) {
    const double scale = field.category ? lookup_scale(block, *field.category) : 1.0;
    ojson v = write_constant(field, r.constants_, scale);
    if (v.is_null()) continue;
    obj[field.key] = v;
  }
  obj["sa_widths_F"] = r.constants_.sa_widths_F;
  obj["ota_widths_F"] = r.constants_.ota_widths_F;
  doc["constants"] = obj;
  return doc;
}

ojson RegistryIo::write_primitives(const Registry& r, const UnitBlock& block) {
  ojson doc;
  doc["units"] = units_json(block);
  if (!r.primitives_note_.empty()) doc["note"] = r.primitives_note_;
  ojson fams = ojson::array();
  const double ka = lookup_scale(block, Category::area);
  const double kt = lookup_scale(block, Category::time);
  const double ke = lookup_scale(block, Category::energy);
  for (const auto& t : r.primitive_tables_) {
    ojson f;
    f["name"] = t.family;
    ojson prims = ojson::object();
    for (Primitive p : kAllPrimitives) {
      auto it = t.entries.find(p);
      if (it == t.entries.end()) continue;
      prims[std::string(to_string(p))] = {{"area", it->second.area / ka},
                                          {"delay", it->second.delay / kt},
                                          {"energy", it->second.energy / ke}};
    }
    f["primitives"] = prims;
    f["transistor"] = t.transistor ? write_transistor(*t.transistor, block) : ojson(nullptr);
    fams.push_back(f);
  }
  doc["families"] = fams;
  return doc;
}

ojson RegistryIo::write_devices(const Registry& r, const UnitBlock& block) {
  ojson doc;
  doc["units"] = units_json(block);
  const double ka = lookup_scale(block, Category::area);
  const double kt = lookup_scale(block, Category::time);
  const double ke = lookup_scale(block, Category::energy);
  const double kr = lookup_scale(block, Category::resistance);
  ojson list = ojson::array();
  for (const auto& d : r.devices_) {
    ojson o;
    o["name"] = d.name;
    o["class"] = to_string(d.device_class);
    o["area_int"] = d.area_int / ka;
    o["delay_int"] = d.delay_int / kt;
    o["delay_ic"] = d.delay_ic / kt;
    o["energy_int"] = d.energy_int / ke;
    o["energy_ic"] = d.energy_ic / ke;
    o["r_on"] = d.r_on ? ojson(*d.r_on / kr) : ojson(nullptr);
    o["r_off"] = d.r_off ? ojson(*d.r_off / kr) : ojson(nullptr);
    list.push_back(o);
  }
  doc["devices"] = list;
  return doc;
}

ojson RegistryIo::write_technologies(const Registry& r, const UnitBlock& block) {
  ojson doc;
  doc["units"] = units_json(block);
  ojson combs = ojson::array();
  for (const auto& c : r.combinations_) {
    ojson o;
    o["code"] = c.code;
    o["table_code"] = c.table_code;
    o["neuron"] = c.neuron_code;
    o["synapse"] = c.synapse_code;
    o["neuron_device"] = c.neuron_device;
    o["synapse_device"] = c.synapse_device;
    o["family"] = to_string(c.family);
    o["primitives"] = c.primitives;
    o["fan_in"] = to_string(c.fan_in);
    ojson kinds = ojson::array();
    for (auto k : c.kinds) kinds.push_back(to_string(k));
    o["kinds"] = kinds;
    o["aliases"] = c.aliases;
    if (c.neuron_drive_current) {
      o["neuron_drive_current"] = *c.neuron_drive_current / lookup_scale(block, Category::current);
    }
    combs.push_back(o);
  }
  doc["combinations"] = combs;
  ojson oscs = ojson::array();
  for (const auto& e : r.oscillator_entries_) {
    ojson o;
    o["label"] = e.label;
    o["class"] = to_string(e.spec.oscillator_class);
    o["base"] = e.spec.base;
    o["device"] = e.spec.device;
    o["primitives"] = e.primitives;
    o["fan_in"] = to_string(e.fan_in);
    o["aliases"] = e.aliases;
    oscs.push_back(o);
  }
  doc["oscillators"] = oscs;
  return doc;
}

ojson RegistryIo::write_chips(const Registry& r, const UnitBlock& block, ChipKind kind) {
  ojson doc;
  doc["units"] = units_json(block);
  ojson list = ojson::array();
  for (const auto& c : r.chips_) {
    if (c.kind != kind) continue;
    const UnitBlock local = merged(block, c.unit_overrides);
    ojson o;
    o["name"] = c.name;
    o["affiliation"] = c.affiliation;
    o["year"] = c.year;
    o["cores"] = c.cores;
    o["neurons_per_core"] = c.neurons_per_core;
    o["synapses_per_neuron"] = c.synapses_per_neuron;
    if (!c.unit_overrides.empty()) o["units"] = units_json(c.unit_overrides);
    for (ChipField f : kAllChipFields) {
      const auto& v = c.get(f);
      auto cat = chip_field_category(f);
      const bool relevant = f != ChipField::clock || kind == ChipKind::accelerator;
      if (!v && !relevant) continue;
      o[std::string(to_string(f))] =
          v ? ojson(*v / (cat ? lookup_scale(local, *cat) : 1.0)) : ojson(nullptr);
    }
    if (c.memory) o["memory"] = *c.memory;
    o["process_node"] = c.process_node
                            ? ojson(*c.process_node / lookup_scale(local, Category::length))
                            : ojson(nullptr);
    o["voltage"] = c.voltage ? ojson(*c.voltage / lookup_scale(local, Category::voltage))
                             : ojson(nullptr);
    ojson derived = ojson::array();
    for (ChipField f : kAllChipFields) {
      if (c.derived.count(f)) derived.push_back(to_string(f));
    }
    o["derived"] = derived;
    o["references"] = c.references;
    list.push_back(o);
  }
  doc["chips"] = list;
  return doc;
}

ojson RegistryIo::write_workloads(const Registry& r, const UnitBlock& block) {
  ojson doc;
  doc["units"] = units_json(block);
  ojson list = ojson::array();
  for (const auto& w : r.workloads_) {
    ojson o;
    o["name"] = w.name;
    o["description"] = w.description;
    o["reconstructed"] = w.reconstructed;
    ojson layers = ojson::array();
    for (const auto& l : w.layers) {
      ojson lo;
      lo["name"] = l.name;
      if (l.kind == LayerKind::fully_connected) {
        lo["kind"] = "fully_connected";
        lo["inputs"] = l.fc.inputs;
        lo["outputs"] = l.fc.outputs;
      } else {
        lo["kind"] = "convolution";
        lo["image_w"] = l.conv.image_w;
        lo["image_h"] = l.conv.image_h;
        lo["kernel"] = l.conv.kernel;
        lo["in_channels"] = l.conv.in_channels;
        lo["feature_maps"] = l.conv.feature_maps;
        lo["stride"] = l.conv.stride;
        lo["padding"] = l.conv.padding == Padding::valid ? "valid" : "same";
      }
      layers.push_back(lo);
    }
    o["layers"] = layers;
    list.push_back(o);
  }
  doc["workloads"] = list;
  ojson sched = ojson::object();
  for (const auto& [key, s] : r.default_schedules_) sched[key] = to_string(s);
  sched["topsdown"] = to_string(r.topsdown_schedule_);
  doc["default_schedule"] = sched;
  return doc;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

Registry Registry::load(const DatasetPaths& paths) {
  Registry r;
  RegistryIo::read_constants(r, paths.constants);
  RegistryIo::read_primitives(r, paths.circuit_primitives);
  RegistryIo::read_devices(r, paths.devices);
  RegistryIo::read_technologies(r, paths.technologies);
  RegistryIo::read_chips(r, paths.chips_neuromorphic, ChipKind::neuromorphic);
  RegistryIo::read_chips(r, paths.chips_accelerators, ChipKind::accelerator);
  RegistryIo::read_workloads(r, paths.workloads);
  r.validate();
  RegistryIo::build_technologies(r);
  return r;
}

namespace {

void require_positive(double v, const std::string& what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ValidationError(what + " must be positive (got " + std::to_string(v) + ")");
  }
}

}  // namespace

void Registry::validate() const {
  const auto& c = constants_;
  for (const auto& field : constant_fields()) {
    const double v = std::visit(
        [&](auto member) -> double {
          using M = decltype(member);
          if constexpr (std::is_same_v<M, double TransistorParams::*>) {
            return c.transistor.*member;
          } else if constexpr (std::is_same_v<M, std::optional<double> GlobalConstants::*>) {
            return (c.*member).value_or(1.0);
          } else {
            return static_cast<double>(c.*member);
          }
        },
        field.member);
    require_positive(v, std::string("constant ") + field.key);
  }
  for (double w : c.sa_widths_F) require_positive(w, "constant sa_widths_F");
  for (double w : c.ota_widths_F) require_positive(w, "constant ota_widths_F");
  if (c.bits_per_synapse < 1) throw ValidationError("constant bits_per_synapse must be >= 1");
  if (c.topsdown_neuron_area_share >= 1.0) {
    throw ValidationError("constant topsdown_neuron_area_share must be below 1");
  }
  if (c.accelerator_element_area_share > 1.0) {
    throw ValidationError("constant accelerator_element_area_share must not exceed 1");
  }
  const double rl = c.ic_res_per_length * units::nm_to_m(c.min_ic_length_nm());
  if (std::abs(rl - c.min_ic_resistance) > 0.02 * c.min_ic_resistance) {
    throw ValidationError("constants ic_res_per_length x min_ic_length (" + std::to_string(rl) +
                          " Ohm) disagrees with min_ic_resistance (" +
                          std::to_string(c.min_ic_resistance) + " Ohm) by more than 2%");
  }

  std::set<std::string> seen;
  for (const auto& t : primitive_tables_) {
    if (!seen.insert(t.family).second) {
      throw ValidationError("duplicate primitive family " + t.family);
    }
    for (const auto& [p, ade] : t.entries) {
      const std::string w = "primitive " + t.family + "." + std::string(to_string(p));
      require_positive(ade.area, w + " area");
      require_positive(ade.delay, w + " delay");
      require_positive(ade.energy, w + " energy");
    }
    if (t.transistor) {
      require_positive(t.transistor->cap_per_width, t.family + " transistor cap_per_width");
      require_positive(t.transistor->on_current_per_width, t.family + " transistor on_current");
      require_positive(t.transistor->off_current_per_width, t.family + " transistor off_current");
      require_positive(t.transistor->linear_transconductance, t.family + " transistor g_m");
      require_positive(t.transistor->on_resistance, t.family + " transistor on_resistance");
    }
  }

  seen.clear();
  for (const auto& d : devices_) {
    if (!seen.insert(d.name).second) throw ValidationError("duplicate device " + d.name);
    const std::string w = "device " + d.name;
    require_positive(d.area_int, w + " area_int");
    require_positive(d.delay_int, w + " delay_int");
    require_positive(d.delay_ic, w + " delay_ic");
    require_positive(d.energy_int, w + " energy_int");
    require_positive(d.energy_ic, w + " energy_ic");
    if (d.r_on.has_value() != d.r_off.has_value()) {
      throw ValidationError(w + ": r_on and r_off must be given together");
    }
    if (d.r_on) {
      require_positive(*d.r_on, w + " r_on");
      if (*d.r_off < *d.r_on) throw ValidationError(w + ": r_off is below r_on");
    }
  }

  auto has_device = [&](const std::string& n) {
    return std::any_of(devices_.begin(), devices_.end(),
                       [&](const DeviceRecord& d) { return d.name == n; });
  };
  auto has_family = [&](const std::string& n) {
    return std::any_of(primitive_tables_.begin(), primitive_tables_.end(),
                       [&](const CircuitPrimitiveTable& t) { return t.family == n; });
  };

  seen.clear();
  for (const auto& comb : combinations_) {
    const std::string w = "combination " + comb.code;
    if (!seen.insert(comb.code).second) throw ValidationError("duplicate " + w);
    if (!has_device(comb.neuron_device)) {
      throw ValidationError(w + ": neuron_device '" + comb.neuron_device + "' is not a device");
    }
    if (!has_device(comb.synapse_device)) {
      throw ValidationError(w + ": synapse_device '" + comb.synapse_device + "' is not a device");
    }
    if (!has_family(comb.primitives)) {
      throw ValidationError(w + ": primitives '" + comb.primitives + "' is not a family");
    }
    if (comb.kinds.empty()) throw ValidationError(w + ": no network kinds");
    for (auto k : comb.kinds) {
      if (k == NetworkKind::ONN) throw ValidationError(w + ": ONN entries belong in oscillators");
    }
    if (comb.family == ElementFamily::resistive_digital ||
        comb.family == ElementFamily::resistive_analog) {
      const auto& d = lookup_device(comb.synapse_device);
      if (!d.r_on) throw ValidationError(w + ": synapse device " + d.name + " has no r_on/r_off");
    }
    if (comb.neuron_drive_current) require_positive(*comb.neuron_drive_current, w + " I_neu");
  }
  for (const auto& e : oscillator_entries_) {
    const std::string w = "oscillator " + e.label;
    if (e.label.rfind("Osc", 0) != 0) throw ValidationError(w + ": label must start with Osc");
    if (std::none_of(combinations_.begin(), combinations_.end(),
                     [&](const Combination& c) { return c.code == e.spec.base; })) {
      throw ValidationError(w + ": base '" + e.spec.base + "' is not a combination");
    }
    if (!has_device(e.spec.device)) {
      throw ValidationError(w + ": device '" + e.spec.device + "' is not a device");
    }
    if (!has_family(e.primitives)) {
      throw ValidationError(w + ": primitives '" + e.primitives + "' is not a family");
    }
  }

  seen.clear();
  for (const auto& chip : chips_) {
    const std::string w = "chip " + chip.name;
    if (!seen.insert(chip.name).second) throw ValidationError("duplicate " + w);
    if (chip.cores < 1 || chip.neurons_per_core < 1 || chip.synapses_per_neuron < 1) {
      throw ValidationError(w + ": counts must be >= 1");
    }
    for (ChipField f : kAllChipFields) {
      if (const auto& v = chip.get(f)) require_positive(*v, w + " " + std::string(to_string(f)));
    }
    if (chip.activity && *chip.activity > 1.0) {
      throw ValidationError(w + ": activity must lie in (0, 1]");
    }
  }

  seen.clear();
  for (const auto& wl : workloads_) {
    const std::string w = "workload " + wl.name;
    if (!seen.insert(wl.name).second) throw ValidationError("duplicate " + w);
    if (wl.layers.empty()) throw ValidationError(w + ": no layers");
    for (const auto& l : wl.layers) {
      const std::string lw = w + " layer " + l.name;
      if (l.kind == LayerKind::fully_connected) {
        if (l.fc.inputs < 1 || l.fc.outputs < 1) throw ValidationError(lw + ": sizes must be >= 1");
      } else {
        const auto& cv = l.conv;
        if (cv.image_w < 1 || cv.image_h < 1 || cv.kernel < 1 || cv.in_channels < 1 ||
            cv.feature_maps < 1 || cv.stride < 1) {
          throw ValidationError(lw + ": dimensions must be >= 1");
        }
        if (cv.padding == Padding::valid && (cv.kernel > cv.image_w || cv.kernel > cv.image_h)) {
          throw ValidationError(lw + ": kernel exceeds image with valid padding");
        }
      }
    }
  }
}

const CircuitPrimitiveTable& Registry::primitives(std::string_view family) const {
  for (const auto& t : primitive_tables_) {
    if (t.family == family) return t;
  }
  throw UnknownNameError("unknown primitive family '" + std::string(family) + "'");
}

const DeviceRecord& Registry::lookup_device(std::string_view name) const {
  for (const auto& d : devices_) {
    if (d.name == name) return d;
  }
  throw UnknownNameError("unknown device '" + std::string(name) + "'");
}

const Combination& Registry::combination(std::string_view code) const {
  for (const auto& c : combinations_) {
    if (c.code == code) return c;
  }
  throw UnknownNameError("unknown combination '" + std::string(code) + "'");
}

std::vector<TechnologyId> Registry::enumerate_technologies(
    std::optional<NetworkKind> kind) const {
  std::vector<TechnologyId> out;
  for (const auto& t : technologies_) {
    if (!kind || t.kind == *kind) out.push_back(t);
  }
  return out;
}

const TechnologyId& Registry::technology(std::string_view label) const {
  for (const auto& t : technologies_) {
    if (t.label == label) return t;
  }
  for (const auto& t : technologies_) {
    if (std::find(t.aliases.begin(), t.aliases.end(), label) != t.aliases.end()) return t;
  }
  throw UnknownNameError("unknown technology '" + std::string(label) + "'");
}

const ChipRecord& Registry::chip(std::string_view name) const {
  for (const auto& c : chips_) {
    if (c.name == name) return c;
  }
  throw UnknownNameError("unknown chip '" + std::string(name) + "'");
}

const WorkloadSpec& Registry::workload(std::string_view name) const {
  for (const auto& w : workloads_) {
    if (w.name == name) return w;
  }
  throw UnknownNameError("unknown workload '" + std::string(name) + "'");
}

Schedule Registry::default_schedule(const TechnologyId& tech) const {
  // element family wins over network kind
  if (auto it = default_schedules_.find(std::string(to_string(tech.family)));
      it != default_schedules_.end()) {
    return it->second;
  }
  if (auto it = default_schedules_.find(std::string(to_string(tech.kind)));
      it != default_schedules_.end()) {
    return it->second;
  }
  return Schedule::parallel;
}

std::string Registry::serialize() const {
  // canonical units throughout
  const UnitBlock canon_const{{"length", "nm"},
                              {"time", "ps"},
                              {"voltage", "V"},
                              {"capacitance", "F"},
                              {"capacitance_per_length", "F/m"},
                              {"current", "A"},
                              {"current_per_width", "A/m"},
                              {"resistance", "Ohm"},
                              {"resistance_per_length", "Ohm/m"},
                              {"conductance", "S"}};
  const UnitBlock canon_ade{{"area", "nm2"}, {"time", "ps"}, {"energy", "aJ"},
                            {"resistance", "Ohm"}, {"capacitance_per_length", "F/m"},
                            {"current_per_width", "A/m"}, {"conductance", "S"}};
  const UnitBlock canon_chip{{"area", "nm2"},       {"power", "aJ/ps"}, {"throughput", "1/ps"},
                             {"energy", "aJ"},      {"frequency", "1/ps"}, {"length", "nm"},
                             {"voltage", "V"}};
  ojson doc;
  doc["constants"] = RegistryIo::write_constants(*this, canon_const);
  doc["circuit_primitives"] = RegistryIo::write_primitives(*this, canon_ade);
  doc["devices"] = RegistryIo::write_devices(*this, canon_ade);
  doc["technologies"] = RegistryIo::write_technologies(*this, {{"current", "A"}});
  // per-record overrides are irrelevant once values are canonical
  Registry copy = *this;
  for (auto& c : copy.chips_) c.unit_overrides.clear();
  doc["chips_neuromorphic"] = RegistryIo::write_chips(copy, canon_chip, ChipKind::neuromorphic);
  doc["chips_accelerators"] = RegistryIo::write_chips(copy, canon_chip, ChipKind::accelerator);
  doc["workloads"] = RegistryIo::write_workloads(*this, {});
  ojson labels = ojson::array();
  for (const auto& t : technologies_) labels.push_back(t.label);
  doc["technology_labels"] = labels;
  return doc.dump(1);
}

void Registry::export_to(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  auto block = [&](const std::string& stem) {
    auto it = unit_blocks_.find(stem);
    return it == unit_blocks_.end() ? UnitBlock{} : it->second;
  };
  auto write = [&](const std::filesystem::path& p, const ojson& doc) {
    std::ofstream out(p);
    if (!out) throw Error("cannot write " + p.string());
    out << doc.dump(2) << '\n';
  };
  const auto paths = DatasetPaths::in_directory(dir);
  write(paths.constants, RegistryIo::write_constants(*this, block("constants")));
  write(paths.circuit_primitives,
        RegistryIo::write_primitives(*this, block("circuit_primitives")));
  write(paths.devices, RegistryIo::write_devices(*this, block("devices")));
  write(paths.technologies, RegistryIo::write_technologies(*this, block("technologies")));
  write(paths.chips_neuromorphic,
        RegistryIo::write_chips(*this, block("chips_neuromorphic"), ChipKind::neuromorphic));
  write(paths.chips_accelerators,
        RegistryIo::write_chips(*this, block("chips_accelerators"), ChipKind::accelerator));
  write(paths.workloads, RegistryIo::write_workloads(*this, block("workloads")));
}

}  // namespace neurobench

#include "neurobench/units.hpp"

#include <array>
#include <string>
#include <vector>

#include "neurobench/error.hpp"

namespace neurobench::units {
namespace {

struct UnitFactor {
  std::string_view name;
  double factor;
};

struct CategoryInfo {
  Category category;
  std::string_view key;
  std::string_view canonical;
  std::vector<UnitFactor> units;
};

// The first entry of every list is the canonical unit (factor 1).
const std::array<CategoryInfo, 15>& table() {
  static const std::array<CategoryInfo, 15> kTable{{
      {Category::length, "length", "nm", {{"nm", 1.0}, {"um", 1e3}, {"mm", 1e6}, {"m", 1e9}}},
      {Category::area,
       "area",
       "nm2",
       {{"nm2", 1.0}, {"um2", 1e6}, {"mm2", 1e12}, {"cm2", 1e14}}},
      {Category::time,
       "time",
       "ps",
       {{"ps", 1.0}, {"ns", 1e3}, {"us", 1e6}, {"ms", 1e9}, {"s", 1e12}}},
      {Category::energy,
       "energy",
       "aJ",
       {{"aJ", 1.0}, {"fJ", 1e3}, {"pJ", 1e6}, {"nJ", 1e9}, {"uJ", 1e12}, {"J", 1e18}}},
      {Category::power,
       "power",
       "aJ/ps",
       {{"aJ/ps", 1.0}, {"uW", 1.0}, {"mW", 1e3}, {"W", 1e6}}},
      {Category::voltage, "voltage", "V", {{"V", 1.0}, {"mV", 1e-3}}},
      {Category::capacitance,
       "capacitance",
       "F",
       {{"F", 1.0}, {"pF", 1e-12}, {"fF", 1e-15}, {"aF", 1e-18}}},
      {Category::capacitance_per_length,
       "capacitance_per_length",
       "F/m",
       {{"F/m", 1.0}, {"nF/m", 1e-9}, {"fF/um", 1e-9}}},
      {Category::current, "current", "A", {{"A", 1.0}, {"mA", 1e-3}, {"uA", 1e-6}}},
      {Category::current_per_width,
       "current_per_width",
       "A/m",
       {{"A/m", 1.0}, {"uA/um", 1.0}, {"mA/um", 1e3}}},
      {Category::resistance,
       "resistance",
       "Ohm",
       {{"Ohm", 1.0}, {"kOhm", 1e3}, {"MOhm", 1e6}}},
      {Category::resistance_per_length,
       "resistance_per_length",
       "Ohm/m",
       {{"Ohm/m", 1.0}, {"MOhm/m", 1e6}, {"GOhm/m", 1e9}}},
      {Category::conductance, "conductance", "S", {{"S", 1.0}, {"mS", 1e-3}, {"uS", 1e-6}}},
      {Category::frequency,
       "frequency",
       "1/ps",
       {{"1/ps", 1.0}, {"1/s", 1e-12}, {"Hz", 1e-12}, {"kHz", 1e-9}, {"MHz", 1e-6}, {"GHz", 1e-3}}},
      {Category::throughput,
       "throughput",
       "1/ps",
       {{"1/ps", 1.0},
        {"SOPS", 1e-12},
        {"MSOPS", 1e-6},
        {"GSOPS", 1e-3},
        {"MAC/s", 1e-12},
        {"GMAC/s", 1e-3}}},
  }};
  return kTable;
}

const CategoryInfo& info(Category category) {
  for (const auto& entry : table()) {
    if (entry.category == category) return entry;
  }
  throw ParseError("unknown unit category");
}

}  // namespace

double to_canonical(Category category, std::string_view unit) {
  const auto& entry = info(category);
  for (const auto& u : entry.units) {
    if (u.name == unit) return u.factor;
  }
  throw ParseError("unsupported " + std::string(entry.key) + " unit '" + std::string(unit) + "'");
}

std::string_view canonical_unit(Category category) { return info(category).canonical; }

Category category_from_key(std::string_view key) {
  for (const auto& entry : table()) {
    if (entry.key == key) return entry.category;
  }
  throw ParseError("unknown unit category '" + std::string(key) + "'");
}

std::string_view category_key(Category category) { return info(category).key; }

}  // namespace neurobench::units

#pragma once

#include <string_view>

// Canonical internal units. Everything inside the library is stored in these
// and converted exactly once at the dataset / report boundary:
//
//   length nm, area nm^2, time ps, energy aJ, power aJ/ps,
//   voltage V, capacitance F, resistance Ohm, current A, conductance S,
//   frequency 1/ps, throughput events/ps.
//
// Electrical quantities stay SI because the circuit formulas mix them freely;
// the ADE results are always nm^2 / ps / aJ.

namespace neurobench::units {

inline constexpr double kMetresPerNm = 1e-9;
inline constexpr double kPsPerSecond = 1e12;
inline constexpr double kAjPerJoule = 1e18;

constexpr double nm_to_m(double nm) { return nm * kMetresPerNm; }
constexpr double s_to_ps(double s) { return s * kPsPerSecond; }
constexpr double ps_to_s(double ps) { return ps / kPsPerSecond; }
constexpr double j_to_aj(double j) { return j * kAjPerJoule; }
constexpr double aj_to_j(double aj) { return aj / kAjPerJoule; }

// 1 aJ / 1 ps = 1e-18 J / 1e-12 s = 1e-6 W
inline constexpr double kWattsPerAjPerPs = 1e-6;
constexpr double aj_per_ps_to_w(double p) { return p * kWattsPerAjPerPs; }
constexpr double w_to_aj_per_ps(double w) { return w / kWattsPerAjPerPs; }

constexpr double nm2_to_um2(double a) { return a * 1e-6; }
constexpr double nm2_to_mm2(double a) { return a * 1e-12; }

enum class Category {
  length,
  area,
  time,
  energy,
  power,
  voltage,
  capacitance,
  capacitance_per_length,
  current,
  current_per_width,
  resistance,
  resistance_per_length,
  conductance,
  frequency,
  throughput,
};

/// Multiplier taking a value expressed in `unit` to the canonical unit of
/// `category`. Throws ParseError for units outside the declared set.
double to_canonical(Category category, std::string_view unit);

std::string_view canonical_unit(Category category);

/// Parses the key used in a dataset `units` block ("area", "power", ...).
Category category_from_key(std::string_view key);
std::string_view category_key(Category category);

}  // namespace neurobench::units

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "neurobench/chip.hpp"
#include "neurobench/topsdown.hpp"

namespace neurobench {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// %g with `digits` significant digits, locale independent.
std::string format_number(double v, int digits = 6);

void write_csv(std::ostream& os, const CsvTable& t);
std::string to_csv(const CsvTable& t);
/// RFC-4180 reader: quoted fields, doubled quotes, CRLF or LF.
CsvTable parse_csv(std::string_view text);

enum class MatrixScope { elements, workload, chips };

struct MatrixOptions {
  MatrixScope scope = MatrixScope::elements;
  std::string workload;  // for MatrixScope::workload
  int digits = 6;
  /// Technology labels (or chip names) to keep; nullopt keeps all.
  std::optional<std::vector<std::string>> filter;
};

/// Rows in technology (or chip file) order. Units: nm^2, ps, aJ, W, 1/s.
CsvTable emit_matrix(const Registry& reg, const MatrixOptions& opts);

enum class Series { ANN, CNN, SNN, ONN, accelerator, neuromorphic };
std::string_view to_string(Series s);

struct ScatterPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
  Series series = Series::ANN;
};

enum class ScatterKind {
  synapse,           // delay (ps) vs energy (aJ)
  neuron,            // delay (ps) vs energy (aJ)
  power_throughput,  // power density (W/nm^2) vs events per nm^2 per ps
  workload,          // inference delay (ps) vs energy (aJ)
};

std::vector<ScatterPoint> scatter(const Registry& reg, ScatterKind kind,
                                  const std::string& workload = {});
CsvTable scatter_table(const std::vector<ScatterPoint>& pts, int digits = 6);

/// Non-dominated subset, both axes minimized, in ascending (x, y, label) order.
std::vector<ScatterPoint> pareto_front(std::vector<ScatterPoint> pts);

Series series_of(NetworkKind k);

}  // namespace neurobench

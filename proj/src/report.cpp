#include "neurobench/report.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <tuple>

#include "neurobench/error.hpp"

namespace neurobench {

std::string format_number(double v, int digits) {
  if (digits < 1 || digits > 17) throw DomainError("precision must be in 1..17");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return {buf, res.ptr};
}

namespace {

void write_field(std::ostream& os, const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) {
    os << f;
    return;
  }
  os << '"';
  for (char ch : f) {
    if (ch == '"') os << '"';
    os << ch;
  }
  os << '"';
}

void write_row(std::ostream& os, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ',';
    write_field(os, row[i]);
  }
  os << '\n';
}

}  // namespace

void write_csv(std::ostream& os, const CsvTable& t) {
  write_row(os, t.header);
  for (const auto& r : t.rows) write_row(os, r);
}

std::string to_csv(const CsvTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;  // current record has content
  std::size_t i = 0;
  auto end_record = [&] {
    row.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(row));
    row.clear();
    any = false;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      if (!field.empty()) throw ParseError("csv: quote inside unquoted field");
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      // handled by the \n
    } else if (ch == '\n') {
      end_record();
    } else {
      field += ch;
      any = true;
    }
    ++i;
  }
  if (quoted) throw ParseError("csv: unterminated quoted field");
  if (any || !field.empty()) end_record();

  CsvTable t;
  if (records.empty()) return t;
  t.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size()) {
      throw ParseError("csv: record " + std::to_string(r) + " has " +
                       std::to_string(records[r].size()) + " fields, header has " +
                       std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

std::string_view to_string(Series s) {
  switch (s) {
    case Series::ANN: return "ANN";
    case Series::CNN: return "CNN";
    case Series::SNN: return "SNN";
    case Series::ONN: return "ONN";
    case Series::accelerator: return "accelerator";
    case Series::neuromorphic: return "neuromorphic";
  }
  return "?";
}

Series series_of(NetworkKind k) {
  switch (k) {
    case NetworkKind::ANN: return Series::ANN;
    case NetworkKind::CNN: return Series::CNN;
    case NetworkKind::SNN: return Series::SNN;
    case NetworkKind::ONN: return Series::ONN;
  }
  return Series::ANN;
}

namespace {

bool kept(const MatrixOptions& o, const std::string& name) {
  if (!o.filter) return true;
  return std::find(o.filter->begin(), o.filter->end(), name) != o.filter->end();
}

CsvTable element_matrix(const Registry& reg, const MatrixOptions& o) {
  CsvTable t;
  t.header = {"label",       "kind",         "a_syn_nm2",   "a_lic_nm2",   "a_neu_nm2",
              "a_gic_nm2",   "tau_syn_ps",   "tau_lic_ps",  "tau_neu_ps",  "tau_gic_ps",
              "E_syn_aJ",    "E_lic_aJ",     "E_neu_aJ",    "E_gic_aJ"};
  for (const auto& tech : reg.enumerate_technologies()) {
    if (!kept(o, tech.label)) continue;
    const ElementBench e = bench_element(reg, tech);
    std::vector<std::string> row{tech.label, std::string(to_string(tech.kind))};
    for (double v : e.columns()) row.push_back(format_number(v, o.digits));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable workload_matrix(const Registry& reg, const MatrixOptions& o) {
  const WorkloadSpec& spec = reg.workload(o.workload);
  CsvTable t;
  t.header = {"label",    "kind",    "schedule", "area_nm2",          "delay_ps",
              "energy_aJ", "power_W", "inferences_per_s", "throughput_per_nm2_ps"};
  for (const auto& tech : reg.enumerate_technologies()) {
    if (!kept(o, tech.label)) continue;
    const WorkloadBench w = bench_workload(reg, spec, tech);
    t.rows.push_back({tech.label, std::string(to_string(tech.kind)),
                      std::string(to_string(w.schedule)), format_number(w.area, o.digits),
                      format_number(w.delay, o.digits), format_number(w.energy, o.digits),
                      format_number(w.power_watts(), o.digits),
                      format_number(w.inferences_per_second(), o.digits),
                      format_number(w.inference_throughput, o.digits)});
  }
  return t;
}

CsvTable chip_matrix(const Registry& reg, const MatrixOptions& o) {
  CsvTable t;
  t.header = {"chip",       "kind",     "a_neu_nm2", "a_syn_nm2", "tau_syn_ps",
              "tau_neu_ps", "E_syn_aJ", "E_neu_aJ",  "r_a",       "note"};
  for (const auto& chip : reg.chips()) {
    if (!kept(o, chip.name)) continue;
    std::vector<std::string> row{chip.name, std::string(to_string(chip.kind))};
    try {
      const TopsDownElement e = topsdown(chip, reg.constants());
      for (double v : {e.a_neu, e.a_syn, e.tau_syn, e.tau_neu, e.e_syn, e.e_neu, e.r_a}) {
        row.push_back(format_number(v, o.digits));
      }
      row.emplace_back();
    } catch (const IncomputableError& err) {
      row.resize(9);
      row.emplace_back(err.what());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

CsvTable emit_matrix(const Registry& reg, const MatrixOptions& opts) {
  switch (opts.scope) {
    case MatrixScope::elements: return element_matrix(reg, opts);
    case MatrixScope::workload: return workload_matrix(reg, opts);
    case MatrixScope::chips: return chip_matrix(reg, opts);
  }
  throw DomainError("unknown matrix scope");
}

std::vector<ScatterPoint> scatter(const Registry& reg, ScatterKind kind,
                                  const std::string& workload) {
  std::vector<ScatterPoint> pts;
  const GlobalConstants& c = reg.constants();
  if (kind == ScatterKind::workload) {
    const WorkloadSpec& spec = reg.workload(workload);
    for (const auto& tech : reg.enumerate_technologies()) {
      const WorkloadBench w = bench_workload(reg, spec, tech);
      pts.push_back({tech.label, w.delay, w.energy, series_of(tech.kind)});
    }
    for (const auto& chip : reg.chips()) {
      try {
        const WorkloadBench w = run_workload_on_chip(reg, chip, spec);
        pts.push_back({chip.name, w.delay, w.energy,
                       chip.kind == ChipKind::accelerator ? Series::accelerator
                                                          : Series::neuromorphic});
      } catch (const IncomputableError&) {
      }
    }
    return pts;
  }
  for (const auto& tech : reg.enumerate_technologies()) {
    const ElementBench e = bench_element(reg, tech);
    if (kind == ScatterKind::synapse) {
      const AdeTriple s = e.synapse_total();
      pts.push_back({tech.label, s.delay, s.energy, series_of(tech.kind)});
    } else if (kind == ScatterKind::neuron) {
      const AdeTriple n = e.neuron_total();
      pts.push_back({tech.label, n.delay, n.energy, series_of(tech.kind)});
    } else {
      const ChipBench b =
          chip_bench(nominal_config(c, tech.kind == NetworkKind::SNN), e, c);
      pts.push_back({tech.label, units::aj_per_ps_to_w(b.power) / b.area, b.throughput / b.area,
                     series_of(tech.kind)});
    }
  }
  if (kind == ScatterKind::power_throughput) {
    for (const auto& chip : reg.chips()) {
      if (!chip.area || !chip.power || !chip.throughput) continue;
      pts.push_back({chip.name, units::aj_per_ps_to_w(*chip.power) / *chip.area,
                     *chip.throughput / *chip.area,
                     chip.kind == ChipKind::accelerator ? Series::accelerator
                                                        : Series::neuromorphic});
    }
  }
  return pts;
}

CsvTable scatter_table(const std::vector<ScatterPoint>& pts, int digits) {
  CsvTable t;
  t.header = {"label", "series", "x", "y"};
  for (const auto& p : pts) {
    t.rows.push_back({p.label, std::string(to_string(p.series)), format_number(p.x, digits),
                      format_number(p.y, digits)});
  }
  return t;
}

std::vector<ScatterPoint> pareto_front(std::vector<ScatterPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const ScatterPoint& a, const ScatterPoint& b) {
    return std::tie(a.x, a.y, a.label) < std::tie(b.x, b.y, b.label);
  });
  // sweep in ascending x: a point survives if its y beats every earlier y,
  // or ties the best y at the same x (then it is a duplicate coordinate)
  std::vector<ScatterPoint> front;
  for (const auto& p : pts) {
    if (front.empty()) {
      front.push_back(p);
      continue;
    }
    const ScatterPoint& last = front.back();
    if (p.y < last.y || (p.x == last.x && p.y == last.y)) front.push_back(p);
  }
  return front;
}

}  // namespace neurobench

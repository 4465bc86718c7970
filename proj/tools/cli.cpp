#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "neurobench/error.hpp"
#include "neurobench/report.hpp"

namespace neurobench {

namespace {

struct Options {
  std::string data_dir;
  int digits = 6;

  std::string tech;
  std::string kind;
  std::string coding = "rate";
  std::string config;
  bool nominal = false;
  std::string workload;
  std::string schedule;
  std::string chip;
  std::string what;
  std::string scope = "elements";
  std::string series = "synapse";
  std::string out;
};

Registry load(const Options& o) {
  return o.data_dir.empty() ? Registry::load_default() : Registry::load_dir(o.data_dir);
}

SpikeCoding parse_coding(const std::string& s) {
  if (s == "rate") return SpikeCoding::rate;
  if (s == "temporal") return SpikeCoding::temporal;
  throw DomainError("unknown coding " + s);
}

void print_kv(std::ostream& out, const std::string& key, double v, const char* unit, int digits) {
  out << key << " = " << format_number(v, digits);
  if (*unit) out << ' ' << unit;
  out << '\n';
}

void devices_list(const Registry& reg, std::ostream& out) {
  CsvTable t;
  t.header = {"name", "class", "area_nm2", "delay_ps", "energy_aJ", "r_on_ohm", "r_off_ohm"};
  for (const auto& d : reg.devices()) {
    t.rows.push_back({d.name, std::string(to_string(d.device_class)), format_number(d.area_int),
                      format_number(d.delay_int), format_number(d.energy_int),
                      d.r_on ? format_number(*d.r_on) : "", d.r_off ? format_number(*d.r_off) : ""});
  }
  write_csv(out, t);
}

void bench_element_cmd(const Registry& reg, const Options& o, std::ostream& out) {
  const TechnologyId& tech = reg.technology(o.tech);
  const ElementBench e = bench_element(reg, tech, parse_coding(o.coding));
  const int d = o.digits;
  out << "technology = " << tech.label << '\n';
  print_kv(out, "a_syn", e.synapse.area, "nm2", d);
  print_kv(out, "a_lic", e.core_ic.area, "nm2", d);
  print_kv(out, "a_neu", e.neuron.area, "nm2", d);
  print_kv(out, "a_gic", e.chip_ic.area, "nm2", d);
  print_kv(out, "tau_syn", e.synapse.delay, "ps", d);
  print_kv(out, "tau_lic", e.core_ic.delay, "ps", d);
  print_kv(out, "tau_neu", e.neuron.delay, "ps", d);
  print_kv(out, "tau_gic", e.chip_ic.delay, "ps", d);
  print_kv(out, "E_syn", e.synapse.energy, "aJ", d);
  print_kv(out, "E_lic", e.core_ic.energy, "aJ", d);
  print_kv(out, "E_neu", e.neuron.energy, "aJ", d);
  print_kv(out, "E_gic", e.chip_ic.energy, "aJ", d);
}

void bench_network_cmd(const Registry& reg, const Options& o, std::ostream& out) {
  const NetworkKind kind = network_kind_from_string(o.kind);
  MatrixOptions m;
  m.digits = o.digits;
  std::vector<std::string> labels;
  for (const auto& t : reg.enumerate_technologies(kind)) labels.push_back(t.label);
  m.filter = labels;
  write_csv(out, emit_matrix(reg, m));
}

ChipConfig read_config(const std::string& path, bool spiking) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  ChipConfig cfg;
  try {
    cfg.cores = j.at("cores").get<int>();
    cfg.neurons_per_core = j.at("neurons_per_core").get<int>();
    cfg.synapses_per_neuron = j.at("synapses_per_neuron").get<int>();
    cfg.activity = j.value("activity", 1.0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  cfg.spiking = spiking;
  validate(cfg);
  return cfg;
}

void bench_chip_cmd(const Registry& reg, const Options& o, std::ostream& out) {
  const GlobalConstants& c = reg.constants();
  CsvTable t;
  t.header = {"label",   "area_mm2",         "time_step_ps", "energy_per_event_aJ",
              "power_W", "throughput_per_s", "energy_per_step_aJ"};
  std::vector<TechnologyId> techs;
  if (o.tech.empty()) {
    techs = reg.enumerate_technologies();
  } else {
    techs.push_back(reg.technology(o.tech));
  }
  for (const auto& tech : techs) {
    const bool spiking = tech.kind == NetworkKind::SNN;
    const ChipConfig cfg = o.config.empty() ? nominal_config(c, spiking) : read_config(o.config, spiking);
    const ChipBench b = chip_bench(cfg, bench_element(reg, tech), c);
    t.rows.push_back({tech.label, format_number(units::nm2_to_mm2(b.area), o.digits),
                      format_number(b.time_step, o.digits),
                      format_number(b.energy_per_event, o.digits),
                      format_number(units::aj_per_ps_to_w(b.power), o.digits),
                      format_number(units::s_to_ps(b.throughput), o.digits),
                      format_number(b.energy_per_step, o.digits)});
  }
  write_csv(out, t);
}

void print_workload(const WorkloadBench& w, int d, std::ostream& out) {
  out << "schedule = " << to_string(w.schedule) << '\n';
  print_kv(out, "a_CW", w.area, "nm2", d);
  print_kv(out, "tau_CW", w.delay, "ps", d);
  print_kv(out, "E_CW", w.energy, "aJ", d);
  print_kv(out, "P_CW", w.power_watts(), "W", d);
  print_kv(out, "T_I", w.inference_throughput, "1/(nm2 ps)", d);
  print_kv(out, "inferences_per_s", w.inferences_per_second(), "", d);
}

void bench_workload_cmd(const Registry& reg, const Options& o, std::ostream& out) {
  const TechnologyId& tech = reg.technology(o.tech);
  std::optional<Schedule> schedule;
  if (!o.schedule.empty()) schedule = schedule_from_string(o.schedule);
  out << "technology = " << tech.label << '\n' << "workload = " << o.workload << '\n';
  print_workload(bench_workload(reg, reg.workload(o.workload), tech, schedule), o.digits, out);
}

void topsdown_cmd(const Registry& reg, const Options& o, std::ostream& out) {
  const ChipRecord& chip = reg.chip(o.chip);
  const TopsDownElement e = topsdown(chip, reg.constants());
  const int d = o.digits;
  out << "chip = " << chip.name << '\n';
  print_kv(out, "a_neu", e.a_neu, "nm2", d);
  print_kv(out, "a_syn", e.a_syn, "nm2", d);
  print_kv(out, "tau_syn", e.tau_syn, "ps", d);
  print_kv(out, "tau_neu", e.tau_neu, "ps", d);
  print_kv(out, "E_syn", e.e_syn, "aJ", d);
  print_kv(out, "E_neu", e.e_neu, "aJ", d);
  print_kv(out, "r_a", e.r_a, "", d);
  try {
    const BackfillResult b = backfill_derived(chip);
    for (const auto& f : b.fills) {
      out << "filled " << to_string(f.field) << " = " << format_number(f.value, d) << " (from "
          << identity_name(f.identity) << ")\n";
    }
    for (const auto& r : b.residuals) {
      out << identity_name(r.identity) << " residual = " << format_number(r.relative, d) << '\n';
    }
  } catch (const IncomputableError& err) {
    out << "backfill: " << err.what() << '\n';
  }
  if (!o.workload.empty()) {
    out << "workload = " << o.workload << '\n';
    print_workload(run_workload_on_chip(reg, chip, reg.workload(o.workload)), d, out);
  }
}

void export_cmd(const Registry& reg, const Options& o, std::ostream& out) {
  CsvTable t;
  if (o.what == "matrix") {
    MatrixOptions m;
    m.digits = o.digits;
    m.workload = o.workload;
    if (o.scope == "elements") {
      m.scope = MatrixScope::elements;
    } else if (o.scope == "workload") {
      m.scope = MatrixScope::workload;
    } else {
      m.scope = MatrixScope::chips;
    }
    t = emit_matrix(reg, m);
  } else {
    ScatterKind k = ScatterKind::synapse;
    if (o.series == "neuron") k = ScatterKind::neuron;
    if (o.series == "power") k = ScatterKind::power_throughput;
    if (o.series == "workload") k = ScatterKind::workload;
    auto pts = scatter(reg, k, o.workload);
    if (o.what == "pareto") pts = pareto_front(std::move(pts));
    t = scatter_table(pts, o.digits);
  }
  if (o.out.empty() || o.out == "-") {
    write_csv(out, t);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  write_csv(f, t);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Area, delay and energy benchmarks for neural-inference hardware", "neurobench"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--data-dir", o.data_dir, "Dataset directory (default: $NEUROBENCH_DATA_DIR)");
  app.add_option("--digits", o.digits, "Significant digits in output")->check(CLI::Range(1, 17));

  auto* devices = app.add_subcommand("devices", "Device table");
  auto* devices_ls = devices->add_subcommand("list", "List devices");
  devices->require_subcommand(1);

  auto* bench = app.add_subcommand("bench", "Bottoms-up benchmarks");
  bench->require_subcommand(1);
  auto* b_elem = bench->add_subcommand("element", "One Table 7 row");
  b_elem->add_option("--tech", o.tech, "Technology label")->required();
  b_elem->add_option("--coding", o.coding, "SNN spike coding")
      ->check(CLI::IsMember({"rate", "temporal"}));
  auto* b_net = bench->add_subcommand("network", "All rows of one network kind");
  b_net->add_option("--kind", o.kind, "ANN, CNN, SNN or ONN")
      ->required()
      ->check(CLI::IsMember({"ANN", "CNN", "SNN", "ONN"}));
  auto* b_chip = bench->add_subcommand("chip", "Chip benchmarks");
  auto* nominal = b_chip->add_flag("--nominal", o.nominal, "Nominal chip (default)");
  b_chip->add_option("--config", o.config, "JSON chip configuration")->excludes(nominal);
  b_chip->add_option("--tech", o.tech, "Technology label (default: all)");
  auto* b_work = bench->add_subcommand("workload", "Workload benchmarks");
  b_work->add_option("--name", o.workload, "Workload name")->required();
  b_work->add_option("--tech", o.tech, "Technology label")->required();
  b_work->add_option("--schedule", o.schedule, "parallel or tmux")
      ->check(CLI::IsMember({"parallel", "tmux", "time_multiplexed"}));

  auto* td = app.add_subcommand("topsdown", "Tops-down figures from a published chip");
  td->add_option("--chip", o.chip, "Chip name")->required();
  td->add_option("--workload", o.workload, "Also run this workload on the chip");

  auto* ex = app.add_subcommand("export", "Write CSV datasets");
  ex->add_option("--what", o.what, "matrix, scatter or pareto")
      ->required()
      ->check(CLI::IsMember({"matrix", "scatter", "pareto"}));
  ex->add_option("--scope", o.scope, "Matrix scope")
      ->check(CLI::IsMember({"elements", "workload", "chips"}));
  ex->add_option("--series", o.series, "Scatter data")
      ->check(CLI::IsMember({"synapse", "neuron", "power", "workload"}));
  ex->add_option("--workload", o.workload, "Workload for workload scope/series");
  ex->add_option("--out", o.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "neurobench: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if ((ex->parsed() && (o.scope == "workload" || o.series == "workload") && o.workload.empty())) {
      err << "neurobench: --workload is required for workload exports\n";
      return 2;
    }
    const Registry reg = load(o);
    if (devices_ls->parsed()) {
      devices_list(reg, out);
    } else if (b_elem->parsed()) {
      bench_element_cmd(reg, o, out);
    } else if (b_net->parsed()) {
      bench_network_cmd(reg, o, out);
    } else if (b_chip->parsed()) {
      bench_chip_cmd(reg, o, out);
    } else if (b_work->parsed()) {
      bench_workload_cmd(reg, o, out);
    } else if (td->parsed()) {
      topsdown_cmd(reg, o, out);
    } else if (ex->parsed()) {
      export_cmd(reg, o, out);
    }
  } catch (const std::exception& e) {
    err << "neurobench: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace neurobench

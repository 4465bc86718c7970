#include "neurobench/topsdown.hpp"

#include <array>

#include "neurobench/error.hpp"

namespace neurobench {

ElementBench TopsDownElement::element() const {
  ElementBench e;
  e.technology = chip;
  e.kind = kind == ChipKind::neuromorphic ? NetworkKind::SNN : NetworkKind::ANN;
  e.synapse = {a_syn, tau_syn, e_syn};
  e.neuron = {a_neu, tau_neu, e_neu};
  return e;
}

std::string_view identity_name(Identity id) {
  return id == Identity::throughput ? "throughput" : "power";
}

namespace {

double require(const ChipRecord& chip, ChipField f) {
  const auto& v = chip.get(f);
  if (!v) {
    throw IncomputableError("chip " + chip.name + ": " + std::string(to_string(f)) + " required");
  }
  return *v;
}

// lhs = rhs_product * s_ch (throughput) or rhs_product (power)
struct IdentitySpec {
  Identity id;
  ChipField lhs;
  std::array<ChipField, 2> rhs;
  int rhs_count;
};

constexpr IdentitySpec kThroughput{Identity::throughput, ChipField::throughput,
                                   {ChipField::fire_rate, ChipField::activity},
                                   2};
constexpr IdentitySpec kPower{Identity::power, ChipField::power,
                              {ChipField::throughput, ChipField::energy_per_event},
                              2};

double scale(const IdentitySpec& s, const ChipRecord& chip) {
  return s.id == Identity::throughput ? chip.total_synapses() : 1.0;
}

int unknowns(const IdentitySpec& s, const ChipRecord& chip) {
  int n = chip.get(s.lhs) ? 0 : 1;
  for (int i = 0; i < s.rhs_count; ++i) n += chip.get(s.rhs[i]) ? 0 : 1;
  return n;
}

// value of `target` implied by the identity with every other field present
double solve(const IdentitySpec& s, const ChipRecord& chip, ChipField target) {
  double product = scale(s, chip);
  for (int i = 0; i < s.rhs_count; ++i) {
    if (s.rhs[i] != target) product *= *chip.get(s.rhs[i]);
  }
  if (target == s.lhs) return product;
  return *chip.get(s.lhs) / product;
}

bool involves(const IdentitySpec& s, ChipField f) {
  if (s.lhs == f) return true;
  for (int i = 0; i < s.rhs_count; ++i) {
    if (s.rhs[i] == f) return true;
  }
  return false;
}

}  // namespace

double implied_throughput(const ChipRecord& chip) {
  return require(chip, ChipField::fire_rate) * require(chip, ChipField::activity) *
         chip.total_synapses();
}

BackfillResult backfill_derived(const ChipRecord& chip) {
  std::vector<IdentitySpec> ids{kPower};
  if (chip.kind == ChipKind::neuromorphic) ids.insert(ids.begin(), kThroughput);

  BackfillResult out;
  out.record = chip;
  ChipRecord& r = out.record;

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& s : ids) {
      if (unknowns(s, r) != 1) continue;
      ChipField target = s.lhs;
      for (int i = 0; i < s.rhs_count; ++i) {
        if (!r.get(s.rhs[i])) target = s.rhs[i];
      }
      const double v = solve(s, r, target);
      r.get(target) = v;
      r.derived.insert(target);
      out.fills.push_back({target, s.id, v});
      progress = true;
    }
  }

  for (const auto& s : ids) {
    if (unknowns(s, r) > 1) {
      throw IncomputableError("chip " + chip.name + ": " + std::string(identity_name(s.id)) +
                              " identity is under-determined");
    }
    const double lhs = *r.get(s.lhs);
    out.residuals.push_back({s.id, (solve(s, r, s.lhs) - lhs) / lhs});
  }

  // fields the source starred: what the identities say instead
  for (ChipField f : chip.derived) {
    if (!chip.get(f)) continue;
    for (const auto& s : ids) {
      if (involves(s, f)) {
        out.rederived.push_back({f, *chip.get(f), solve(s, r, f)});
        break;
      }
    }
  }
  return out;
}

TopsDownElement topsdown_neuromorphic(const ChipRecord& chip, const GlobalConstants& c) {
  if (chip.kind != ChipKind::neuromorphic) {
    throw DomainError("chip " + chip.name + " is not neuromorphic");
  }
  ChipRecord r = chip;
  try {
    r = backfill_derived(chip).record;
  } catch (const IncomputableError&) {
    // fall through; the field checks below name what is missing
  }
  const double area = require(r, ChipField::area);
  const double fire = require(r, ChipField::fire_rate);
  const double r_a = require(r, ChipField::activity);
  const double e_syn = require(r, ChipField::energy_per_event);

  TopsDownElement e;
  e.chip = chip.name;
  e.kind = chip.kind;
  e.r_a = r_a;
  e.s_neu = chip.synapses_per_neuron;
  const double neurons = static_cast<double>(chip.cores) * chip.neurons_per_core;
  const double share = c.topsdown_neuron_area_share;
  e.a_neu = share * area / neurons;
  e.a_syn = (1.0 - share) * area / (neurons * chip.synapses_per_neuron);
  e.tau_syn = 1.0 / (r_a * chip.synapses_per_neuron * fire);
  e.tau_neu = e.tau_syn;
  e.e_syn = e_syn;
  e.e_neu = e_syn * r_a * chip.synapses_per_neuron;
  return e;
}

TopsDownElement topsdown_accelerator(const ChipRecord& chip, const GlobalConstants& c) {
  if (chip.kind != ChipKind::accelerator) {
    throw DomainError("chip " + chip.name + " is not an accelerator");
  }
  const double area = require(chip, ChipField::area);
  const double clock = require(chip, ChipField::clock);
  double e_syn = 0.0;
  if (chip.energy_per_event) {
    e_syn = *chip.energy_per_event;
  } else {
    e_syn = require(chip, ChipField::power) / require(chip, ChipField::throughput);
  }

  TopsDownElement e;
  e.chip = chip.name;
  e.kind = chip.kind;
  e.r_a = 1.0;
  e.s_neu = chip.synapses_per_neuron;
  const double neurons = static_cast<double>(chip.cores) * chip.neurons_per_core;
  const double budget = c.accelerator_element_area_share * area;
  const double share = c.topsdown_neuron_area_share;
  e.a_neu = share * budget / neurons;
  e.a_syn = (1.0 - share) * budget / (neurons * chip.synapses_per_neuron);
  e.tau_syn = 1.0 / clock;
  e.tau_neu = e.tau_syn;
  e.e_syn = e_syn;
  e.e_neu = e_syn;  // one accumulate-and-activate step costs about one MAC
  return e;
}

TopsDownElement topsdown(const ChipRecord& chip, const GlobalConstants& c) {
  return chip.kind == ChipKind::neuromorphic ? topsdown_neuromorphic(chip, c)
                                             : topsdown_accelerator(chip, c);
}

WorkloadBench run_workload_on_chip(const Registry& reg, const ChipRecord& chip,
                                   const WorkloadSpec& spec) {
  const TopsDownElement td = topsdown(chip, reg.constants());
  const bool neuromorphic = chip.kind == ChipKind::neuromorphic;
  return run_workload(spec, td.element(), neuromorphic ? FanIn::unlimited() : FanIn::sequential(),
                      neuromorphic, reg.topsdown_schedule(), reg.constants());
}

}  // namespace neurobench

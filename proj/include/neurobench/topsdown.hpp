#pragma once

#include <string>
#include <vector>

#include "neurobench/workload.hpp"

namespace neurobench {

struct TopsDownElement {
  std::string chip;
  ChipKind kind = ChipKind::neuromorphic;
  double a_neu = 0.0;    // nm^2
  double a_syn = 0.0;    // nm^2
  double tau_syn = 0.0;  // ps
  double tau_neu = 0.0;  // ps
  double e_syn = 0.0;    // aJ
  double e_neu = 0.0;    // aJ
  double r_a = 1.0;
  int s_neu = 1;

  /// As an element row with no interconnect terms.
  [[nodiscard]] ElementBench element() const;
};

TopsDownElement topsdown_neuromorphic(const ChipRecord& chip, const GlobalConstants& c);
TopsDownElement topsdown_accelerator(const ChipRecord& chip, const GlobalConstants& c);
TopsDownElement topsdown(const ChipRecord& chip, const GlobalConstants& c);

enum class Identity { throughput, power };  // T = f r_a s_ch ; P = T E

struct BackfillFill {
  ChipField field;
  Identity identity;
  double value = 0.0;
};

struct BackfillResidual {
  Identity identity;
  double relative = 0.0;  // (rhs - lhs) / lhs
};

/// A value the source marked as derived, next to what the identities imply.
struct Rederived {
  ChipField field;
  double quoted = 0.0;
  double implied = 0.0;
};

struct BackfillResult {
  ChipRecord record;
  std::vector<BackfillFill> fills;
  std::vector<BackfillResidual> residuals;
  std::vector<Rederived> rederived;
};

/// Solves each identity that has exactly one absent field. Accelerators only
/// use the power identity. Throws IncomputableError if an identity keeps two
/// or more unknowns.
BackfillResult backfill_derived(const ChipRecord& chip);

double implied_throughput(const ChipRecord& chip);  // f_fire * r_a * s_ch, 1/ps

/// Tops-down element through the workload pipeline: time-multiplexed,
/// sequential for accelerators, unlimited fan-in and spiking for neuromorphic.
WorkloadBench run_workload_on_chip(const Registry& reg, const ChipRecord& chip,
                                   const WorkloadSpec& spec);

std::string_view identity_name(Identity id);

}  // namespace neurobench

#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "binent/inverse.hpp"

namespace binent {

struct SweepConfig {
  double h_min = 0.0;                // nats
  double h_max = std::numbers::ln2;  // nats
  double step = 1e-4;                // nats
  bool with_kimura_crow = true;
  bool with_improved = true;
  SolverConfig solver{};
};

// One grid point of the error sweep. Fields of methods that were not
// requested are NaN and are never serialized.
struct ErrorRow {
  double h = 0.0;  // nats
  double p_exact_lower = 0.0;
  double p_kc_lower = 0.0;
  double p_improved_lower = 0.0;
  double abs_err_kc = 0.0;
  double abs_err_improved = 0.0;
};

struct MethodErrorStats {
  double max_abs_err = 0.0;
  double argmax_h = 0.0;  // nats
  double mean_abs_err = 0.0;
};

struct ErrorSummary {
  std::optional<MethodErrorStats> kimura_crow;
  std::optional<MethodErrorStats> improved;
};

// Column header plus numeric rows, ready for CSV serialization by a front
// end. This module never serializes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// One row per grid point h_min, h_min + step, ... plus h_max (always
// included), ascending in h. Grid points are evaluated in parallel; rows are
// bitwise identical to sweep_serial for the same config.
std::vector<ErrorRow> sweep(const SweepConfig& cfg);

// Single-threaded reference implementation sharing the per-row kernel.
std::vector<ErrorRow> sweep_serial(const SweepConfig& cfg);

ErrorSummary summarize(const std::vector<ErrorRow>& rows);

// which = 1: both branches of the exact inverse and both estimates.
// which = 2: absolute error of each estimate against the exact inverse.
Table figure_data(int which, const SweepConfig& cfg);

}  // namespace binent

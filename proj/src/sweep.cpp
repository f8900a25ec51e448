#include "binent/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "binent/approx.hpp"

namespace binent {
namespace {

void validate(const SweepConfig& cfg) {
  if (!(cfg.h_min >= 0.0) || !(cfg.h_max <= std::numbers::ln2))
    throw std::domain_error("sweep bounds must lie within [0, ln 2] nats");
  if (!(cfg.h_min < cfg.h_max))
    throw std::invalid_argument("sweep needs h_min < h_max");
  if (!(cfg.step > 0.0) || !(cfg.step < cfg.h_max - cfg.h_min))
    throw std::invalid_argument("sweep step must be positive and smaller than the range");
}

// h_min, h_min + step, ... strictly below h_max, then h_max itself.
std::vector<double> make_grid(const SweepConfig& cfg) {
  auto count = static_cast<std::int64_t>(std::floor((cfg.h_max - cfg.h_min) / cfg.step));
  while (count > 0 && cfg.h_min + static_cast<double>(count) * cfg.step >= cfg.h_max)
    --count;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count) + 2);
  for (std::int64_t i = 0; i <= count; ++i)
    grid.push_back(cfg.h_min + static_cast<double>(i) * cfg.step);
  grid.push_back(cfg.h_max);
  return grid;
}

constexpr double not_requested = std::numeric_limits<double>::quiet_NaN();

// Per-row kernel shared by the parallel sweep and the serial reference, so
// the two produce bitwise-identical rows.
ErrorRow compute_row(double h, const SweepConfig& cfg) {
  ErrorRow row{h, 0.0, not_requested, not_requested, not_requested, not_requested};
  const EntropyValue value = EntropyValue::nats(h);
  row.p_exact_lower = invert_exact(value, cfg.solver).lower.value();
  if (cfg.with_kimura_crow) {
    row.p_kc_lower = invert_kimura_crow(value).lower.value();
    row.abs_err_kc = std::abs(row.p_kc_lower - row.p_exact_lower);
  }
  if (cfg.with_improved) {
    row.p_improved_lower = invert_improved(value).lower.value();
    row.abs_err_improved = std::abs(row.p_improved_lower - row.p_exact_lower);
  }
  return row;
}

MethodErrorStats stats_over(const std::vector<ErrorRow>& rows, double ErrorRow::*err) {
  MethodErrorStats stats{0.0, rows.front().h, 0.0};
  double total = 0.0;
  for (const ErrorRow& row : rows) {
    const double e = row.*err;
    total += e;
    if (e > stats.max_abs_err) {
      stats.max_abs_err = e;
      stats.argmax_h = row.h;
    }
  }
  stats.mean_abs_err = total / static_cast<double>(rows.size());
  return stats;
}

}  // namespace

std::vector<ErrorRow> sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = make_grid(cfg);
  std::vector<ErrorRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const auto count = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      rows[static_cast<std::size_t>(i)] = compute_row(grid[static_cast<std::size_t>(i)], cfg);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  // Rethrow the failure at the lowest h so the error is deterministic.
  for (const std::exception_ptr& error : errors)
    if (error) std::rethrow_exception(error);
  return rows;
}

std::vector<ErrorRow> sweep_serial(const SweepConfig& cfg) {
  validate(cfg);
  const std::vector<double> grid = make_grid(cfg);
  std::vector<ErrorRow> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = compute_row(grid[i], cfg);
  return rows;
}

ErrorSummary summarize(const std::vector<ErrorRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("summarize needs at least one row");
  ErrorSummary summary;
  if (!std::isnan(rows.front().abs_err_kc))
    summary.kimura_crow = stats_over(rows, &ErrorRow::abs_err_kc);
  if (!std::isnan(rows.front().abs_err_improved))
    summary.improved = stats_over(rows, &ErrorRow::abs_err_improved);
  return summary;
}

Table figure_data(int which, const SweepConfig& cfg) {
  if (which != 1 && which != 2)
    throw std::invalid_argument("figure number must be 1 or 2");

  SweepConfig full = cfg;  // the figures always show both estimates
  full.with_kimura_crow = true;
  full.with_improved = true;
  const std::vector<ErrorRow> rows = sweep(full);

  Table table;
  table.rows.reserve(rows.size());
  if (which == 1) {
    table.columns = {"h",          "p_exact_lower",    "p_exact_upper",
                     "p_kc_lower", "p_kc_upper",       "p_improved_lower",
                     "p_improved_upper"};
    for (const ErrorRow& row : rows)
      table.rows.push_back({row.h, row.p_exact_lower, 1.0 - row.p_exact_lower,
                            row.p_kc_lower, 1.0 - row.p_kc_lower,
                            row.p_improved_lower, 1.0 - row.p_improved_lower});
  } else {
    table.columns = {"h", "abs_err_kc", "abs_err_improved"};
    for (const ErrorRow& row : rows)
      table.rows.push_back({row.h, row.abs_err_kc, row.abs_err_improved});
  }
  return table;
}

}  // namespace binent

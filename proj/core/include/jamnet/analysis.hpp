#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jamnet/trace.hpp"

namespace jamnet {

/// Definition-1 check: max over nodes of cost_u <= rho(T) + tau, where T is
/// Eve's realized spend recorded in the trace.
bool competitiveness_check(const ExecutionTrace& trace,
                           const std::function<double(double)>& rho, double tau);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares on (log2 x, log2 y). Requires >= 3 points with
/// distinct x; throws std::invalid_argument on non-positive coordinates.
LinearFit loglog_slope(std::span<const std::pair<double, double>> points);

/// One row of runs.csv; analysis never recomputes energy from behaviors, it
/// reads the engine's ledgers.
struct RunRow {
    std::uint64_t run = 0;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::uint32_t channels = 0;
    std::uint64_t t_budget = 0;
    std::uint64_t t_spent = 0;
    std::uint64_t max_cost = 0;
    double mean_cost = 0.0;
    std::uint64_t slots = 0;
    bool success = false;    // all informed and all halted within the limit
    bool safety_ok = false;  // no halt-while-uninformed event
};

RunRow make_run_row(std::uint64_t run, std::uint64_t t_budget, const ExecutionTrace& trace);

struct BatchSummary {
    std::vector<RunRow> runs;
    double success_rate = 0.0;
    std::uint64_t max_cost_p50 = 0;
    std::uint64_t max_cost_p90 = 0;
    std::uint64_t max_cost_p99 = 0;
    bool any_safety_violation = false;
    std::optional<LinearFit> time_fit;  // log completion slots vs log T
    std::optional<LinearFit> cost_fit;  // log max node cost vs log T
};

/// Aggregates a batch; slope fits appear when at least three distinct
/// positive budgets are present (medians per budget).
BatchSummary summarize_batch(std::span<const RunRow> rows);

/// Exact header: run,seed,n,C,T_budget,T_spent,max_cost,mean_cost,slots,success,safety_ok
void write_runs_csv(std::span<const RunRow> rows, std::ostream& out);

/// Per-budget aggregate (median) of a column, ascending by budget.
std::vector<std::pair<double, double>> median_by_budget(
    std::span<const RunRow> rows, const std::function<double(const RunRow&)>& value);

}  // namespace jamnet

#include "jamnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace jamnet {

bool competitiveness_check(const ExecutionTrace& trace,
                           const std::function<double(double)>& rho, double tau) {
    const double bound = rho(static_cast<double>(trace.eve_spend)) + tau;
    return static_cast<double>(trace.max_node_energy()) <= bound;
}

LinearFit loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) throw std::invalid_argument("loglog_slope: need at least 3 points");
    double sx = 0, sy = 0;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("loglog_slope: coordinates must be positive");
        sx += std::log2(x);
        sy += std::log2(y);
    }
    const double inv_n = 1.0 / static_cast<double>(points.size());
    const double mx = sx * inv_n;
    const double my = sy * inv_n;

    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : points) {
        const double dx = std::log2(x) - mx;
        const double dy = std::log2(y) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("loglog_slope: x values must not all coincide");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    const double ss_res = syy - fit.slope * sxy;
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return fit;
}

RunRow make_run_row(std::uint64_t run, std::uint64_t t_budget, const ExecutionTrace& trace) {
    RunRow row;
    row.run = run;
    row.seed = trace.seed;
    row.n = trace.n;
    row.channels = trace.channels;
    row.t_budget = t_budget;
    row.t_spent = trace.eve_spend;
    row.max_cost = trace.max_node_energy();
    row.mean_cost = trace.mean_node_energy();
    row.slots = trace.slots_run;
    row.success = trace.all_informed() && trace.all_halted() && !trace.limit_exhausted;
    row.safety_ok = trace.stats.halt_while_uninformed == 0;
    return row;
}

namespace {

std::uint64_t nearest_rank(std::vector<std::uint64_t>& sorted, double q) {
    if (sorted.empty()) return 0;
    const std::size_t rank =
        static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

}  // namespace

std::vector<std::pair<double, double>> median_by_budget(
    std::span<const RunRow> rows, const std::function<double(const RunRow&)>& value) {
    std::map<std::uint64_t, std::vector<double>> groups;
    for (const RunRow& r : rows) groups[r.t_budget].push_back(value(r));
    std::vector<std::pair<double, double>> out;
    out.reserve(groups.size());
    for (auto& [budget, values] : groups) {
        std::sort(values.begin(), values.end());
        const double median = values[(values.size() - 1) / 2];
        out.emplace_back(static_cast<double>(budget), median);
    }
    return out;
}

BatchSummary summarize_batch(std::span<const RunRow> rows) {
    if (rows.empty()) throw std::invalid_argument("summarize_batch: need at least one run");

    BatchSummary s;
    s.runs.assign(rows.begin(), rows.end());

    std::uint64_t successes = 0;
    std::vector<std::uint64_t> max_costs;
    max_costs.reserve(rows.size());
    for (const RunRow& r : rows) {
        if (r.success) successes += 1;
        if (!r.safety_ok) s.any_safety_violation = true;
        max_costs.push_back(r.max_cost);
    }
    s.success_rate = static_cast<double>(successes) / static_cast<double>(rows.size());

    std::sort(max_costs.begin(), max_costs.end());
    s.max_cost_p50 = nearest_rank(max_costs, 0.50);
    s.max_cost_p90 = nearest_rank(max_costs, 0.90);
    s.max_cost_p99 = nearest_rank(max_costs, 0.99);

    auto positive_budgets = [&rows]() {
        std::vector<std::uint64_t> budgets;
        for (const RunRow& r : rows)
            if (r.t_budget > 0) budgets.push_back(r.t_budget);
        std::sort(budgets.begin(), budgets.end());
        budgets.erase(std::unique(budgets.begin(), budgets.end()), budgets.end());
        return budgets;
    };
    if (positive_budgets().size() >= 3) {
        std::vector<RunRow> budgeted;
        for (const RunRow& r : rows)
            if (r.t_budget > 0) budgeted.push_back(r);
        s.time_fit = loglog_slope(
            median_by_budget(budgeted, [](const RunRow& r) { return static_cast<double>(r.slots); }));
        s.cost_fit = loglog_slope(median_by_budget(
            budgeted, [](const RunRow& r) { return static_cast<double>(r.max_cost); }));
    }
    return s;
}

void write_runs_csv(std::span<const RunRow> rows, std::ostream& out) {
    out << "run,seed,n,C,T_budget,T_spent,max_cost,mean_cost,slots,success,safety_ok\n";
    char mean_buf[32];
    for (const RunRow& r : rows) {
        std::snprintf(mean_buf, sizeof(mean_buf), "%.6g", r.mean_cost);
        out << r.run << ',' << r.seed << ',' << r.n << ',' << r.channels << ',' << r.t_budget
            << ',' << r.t_spent << ',' << r.max_cost << ',' << mean_buf << ',' << r.slots << ','
            << (r.success ? 1 : 0) << ',' << (r.safety_ok ? 1 : 0) << '\n';
    }
}

}  // namespace jamnet

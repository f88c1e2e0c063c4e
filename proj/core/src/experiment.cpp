#include "jamnet/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace jamnet {

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned jobs) {
    const std::vector<std::uint64_t> seeds = config.run_seeds();
    ExperimentResult result;
    result.runs.resize(config.budgets.size() * seeds.size());

    for (std::size_t b = 0; b < config.budgets.size(); ++b) {
        for (std::size_t s = 0; s < seeds.size(); ++s) {
            const std::size_t idx = b * seeds.size() + s;
            result.runs[idx].run_index = idx;
            result.runs[idx].budget = config.budgets[b];
        }
    }

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(result.runs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= result.runs.size()) return;
            RunArtifact& artifact = result.runs[idx];
            const std::uint64_t seed = seeds[idx % seeds.size()];
            artifact.trace = run_execution(engine_config(config, artifact.budget, seed));
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<RunRow> rows;
    rows.reserve(result.runs.size());
    for (const RunArtifact& r : result.runs)
        rows.push_back(make_run_row(r.run_index, r.budget, r.trace));
    result.summary = summarize_batch(rows);
    result.safety_violation = result.summary.any_safety_violation;
    return result;
}

void emit_outputs(const ExperimentConfig& config, const ExperimentResult& result) {
    namespace fs = std::filesystem;
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);

    {
        std::ofstream csv(dir / "runs.csv", std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write runs.csv");
        write_runs_csv(result.summary.runs, csv);
    }

    {
        std::ofstream dat(dir / "scaling.dat", std::ios::binary);
        if (!dat) throw std::runtime_error("cannot write scaling.dat");
        const auto points = median_by_budget(
            result.summary.runs, [](const RunRow& r) { return static_cast<double>(r.slots); });
        char buf[64];
        for (const auto& [budget, slots] : points) {
            std::snprintf(buf, sizeof(buf), "%.0f %.6g\n", budget, slots);
            dat << buf;
        }
    }

    {
        using nlohmann::json;
        json j;
        j["success_rate"] = result.summary.success_rate;
        j["max_cost_quantiles"] = {{"p50", result.summary.max_cost_p50},
                                   {"p90", result.summary.max_cost_p90},
                                   {"p99", result.summary.max_cost_p99}};
        j["any_safety_violation"] = result.summary.any_safety_violation;
        if (result.summary.time_fit) {
            j["time_fit"] = {{"slope", result.summary.time_fit->slope},
                             {"intercept", result.summary.time_fit->intercept},
                             {"r_squared", result.summary.time_fit->r_squared}};
        }
        if (result.summary.cost_fit) {
            j["cost_fit"] = {{"slope", result.summary.cost_fit->slope},
                             {"intercept", result.summary.cost_fit->intercept},
                             {"r_squared", result.summary.cost_fit->r_squared}};
        }
        json runs = json::array();
        for (const RunRow& r : result.summary.runs) {
            runs.push_back({{"run", r.run},
                            {"seed", r.seed},
                            {"T_budget", r.t_budget},
                            {"T_spent", r.t_spent},
                            {"max_cost", r.max_cost},
                            {"mean_cost", r.mean_cost},
                            {"slots", r.slots},
                            {"success", r.success},
                            {"safety_ok", r.safety_ok}});
        }
        j["runs"] = std::move(runs);
        // Timestamps live here and nowhere else in the outputs.
        j["metadata"] = {
            {"generated_at_unix",
             std::chrono::duration_cast<std::chrono::seconds>(
                 std::chrono::system_clock::now().time_since_epoch())
                 .count()},
            {"config_digest", config_digest(config)},
        };
        std::ofstream js(dir / "summary.json", std::ios::binary);
        if (!js) throw std::runtime_error("cannot write summary.json");
        js << j.dump(2) << '\n';
    }

    {
        const fs::path traces = dir / "traces";
        fs::create_directories(traces);
        for (const RunArtifact& r : result.runs) {
            char name[64];
            std::snprintf(name, sizeof(name), "run_%04llu.jsonl",
                          static_cast<unsigned long long>(r.run_index));
            std::ofstream out(traces / name, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write trace file");
            write_trace_jsonl(r.trace, config.trace_mode, out);
        }
    }
}

}  // namespace jamnet

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jamnet/experiment.hpp"
#include "jamnet/one_to_one.hpp"
#include "jamnet/verify/acceptance.hpp"

namespace {

jamnet::ExperimentConfig load_with_env(const std::string& path) {
    jamnet::ExperimentConfig cfg = jamnet::load_config(path);
    if (const char* env = std::getenv("JAMNET_SEED")) cfg.base_seed = std::stoull(env);
    return cfg;
}

int execute_grid(const std::string& config_path, unsigned jobs, bool single_budget_only) {
    const jamnet::ExperimentConfig cfg = load_with_env(config_path);
    if (single_budget_only && cfg.budgets.size() > 1) {
        std::cerr << "run expects a single budget; use `sweep` for budget lists\n";
        return 1;
    }
    const jamnet::ExperimentResult result = jamnet::run_experiment(cfg, jobs);
    jamnet::emit_outputs(cfg, result);
    std::cout << "runs: " << result.summary.runs.size()
              << "  success_rate: " << result.summary.success_rate
              << "  outputs: " << cfg.output_dir << '\n';
    if (result.safety_violation) {
        std::cerr << "safety violation: a node halted while some node was uninformed\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jamnet - resource-competitive broadcast under adversarial jamming"};
    app.require_subcommand(1);

    std::string config_path;
    std::string trace_path;
    std::string out_path;
    unsigned jobs = 0;
    std::uint64_t seed = 0;
    bool one_to_one = false;

    CLI::App* run = app.add_subcommand("run", "execute one experiment configuration");
    run->add_option("config", config_path, "key=value config file")->required();
    run->add_option("--jobs", jobs, "worker threads (default: all cores)");

    CLI::App* sweep = app.add_subcommand("sweep", "execute a budget sweep");
    sweep->add_option("config", config_path, "key=value config file")->required();
    sweep->add_option("--jobs", jobs, "worker threads (default: all cores)");

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--jobs", jobs, "worker threads (default: all cores)");

    CLI::App* trace = app.add_subcommand("trace", "emit one full execution trace");
    trace->add_option("config", config_path, "key=value config file")->required();
    trace->add_option("--seed", seed, "run seed")->required();
    trace->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* adapt = app.add_subcommand("adapt", "replay a trace through the two-party adapter");
    adapt->add_option("trace", trace_path, "full-mode trace (.jsonl)")->required();
    adapt->add_flag("--one-to-one", one_to_one, "broadcast to 1-to-1 simulation");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return execute_grid(config_path, jobs, true);
        if (sweep->parsed()) return execute_grid(config_path, jobs, false);

        if (verify->parsed()) {
            jamnet::verify::AcceptanceOptions options;
            options.jobs = jobs;
            options.progress = &std::cout;
            const auto results = jamnet::verify::run_acceptance(options);
            std::cout << (jamnet::verify::all_passed(results) ? "acceptance: all criteria passed"
                                                              : "acceptance: FAILURES present")
                      << '\n';
            return jamnet::verify::all_passed(results) ? 0 : 1;
        }

        if (trace->parsed()) {
            jamnet::ExperimentConfig cfg = load_with_env(config_path);
            jamnet::EngineConfig engine = jamnet::engine_config(cfg, cfg.budgets.front(), seed);
            engine.trace_mode = jamnet::TraceMode::Full;
            const jamnet::ExecutionTrace result = jamnet::run_execution(engine);
            if (out_path.empty()) {
                jamnet::write_trace_jsonl(result, jamnet::TraceMode::Full, std::cout);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open " + out_path);
                jamnet::write_trace_jsonl(result, jamnet::TraceMode::Full, out);
            }
            return 0;
        }

        if (adapt->parsed()) {
            if (!one_to_one) {
                std::cerr << "adapt requires --one-to-one\n";
                return 1;
            }
            std::ifstream in(trace_path);
            if (!in) throw std::runtime_error("cannot open " + trace_path);
            const jamnet::ExecutionTrace t = jamnet::read_trace_jsonl(in);
            const jamnet::TwoPartyExecution two = jamnet::one_to_one_adapter(t, 0);
            nlohmann::json j;
            j["slots"] = two.slots;
            j["alice_cost"] = two.alice_cost;
            j["bob_cost"] = two.bob_cost;
            j["non_source_cost"] = two.non_source_cost;
            j["outcome_identical"] = two.outcome_identical;
            j["cost_bound_ok"] = two.cost_bound_ok;
            j["bob_informed_at"] =
                two.bob_informed_at ? nlohmann::json(*two.bob_informed_at) : nlohmann::json(nullptr);
            std::cout << j.dump(2) << '\n';
            return two.outcome_identical && two.cost_bound_ok ? 0 : 1;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamnet/analysis.hpp"
#include "jamnet/config.hpp"

namespace jamnet {

/// Outcome of one (budget, seed) cell of the experiment grid.
struct RunArtifact {
    std::uint64_t run_index = 0;
    std::uint64_t budget = 0;
    ExecutionTrace trace;
};

struct ExperimentResult {
    std::vector<RunArtifact> runs;  // ordered by (budget, seed) grid position
    BatchSummary summary;
    bool safety_violation = false;
};

/// Executes the full budgets x seeds grid. Runs are independent; `jobs`
/// worker threads pull from a shared queue, results are ordered by grid
/// position so parallel and serial execution agree byte for byte.
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned jobs = 0);

/// Writes runs.csv, traces/*.jsonl, summary.json and scaling.dat into
/// config.output_dir. scaling.dat holds one `T median_completion_slots` row
/// per budget, ascending by T. Every byte except the summary.json timestamp
/// is determined by (config, seeds).
void emit_outputs(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace jamnet

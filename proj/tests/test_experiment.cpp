#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jamnet/experiment.hpp"

using namespace jamnet;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig small_sweep(const std::string& out_dir) {
    ExperimentConfig cfg = parse_config(
        "protocol=adp\nn=4\nC=2\nadversary=fullprefix\nbudgets=256,512\nseeds=3\n"
        "slot_limit=200000\n");
    cfg.output_dir = out_dir;
    return cfg;
}

}  // namespace

TEST_CASE("a sweep emits the documented artifacts") {
    const fs::path dir = fs::temp_directory_path() / "jamnet_sweep_test";
    fs::remove_all(dir);
    const ExperimentConfig cfg = small_sweep(dir.string());

    const ExperimentResult result = run_experiment(cfg, 1);
    emit_outputs(cfg, result);

    CHECK(result.summary.runs.size() == 6);  // 2 budgets x 3 seeds
    CHECK(!result.safety_violation);

    const std::string csv = read_file(dir / "runs.csv");
    CHECK(csv.rfind("run,seed,n,C,T_budget,T_spent,max_cost,mean_cost,slots,success,safety_ok\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 rows

    const std::string dat = read_file(dir / "scaling.dat");
    std::istringstream lines(dat);
    double prev_t = 0;
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        double t = 0, y = 0;
        ls >> t >> y;
        CHECK(t > prev_t);  // ascending by budget
        prev_t = t;
        rows += 1;
    }
    CHECK(rows == 2);

    CHECK(fs::exists(dir / "summary.json"));
    int traces = 0;
    for (const auto& entry : fs::directory_iterator(dir / "traces")) {
        CHECK(entry.path().extension() == ".jsonl");
        traces += 1;
    }
    CHECK(traces == 6);
    fs::remove_all(dir);
}

TEST_CASE("reruns and parallel runs are byte-identical on runs.csv") {
    const fs::path dir1 = fs::temp_directory_path() / "jamnet_repro_1";
    const fs::path dir2 = fs::temp_directory_path() / "jamnet_repro_2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);

    ExperimentConfig cfg1 = small_sweep(dir1.string());
    ExperimentConfig cfg2 = small_sweep(dir2.string());

    emit_outputs(cfg1, run_experiment(cfg1, 1));
    emit_outputs(cfg2, run_experiment(cfg2, 2));

    CHECK(read_file(dir1 / "runs.csv") == read_file(dir2 / "runs.csv"));
    CHECK(read_file(dir1 / "scaling.dat") == read_file(dir2 / "scaling.dat"));
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("run seeds derive from the base seed through the splitter") {
    ExperimentConfig cfg = parse_config(
        "protocol=adp\nn=4\nC=2\nadversary=nojam\nseeds=4\nseed=777\n");
    const auto seeds = cfg.run_seeds();
    REQUIRE(seeds.size() == 4);
    for (std::uint64_t k = 0; k < 4; ++k) CHECK(seeds[k] == split_seed(777, k));
}

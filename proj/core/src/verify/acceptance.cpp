#include "jamnet/verify/acceptance.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <ostream>
#include <thread>

#include "jamnet/analysis.hpp"
#include "jamnet/analytic.hpp"
#include "jamnet/engine.hpp"
#include "jamnet/jam_classify.hpp"
#include "jamnet/one_to_one.hpp"
#include "jamnet/permutation.hpp"
#include "jamnet/broadcast_adp.hpp"
#include "jamnet/verify/oracles.hpp"

namespace jamnet::verify {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

std::vector<ExecutionTrace> run_batch(const std::vector<EngineConfig>& configs, unsigned jobs) {
    std::vector<ExecutionTrace> out(configs.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(configs.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) return;
            out[i] = run_execution(configs[i]);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1

CriterionResult criterion_feedback_oracle() {
    CriterionResult r{1, "feedback oracle equivalence", true, ""};
    std::uint64_t cases = 0;
    for (std::uint32_t channels = 1; channels <= 3 && r.pass; ++channels) {
        for (std::size_t n = 1; n <= 4 && r.pass; ++n) {
            const std::uint32_t options = 4 * channels;  // {Msg, Beacon, Listen, Idle} x channel
            std::vector<std::uint32_t> code(n, 0);
            std::vector<SlotBehavior> behaviors(n);
            while (true) {
                for (std::size_t u = 0; u < n; ++u) {
                    const std::uint32_t ch = code[u] / 4 + 1;
                    switch (code[u] % 4) {
                        case 0: behaviors[u] = {ch, Action::Send, Payload::Msg}; break;
                        case 1: behaviors[u] = {ch, Action::Send, Payload::Beacon}; break;
                        case 2: behaviors[u] = {ch, Action::Listen, Payload::Beacon}; break;
                        case 3: behaviors[u] = {ch, Action::Idle, Payload::Beacon}; break;
                    }
                }
                for (std::uint32_t jam_bits = 0; jam_bits < (1u << channels); ++jam_bits) {
                    JamSet jam(channels, false);
                    for (std::uint32_t ch = 1; ch <= channels; ++ch)
                        if (jam_bits & (1u << (ch - 1))) jam.set_unjammed(ch, true);
                    if (resolve_slot(behaviors, jam, channels) !=
                        reference_resolve(behaviors, jam, channels)) {
                        r.pass = false;
                        r.detail = fmt("mismatch at n=%zu C=%u jam_bits=%u", n, channels, jam_bits);
                        break;
                    }
                    cases += 1;
                }
                if (!r.pass) break;
                std::size_t pos = 0;
                while (pos < n) {
                    code[pos] += 1;
                    if (code[pos] < options) break;
                    code[pos] = 0;
                    pos += 1;
                }
                if (pos == n) break;
            }
        }
    }
    if (r.pass) r.detail = fmt("%llu joint assignments, exact match", (unsigned long long)cases);
    return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionResult criterion_analytic_oracles() {
    CriterionResult r{2, "analytic-oracle agreement", true, ""};
    const double tol = 5e-12;
    int sandwich_checked = 0;

    for (int trial = 0; trial < 100 && r.pass; ++trial) {
        RngStream rng(0xC2C2C2, 7, static_cast<std::uint64_t>(trial));
        ExactProfile ep;
        ep.channels = 1 + rng.next_below(3);
        const std::size_t n = 2 + rng.next_below(5);  // 2..6
        ep.nodes.resize(n);
        std::uint64_t total_k = 0;
        for (auto& node : ep.nodes) {
            node.k = rng.next_below(129);
            node.informed = rng.next_below(2) == 1;
            total_k += node.k;
        }
        // Enforce P_V <= 1/2, i.e. sum k <= 128 * C, by uniform downscaling.
        const std::uint64_t cap = 128ull * ep.channels;
        if (total_k > cap)
            for (auto& node : ep.nodes) node.k = static_cast<std::uint32_t>(node.k * cap / total_k);

        const ProbabilityProfile profile = ep.to_profile();
        const std::uint64_t base = ep.base();

        for (std::size_t u = 0; u < n && r.pass; ++u) {
            const ExactFraction silence_cf = exact_silence(ep, u);
            const ExactFraction message_cf = exact_message(ep, u);
            for (std::uint32_t ch = 1; ch <= ep.channels; ++ch) {
                if (!(silence_cf == brute_silence(ep, u, ch)) ||
                    !(message_cf == brute_message(ep, u, ch))) {
                    r.pass = false;
                    r.detail = fmt("closed form != enumeration at trial %d node %zu", trial, u);
                    break;
                }
            }
            if (!r.pass) break;

            const AnalyticProbs probs = analytic_probs(profile, u);
            if (std::abs(probs.silence - silence_cf.to_double(base)) > tol ||
                std::abs(probs.message - message_cf.to_double(base)) > tol) {
                r.pass = false;
                r.detail = fmt("binary64 drift at trial %d node %zu", trial, u);
                break;
            }

            const SandwichBounds b = analytic_bounds(profile, u);
            if (!(b.silence_lo <= probs.silence + tol) || !(probs.silence <= b.silence_hi + tol) ||
                !(b.message_lo <= probs.message + tol) || !(probs.message <= b.message_hi + tol)) {
                r.pass = false;
                r.detail = fmt("sandwich violated at trial %d node %zu", trial, u);
                break;
            }
            sandwich_checked += 1;
        }
        if (!r.pass) break;

        for (SuccessScope scope : {SuccessScope::AnyInformed, SuccessScope::SourceOnly}) {
            const ExactFraction success_cf = exact_success(ep, scope);
            for (std::uint32_t ch = 1; ch <= ep.channels; ++ch) {
                if (!(success_cf == brute_success(ep, ch, scope))) {
                    r.pass = false;
                    r.detail = fmt("success closed form != enumeration at trial %d", trial);
                    break;
                }
                if (std::abs(success_probability(profile, ch, scope) - success_cf.to_double(base)) >
                    tol) {
                    r.pass = false;
                    r.detail = fmt("success binary64 drift at trial %d", trial);
                    break;
                }
            }
            if (!r.pass) break;
        }
    }
    if (r.pass)
        r.detail = fmt("100 profiles exact, sandwich held at %d listener checks", sandwich_checked);
    return r;
}

// ---------------------------------------------------------------- criterion 3

CriterionResult criterion_unjammed_completion(unsigned jobs) {
    CriterionResult r{3, "unjammed completion", true, ""};
    const std::uint64_t n = 32;
    const std::uint32_t channels = 4;
    const double a = 2.0;

    const AdpSchedule first = adp_schedule(adp_first_epoch(n, channels), n, channels, a);
    const AdpSchedule second = adp_schedule(first.epoch + 1, n, channels, a);
    const std::uint64_t two_epochs = first.slots + second.slots;

    std::vector<EngineConfig> configs;
    for (int run = 0; run < 100; ++run) {
        EngineConfig cfg;
        cfg.protocol = {ProtocolConfig::Kind::Adp, a};
        cfg.adversary = AdversarySpec::no_jam();
        cfg.n = n;
        cfg.channels = channels;
        cfg.seed = split_seed(0xACC30000, run);
        cfg.slot_limit = 10'000'000;
        configs.push_back(cfg);
    }
    const std::vector<ExecutionTrace> traces = run_batch(configs, jobs);

    int complete_in_two = 0;
    std::uint64_t unsafe_halts = 0;
    for (const ExecutionTrace& t : traces) {
        if (t.all_informed() && t.all_halted() && t.slots_run <= two_epochs) complete_in_two += 1;
        unsafe_halts += t.stats.halt_while_uninformed;
    }
    r.pass = complete_in_two >= 95 && unsafe_halts == 0;
    r.detail = fmt("%d/100 runs done within two epochs (<= %llu slots), %llu unsafe halts",
                   complete_in_two, (unsigned long long)two_epochs,
                   (unsigned long long)unsafe_halts);
    return r;
}

// ------------------------------------------------------------ criteria 4 and 5

struct ScalingData {
    std::vector<std::pair<double, double>> time_points;  // (T, median completion)
    std::vector<std::pair<double, double>> cost_points;  // (T, median max cost)
    std::uint64_t baseline = 0;
    std::uint64_t region_cut = 0;
    std::size_t region_points = 0;
    std::uint64_t unsafe_halts = 0;
    bool ready = false;
};

ScalingData run_scaling_sweep(unsigned jobs) {
    ScalingData data;
    const std::uint64_t n = 32;
    const std::uint32_t channels = 4;
    const double a = 2.0;
    const int seeds = 20;

    auto adp_config = [&](const AdversarySpec& adv, std::uint64_t seed) {
        EngineConfig cfg;
        cfg.protocol = {ProtocolConfig::Kind::Adp, a};
        cfg.adversary = adv;
        cfg.n = n;
        cfg.channels = channels;
        cfg.seed = seed;
        cfg.slot_limit = 20'000'000;
        return cfg;
    };

    // No-jam baseline pins where T/C starts to dominate the schedule constant.
    std::vector<EngineConfig> base_cfgs;
    for (int k = 0; k < 5; ++k)
        base_cfgs.push_back(adp_config(AdversarySpec::no_jam(), split_seed(0xBA5E0000, k)));
    std::vector<ExecutionTrace> base_traces = run_batch(base_cfgs, jobs);
    std::vector<std::uint64_t> base_slots;
    for (const auto& t : base_traces) base_slots.push_back(t.slots_run);
    std::sort(base_slots.begin(), base_slots.end());
    data.baseline = base_slots[base_slots.size() / 2];
    data.region_cut = 2 * data.baseline * channels;

    // The stated budget grid plus its continuation into the dominated region
    // (half-octave steps, 2^19 .. 2^23).
    std::vector<std::uint64_t> budgets = {1ull << 12, 1ull << 14, 1ull << 16, 1ull << 18};
    for (double e = 19.0; e <= 23.0 + 1e-9; e += 0.5)
        budgets.push_back(static_cast<std::uint64_t>(std::llround(std::exp2(e))));

    std::vector<EngineConfig> cfgs;
    std::vector<std::uint64_t> run_budget;
    for (std::uint64_t t : budgets) {
        for (int s = 0; s < seeds; ++s) {
            cfgs.push_back(adp_config(AdversarySpec::full_prefix(t), split_seed(0x5CA1E000 + t, s)));
            run_budget.push_back(t);
        }
    }
    const std::vector<ExecutionTrace> traces = run_batch(cfgs, jobs);

    std::vector<RunRow> rows;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        rows.push_back(make_run_row(i, run_budget[i], traces[i]));
        data.unsafe_halts += traces[i].stats.halt_while_uninformed;
    }

    const auto all_time = median_by_budget(
        rows, [](const RunRow& row) { return static_cast<double>(row.slots); });
    const auto all_cost = median_by_budget(
        rows, [](const RunRow& row) { return static_cast<double>(row.max_cost); });
    for (std::size_t i = 0; i < all_time.size(); ++i) {
        if (all_time[i].first < static_cast<double>(data.region_cut)) continue;
        data.time_points.push_back(all_time[i]);
        data.cost_points.push_back(all_cost[i]);
    }
    data.region_points = data.time_points.size();
    data.ready = true;
    return data;
}

CriterionResult criterion_time_scaling(const ScalingData& data) {
    CriterionResult r{4, "time scaling", false, ""};
    if (data.region_points < 3) {
        r.detail = fmt("only %zu budgets in the dominated region", data.region_points);
        return r;
    }
    const LinearFit fit = loglog_slope(data.time_points);
    r.pass = std::abs(fit.slope - 1.0) <= 0.15;
    r.detail = fmt("slope %.3f (target 1.0 +- 0.15) over %zu budgets with T/C >= 2x baseline %llu",
                   fit.slope, data.region_points, (unsigned long long)data.baseline);
    return r;
}

CriterionResult criterion_energy_scaling(const ScalingData& data) {
    CriterionResult r{5, "energy scaling", false, ""};
    if (data.region_points < 3) {
        r.detail = fmt("only %zu budgets in the dominated region", data.region_points);
        return r;
    }
    const LinearFit fit = loglog_slope(data.cost_points);
    r.pass = std::abs(fit.slope - 0.5) <= 0.15;
    r.detail = fmt("slope %.3f (target 0.5 +- 0.15) over %zu budgets, %llu unsafe halts in sweep",
                   fit.slope, data.region_points, (unsigned long long)data.unsafe_halts);
    return r;
}

// ------------------------------------------------------------ criteria 6 and 7

struct AdvAdpBatch {
    std::uint64_t p_ratio_violations = 0;
    std::uint64_t helper_transitions = 0;
    std::uint64_t bad_estimates = 0;
    std::uint64_t halt_before_helper = 0;
    std::uint64_t halt_while_uninformed = 0;
    std::size_t runs = 0;
};

AdvAdpBatch run_advadp_batch(unsigned jobs) {
    std::vector<EngineConfig> cfgs;
    auto push = [&cfgs](const AdversarySpec& adv, std::uint64_t seed) {
        EngineConfig cfg;
        cfg.protocol = {ProtocolConfig::Kind::AdvAdp, 1.0};
        cfg.adversary = adv;
        cfg.n = 16;
        cfg.channels = 2;
        cfg.seed = seed;
        cfg.slot_limit = 10'000'000;
        cfgs.push_back(cfg);
    };
    for (int s = 0; s < 50; ++s) push(AdversarySpec::no_jam(), split_seed(0xADAD0001, s));
    for (int s = 0; s < 50; ++s)
        push(AdversarySpec::random_budgeted(0.5, 1ull << 20), split_seed(0xADAD0002, s));

    const std::vector<ExecutionTrace> traces = run_batch(cfgs, jobs);
    AdvAdpBatch batch;
    batch.runs = traces.size();
    for (const auto& t : traces) {
        batch.p_ratio_violations += t.stats.p_ratio_violations;
        batch.helper_transitions += t.stats.helper_transitions;
        batch.bad_estimates += t.stats.bad_estimate_transitions;
        batch.halt_before_helper += t.stats.halt_before_helper;
        batch.halt_while_uninformed += t.stats.halt_while_uninformed;
    }
    return batch;
}

CriterionResult criterion_bounded_difference(const AdvAdpBatch& batch) {
    CriterionResult r{6, "bounded working-probability difference", false, ""};
    r.pass = batch.p_ratio_violations == 0;
    r.detail = fmt("%llu ratio violations across %zu runs",
                   (unsigned long long)batch.p_ratio_violations, batch.runs);
    return r;
}

CriterionResult criterion_estimate_quality(const AdvAdpBatch& batch) {
    CriterionResult r{7, "helper estimate quality and halt ordering", false, ""};
    r.pass = batch.bad_estimates == 0 && batch.halt_before_helper == 0 &&
             batch.halt_while_uninformed == 0;
    r.detail = fmt(
        "%llu helper transitions observed, %llu bad estimates, %llu halt-before-helper, "
        "%llu unsafe halts",
        (unsigned long long)batch.helper_transitions, (unsigned long long)batch.bad_estimates,
        (unsigned long long)batch.halt_before_helper,
        (unsigned long long)batch.halt_while_uninformed);
    return r;
}

// ---------------------------------------------------------------- criterion 8

CriterionResult criterion_permutation_invariance() {
    CriterionResult r{8, "permutation invariance", true, ""};

    // Chi-square: i.i.d. behavior pushed through Psi_q with q an adversarial
    // function of the permuted history must keep the per-slot distribution.
    const std::uint32_t channels = 2;
    const std::size_t n = 3;
    const double p = 0.3;
    const int samples = 100000;
    const std::size_t cells_per_node = 3 * channels;
    std::size_t cells = 1;
    for (std::size_t u = 0; u < n; ++u) cells *= cells_per_node;

    std::vector<std::uint64_t> observed(cells, 0);
    JamSet q(channels, true);
    std::vector<SlotBehavior> behavior(n);
    for (int t = 0; t < samples; ++t) {
        for (std::size_t u = 0; u < n; ++u) {
            RngStream rng(0x1A5B, u, static_cast<std::uint64_t>(t));
            behavior[u] = draw_behavior(rng, p, channels, u == 0);
        }
        const std::vector<SlotBehavior> permuted = permute_behavior(q, behavior);

        std::size_t cell = 0;
        for (std::size_t u = 0; u < n; ++u) {
            const auto& b = permuted[u];
            const std::size_t code =
                (b.channel - 1) * 3 + static_cast<std::size_t>(b.action);
            cell = cell * cells_per_node + code;
        }
        observed[cell] += 1;

        // Next q: unjam exactly the channels someone sent on (adaptive rule).
        q.reset(false);
        bool any = false;
        for (const auto& b : permuted)
            if (b.action == Action::Send) {
                q.set_unjammed(b.channel, true);
                any = true;
            }
        if (!any) q.reset(true);
    }

    double chi2 = 0.0;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        double prob = 1.0;
        for (std::size_t u = 0, rem = cell, div = cells / cells_per_node; u < n;
             ++u, div /= cells_per_node) {
            const std::size_t code = rem / div;
            rem %= div;
            const Action act = static_cast<Action>(code % 3);
            prob *= act == Action::Idle ? (1.0 - 2.0 * p) / channels : p / channels;
        }
        const double expected = prob * samples;
        const double diff = static_cast<double>(observed[cell]) - expected;
        chi2 += diff * diff / expected;
    }
    const double critical = chi_square_critical(static_cast<int>(cells) - 1, 0.001);
    if (chi2 >= critical) {
        r.pass = false;
        r.detail = fmt("chi2 %.1f >= critical %.1f", chi2, critical);
        return r;
    }

    // Joint-permutation feedback equivariance, exact.
    int failures = 0;
    for (int t = 0; t < 10000; ++t) {
        RngStream rng(0xE9A1, 11, static_cast<std::uint64_t>(t));
        const std::uint32_t c2 = 1 + rng.next_below(5);
        const std::size_t m = 2 + rng.next_below(5);
        std::vector<SlotBehavior> g(m);
        for (auto& b : g) {
            b.channel = 1 + rng.next_below(c2);
            b.action = static_cast<Action>(rng.next_below(3));
            b.payload = rng.next_below(2) ? Payload::Msg : Payload::Beacon;
        }
        JamSet jam(c2, false);
        for (std::uint32_t ch = 1; ch <= c2; ++ch)
            if (rng.next_below(2)) jam.set_unjammed(ch, true);
        JamSet source(c2, false);
        for (std::uint32_t ch = 1; ch <= c2; ++ch)
            if (rng.next_below(2)) source.set_unjammed(ch, true);

        const ChannelPermutation pi = ChannelPermutation::from_unjammed(source);
        const auto direct = resolve_slot(g, jam, c2);
        const auto mapped = resolve_slot(permute_behavior(pi, g), pi.apply_to(jam), c2);
        if (direct != mapped) failures += 1;
    }
    if (failures > 0) {
        r.pass = false;
        r.detail = fmt("%d equivariance failures", failures);
        return r;
    }
    r.detail = fmt("chi2 %.1f < critical %.1f on %zu cells; equivariance exact on 10000 instances",
                   chi2, critical, cells);
    return r;
}

// ---------------------------------------------------------------- criterion 9

CriterionResult criterion_adapter(unsigned jobs) {
    CriterionResult r{9, "one-to-one simulation adapter", true, ""};
    std::vector<EngineConfig> cfgs;
    for (int t = 0; t < 20; ++t) {
        RngStream rng(0xADA7, 3, static_cast<std::uint64_t>(t));
        EngineConfig cfg;
        cfg.protocol = {ProtocolConfig::Kind::Adp, 2.0};
        cfg.n = 2 + rng.next_below(7);       // 2..8
        cfg.channels = 1 + rng.next_below(3);  // 1..3
        cfg.adversary = (t % 2 == 0) ? AdversarySpec::no_jam()
                                     : AdversarySpec::random_budgeted(0.3, 2000);
        cfg.seed = split_seed(0xADA70000, t);
        cfg.slot_limit = 100'000;
        cfg.trace_mode = TraceMode::Full;
        cfgs.push_back(cfg);
    }
    const std::vector<ExecutionTrace> traces = run_batch(cfgs, jobs);
    for (std::size_t i = 0; i < traces.size(); ++i) {
        if (traces[i].limit_exhausted) {
            r.pass = false;
            r.detail = fmt("trace %zu hit the slot limit", i);
            return r;
        }
        const TwoPartyExecution two = one_to_one_adapter(traces[i], 0);
        if (!two.outcome_identical || !two.cost_bound_ok) {
            r.pass = false;
            r.detail = fmt("trace %zu: identical=%d cost_ok=%d", i, two.outcome_identical ? 1 : 0,
                           two.cost_bound_ok ? 1 : 0);
            return r;
        }
    }
    r.detail = "20 traces outcome-identical, bob cost bounded by non-source cost";
    return r;
}

// --------------------------------------------------------------- criterion 10

CriterionResult criterion_notation_algebra() {
    CriterionResult r{10, "jamming-event notation algebra", true, ""};
    for (int t = 0; t < 10000; ++t) {
        RngStream rng(0xA16E, 5, static_cast<std::uint64_t>(t));
        const std::uint32_t channels = 1 + rng.next_below(10);
        const std::size_t slots = 1 + rng.next_below(60);
        std::vector<std::uint32_t> counts(slots);
        for (auto& c : counts) c = rng.next_below(channels + 1);

        const std::uint64_t dx = 1 + rng.next_below(16);
        const std::uint64_t dy = 1 + rng.next_below(16);
        const Ratio x{rng.next_below(static_cast<std::uint32_t>(dx) + 1), dx};
        const Ratio y{rng.next_below(static_cast<std::uint32_t>(dy) + 1), dy};

        // not E^{(>=y)}(>=x) == E^{(>1-y)}(<x)
        const JamSeverityEvent original{Cmp::GE, x, Cmp::GE, y};
        const JamSeverityEvent negated{Cmp::LT, x, Cmp::GT, one_minus(y)};
        if (classify_jamming(counts, channels, original) ==
            classify_jamming(counts, channels, negated)) {
            r.pass = false;
            r.detail = fmt("identity broke at trial %d", t);
            return r;
        }
    }
    r.detail = "complement identity exact on 10000 random windows";
    return r;
}

void report(const AcceptanceOptions& options, std::vector<CriterionResult>& results,
            CriterionResult result) {
    if (options.progress) {
        *options.progress << (result.pass ? "PASS" : "FAIL") << "  " << result.id << ". "
                          << result.name << " - " << result.detail << '\n';
        options.progress->flush();
    }
    results.push_back(std::move(result));
}

}  // namespace

namespace {

/// Criteria 1 and 2 carry sharp runtime budgets; enforce them.
CriterionResult with_deadline(CriterionResult r, double limit_seconds,
                              std::chrono::steady_clock::time_point started) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (elapsed >= limit_seconds) {
        r.pass = false;
        r.detail += fmt(" [over budget: %.2fs >= %.0fs]", elapsed, limit_seconds);
    } else {
        r.detail += fmt(" [%.2fs]", elapsed);
    }
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> results;
    auto t1 = std::chrono::steady_clock::now();
    report(options, results, with_deadline(criterion_feedback_oracle(), 1.0, t1));
    auto t2 = std::chrono::steady_clock::now();
    report(options, results, with_deadline(criterion_analytic_oracles(), 10.0, t2));
    report(options, results, criterion_unjammed_completion(options.jobs));
    const ScalingData scaling = run_scaling_sweep(options.jobs);
    report(options, results, criterion_time_scaling(scaling));
    report(options, results, criterion_energy_scaling(scaling));
    const AdvAdpBatch batch = run_advadp_batch(options.jobs);
    report(options, results, criterion_bounded_difference(batch));
    report(options, results, criterion_estimate_quality(batch));
    report(options, results, criterion_permutation_invariance());
    report(options, results, criterion_adapter(options.jobs));
    report(options, results, criterion_notation_algebra());
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

void print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
    for (const auto& r : results)
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << " - " << r.detail
            << '\n';
    out << (all_passed(results) ? "acceptance: all criteria passed"
                                : "acceptance: FAILURES present")
        << '\n';
}

}  // namespace jamnet::verify

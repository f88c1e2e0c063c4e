#include "jamnet/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jamnet/broadcast_adp.hpp"
#include "jamnet/broadcast_advadp.hpp"

namespace jamnet {

namespace {

struct HaltEvent {
    std::size_t node;
};

class AdpDriver {
public:
    static constexpr bool kTracksWorkingRatio = false;

    AdpDriver(std::uint64_t n, std::uint32_t channels, double a) {
        nodes_.reserve(n);
        for (std::uint64_t u = 0; u < n; ++u)
            nodes_.emplace_back(n, channels, a, u == 0);
        era_epoch_ = nodes_.front().state().epoch;
        era_slots_ = nodes_.front().epoch_slots();
        n_ = n;
        channels_ = channels;
        a_ = a;
    }

    double p(std::size_t u) const { return nodes_[u].working_probability(); }
    bool informed(std::size_t u) const { return nodes_[u].informed(); }
    bool halted(std::size_t u) const { return nodes_[u].halted(); }
    bool all_halted() const { return halted_count_ == nodes_.size(); }
    int current_super_epoch() const { return -1; }

    void feedback(std::size_t u, const Feedback& fb) { nodes_[u].on_feedback(fb); }

    void end_slot(std::uint64_t slot, TraceStats& stats,
                  std::vector<NodeOutcome>& outcome) {
        for (std::size_t u = 0; u < nodes_.size(); ++u) {
            if (nodes_[u].halted()) continue;
            if (nodes_[u].on_slot_end()) {
                halted_count_ += 1;
                outcome[u].halted_at = slot;
                if (!everyone_informed()) stats.halt_while_uninformed += 1;
            }
        }
        era_slot_ += 1;
        if (era_slot_ == era_slots_) {
            era_ended_ = true;
            era_slot_ = 0;
            era_epoch_ += 1;
            era_slots_ = adp_schedule(era_epoch_, n_, channels_, a_).slots;
        }
    }

    bool consume_era_boundary(std::string& label) {
        if (!era_ended_) return false;
        era_ended_ = false;
        label = "epoch " + std::to_string(era_epoch_ - 1);
        return true;
    }

private:
    bool everyone_informed() const {
        for (const auto& node : nodes_)
            if (!node.informed()) return false;
        return true;
    }

    std::vector<AdpNode> nodes_;
    std::size_t halted_count_ = 0;
    std::uint64_t n_ = 0;
    std::uint32_t channels_ = 0;
    double a_ = 1.0;
    int era_epoch_ = 0;
    std::uint64_t era_slot_ = 0;
    std::uint64_t era_slots_ = 0;
    bool era_ended_ = false;
};

class AdvAdpDriver {
public:
    static constexpr bool kTracksWorkingRatio = true;

    AdvAdpDriver(std::uint64_t n, std::uint32_t channels, double a) {
        nodes_.reserve(n);
        for (std::uint64_t u = 0; u < n; ++u)
            nodes_.emplace_back(channels, a, u == 0);
        n_ = n;
        channels_ = channels;
        a_ = a;
        clock_se_ = advadp_first_super_epoch(channels);
        clock_step_slots_ = advadp_schedule(clock_se_, channels, a).step_slots;
    }

    double p(std::size_t u) const { return nodes_[u].working_probability(); }
    bool informed(std::size_t u) const { return nodes_[u].informed(); }
    bool halted(std::size_t u) const { return nodes_[u].halted(); }
    bool all_halted() const { return halted_count_ == nodes_.size(); }
    int current_super_epoch() const { return clock_se_; }

    void feedback(std::size_t u, const Feedback& fb) { nodes_[u].on_feedback(fb); }

    void end_slot(std::uint64_t slot, TraceStats& stats,
                  std::vector<NodeOutcome>& outcome) {
        for (std::size_t u = 0; u < nodes_.size(); ++u) {
            if (nodes_[u].halted()) continue;
            const AdvAdpTransition t = nodes_[u].on_slot_end();
            if (t == AdvAdpTransition::BecameHelper) {
                stats.helper_transitions += 1;
                const double estimate = *nodes_[u].state().n_estimate;
                const double nn = static_cast<double>(n_);
                if (estimate < nn / 256.0 || estimate > 4.0 * nn)
                    stats.bad_estimate_transitions += 1;
            } else if (t == AdvAdpTransition::Halted) {
                halted_count_ += 1;
                outcome[u].halted_at = slot;
                if (!everyone_informed()) stats.halt_while_uninformed += 1;
                for (std::size_t v = 0; v < nodes_.size(); ++v) {
                    if (v == u) continue;
                    if (nodes_[v].status() == AdvAdpStatus::Init) {
                        stats.halt_before_helper += 1;
                        break;
                    }
                }
            }
        }
        // Dedicated era clock: all nodes share the slot clock, and halted
        // nodes must not stall the bookkeeping.
        clock_slot_ += 1;
        if (clock_slot_ == clock_step_slots_) {
            clock_slot_ = 0;
            era_ended_ = true;
            era_label_ = era_name(clock_se_, clock_phase_, clock_step_);
            clock_step_ += 1;
            if (clock_step_ == 3) {
                clock_step_ = 0;
                clock_phase_ += 1;
                if (clock_phase_ == kAdvAdpPhaseMultiplier * clock_se_) {
                    clock_phase_ = 0;
                    clock_se_ += 1;
                    clock_step_slots_ = advadp_schedule(clock_se_, channels_, a_).step_slots;
                }
            }
        }
    }

    bool consume_era_boundary(std::string& label) {
        if (!era_ended_) return false;
        era_ended_ = false;
        label = era_label_;
        return true;
    }

private:
    static std::string era_name(int se, int phase, int step) {
        return "se " + std::to_string(se) + " phase " + std::to_string(phase) + " step " +
               std::to_string(step + 1);
    }

    bool everyone_informed() const {
        for (const auto& node : nodes_)
            if (!node.informed()) return false;
        return true;
    }

    std::vector<AdvAdpNode> nodes_;
    std::size_t halted_count_ = 0;
    std::uint64_t n_ = 0;
    std::uint32_t channels_ = 0;
    double a_ = 1.0;
    int clock_se_ = 0;
    int clock_phase_ = 0;
    int clock_step_ = 0;
    std::uint64_t clock_slot_ = 0;
    std::uint64_t clock_step_slots_ = 0;
    bool era_ended_ = false;
    std::string era_label_;
};

template <class Driver>
ExecutionTrace run_loop(const EngineConfig& cfg, Driver& driver) {
    const std::uint64_t n = cfg.n;
    const std::uint32_t channels = cfg.channels;
    const bool full = cfg.trace_mode == TraceMode::Full;

    ExecutionTrace trace;
    trace.n = n;
    trace.channels = channels;
    trace.seed = cfg.seed;
    trace.config_digest = cfg.config_digest;
    trace.outcome.assign(n, NodeOutcome{});

    Adversary adversary(cfg.adversary, cfg.seed, channels);
    JamSet jam(channels);
    std::vector<SlotBehavior> behaviors(n);
    std::vector<std::optional<Feedback>> feedback;
    ResolveScratch scratch;
    ProbabilityProfile profile;
    profile.channels = channels;
    profile.nodes.resize(n);
    std::vector<std::uint64_t> energy(n, 0);
    std::vector<std::uint8_t> halted_flags(n, 0);
    std::vector<std::uint8_t> informed_flags(n, 0);

    // Per-node stream bases; the per-slot key is one mix away.
    std::vector<std::uint64_t> rng_base(n);
    for (std::uint64_t u = 0; u < n; ++u)
        rng_base[u] = mix64(cfg.seed + kGoldenGamma * (u + 1));

    const int ratio_guard_epoch = static_cast<int>(std::log2(static_cast<double>(n)));
    std::uint64_t era_start = 0;
    std::uint64_t slot = 0;
    for (; slot < cfg.slot_limit && !driver.all_halted(); ++slot) {
        // (1) current-slot distribution, visible to the white-box adversary
        for (std::uint64_t u = 0; u < n; ++u) {
            const bool h = driver.halted(u);
            profile.nodes[u].p = driver.p(u);
            profile.nodes[u].informed = driver.informed(u);
            profile.nodes[u].active = !h;
            halted_flags[u] = h ? 1 : 0;
            informed_flags[u] = profile.nodes[u].informed ? 1 : 0;
        }

        if constexpr (Driver::kTracksWorkingRatio) {
            if (driver.current_super_epoch() > ratio_guard_epoch) {
                double lo = 2.0, hi = 0.0;
                for (std::uint64_t u = 0; u < n; ++u) {
                    if (halted_flags[u]) continue;
                    lo = std::min(lo, profile.nodes[u].p);
                    hi = std::max(hi, profile.nodes[u].p);
                }
                if (hi > 2.0 * lo) trace.stats.p_ratio_violations += 1;
            }
        }

        // (2) adversary move from full history
        HistoryView history;
        history.slots_elapsed = slot;
        history.eve_spent = adversary.spent();
        history.full_records = full ? &trace.slots : nullptr;
        history.halted = halted_flags;
        history.informed = informed_flags;
        adversary.next_jam_set(history, profile, jam);

        // (3) behavior draws; halted nodes idle at zero charge
        for (std::uint64_t u = 0; u < n; ++u) {
            if (halted_flags[u]) {
                behaviors[u] = SlotBehavior{};
                continue;
            }
            RngStream rng = RngStream::from_key(mix64(rng_base[u] + kGoldenGamma * (slot + 1)));
            behaviors[u] = draw_behavior(rng, profile.nodes[u].p, channels,
                                         profile.nodes[u].informed);
            if (behaviors[u].action != Action::Idle) energy[u] += 1;
        }

        // (4) feedback resolution and (5) delivery to listeners
        resolve_slot_into(behaviors, jam, channels, scratch, feedback);
        for (std::uint64_t u = 0; u < n; ++u)
            if (feedback[u]) driver.feedback(u, *feedback[u]);

        trace.eve_spend = adversary.spent();

        if (full) {
            SlotRecord rec;
            rec.slot = slot;
            rec.jam_unjammed = jam.unjammed_indices();
            rec.behaviors = behaviors;
            rec.feedback = feedback;
            rec.energy_nodes = energy;
            rec.eve_spend = trace.eve_spend;
            trace.slots.push_back(std::move(rec));
        }

        driver.end_slot(slot, trace.stats, trace.outcome);

        if (!full) {
            std::string label;
            if (driver.consume_era_boundary(label)) {
                EraRecord era;
                era.label = label;
                era.start_slot = era_start;
                era.slots = slot + 1 - era_start;
                era.eve_spend = trace.eve_spend;
                era.informed = 0;
                era.halted = 0;
                for (std::uint64_t u = 0; u < n; ++u) {
                    if (driver.informed(u)) era.informed += 1;
                    if (driver.halted(u)) era.halted += 1;
                }
                trace.eras.push_back(std::move(era));
                era_start = slot + 1;
            }
        }
    }

    trace.slots_run = slot;
    trace.limit_exhausted = !driver.all_halted();

    if (!full && slot > era_start) {
        EraRecord era;
        era.label = "partial";
        era.start_slot = era_start;
        era.slots = slot - era_start;
        era.eve_spend = trace.eve_spend;
        era.informed = 0;
        era.halted = 0;
        for (std::uint64_t u = 0; u < n; ++u) {
            if (driver.informed(u)) era.informed += 1;
            if (driver.halted(u)) era.halted += 1;
        }
        era.partial = true;
        trace.eras.push_back(std::move(era));
    }

    for (std::uint64_t u = 0; u < n; ++u) {
        trace.outcome[u].informed = driver.informed(u);
        trace.outcome[u].energy = energy[u];
    }
    return trace;
}

}  // namespace

ExecutionTrace run_execution(const EngineConfig& config) {
    if (config.n < 2) throw std::invalid_argument("run_execution: n must be >= 2");
    if (config.channels == 0) throw std::invalid_argument("run_execution: C must be >= 1");
    if (config.slot_limit == 0) throw std::invalid_argument("run_execution: slot_limit must be >= 1");

    if (config.protocol.kind == ProtocolConfig::Kind::Adp) {
        AdpDriver driver(config.n, config.channels, config.protocol.a);
        return run_loop(config, driver);
    }
    AdvAdpDriver driver(config.n, config.channels, config.protocol.a);
    return run_loop(config, driver);
}

}  // namespace jamnet

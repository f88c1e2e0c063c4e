#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jamnet/radio.hpp"

namespace jamnet {

struct SlotRecord;  // trace.hpp

/// Current-slot distribution of the protocol, before any randomness is
/// drawn: per node its working probability and informed flag. This is what
/// the white-box threshold strategy reads.
struct ProbabilityProfile {
    struct Entry {
        double p = 0.0;
        bool informed = false;
        bool active = true;
    };
    std::uint32_t channels = 1;
    std::vector<Entry> nodes;
};

enum class SuccessScope : std::uint8_t {
    AnyInformed,  // any informed node delivering the message counts
    SourceOnly,   // only deliveries originating at node 0
};

/// Probability that on the given channel exactly one node sends, that node is
/// informed, and at least one uninformed node listens. Exact closed form over
/// the per-node categorical (send p, listen p, idle 1-2p) with uniform
/// channel choice; node 0 is the source for SourceOnly scope.
double success_probability(const ProbabilityProfile& profile, std::uint32_t channel,
                           SuccessScope scope = SuccessScope::AnyInformed);

struct AdversarySpec {
    enum class Kind : std::uint8_t {
        NoJam,
        FullPrefix,         // jam all C channels while budget lasts
        ObliviousSchedule,  // fixed per-slot jam list, ignores history
        RandomBudgeted,     // each channel independently with given density
        ThresholdS,         // jam channels whose success probability exceeds 1/T
    };

    Kind kind = Kind::NoJam;
    std::optional<std::uint64_t> budget;  // energy units T; nullopt = unlimited
    double density = 0.0;                 // RandomBudgeted
    std::vector<std::vector<std::uint32_t>> schedule;  // ObliviousSchedule: jammed channels per slot
    bool source_only = false;             // ThresholdS success scope toggle

    static AdversarySpec no_jam() { return {}; }
    static AdversarySpec full_prefix(std::uint64_t t) {
        AdversarySpec s;
        s.kind = Kind::FullPrefix;
        s.budget = t;
        return s;
    }
    static AdversarySpec random_budgeted(double density, std::uint64_t t) {
        AdversarySpec s;
        s.kind = Kind::RandomBudgeted;
        s.density = density;
        s.budget = t;
        return s;
    }
    static AdversarySpec threshold_s(std::uint64_t t, bool source_only = false) {
        AdversarySpec s;
        s.kind = Kind::ThresholdS;
        s.budget = t;
        s.source_only = source_only;
        return s;
    }
    static AdversarySpec oblivious(std::vector<std::vector<std::uint32_t>> sched,
                                   std::optional<std::uint64_t> t = std::nullopt) {
        AdversarySpec s;
        s.kind = Kind::ObliviousSchedule;
        s.schedule = std::move(sched);
        s.budget = t;
        return s;
    }
};

/// Oblivious schedule file: one line per slot listing the channel indices to
/// jam, comma-separated; an empty line means no jamming. Throws on bad input.
std::vector<std::vector<std::uint32_t>> load_jam_schedule(const std::string& path);

/// Everything Eve may look at when choosing the next jam set. She is adaptive:
/// the full past (behaviors, jam sets, feedback, halts) is visible, but never
/// the current slot's randomness. Full per-slot records are present only when
/// the engine retains them.
struct HistoryView {
    std::uint64_t slots_elapsed = 0;
    std::uint64_t eve_spent = 0;
    const std::vector<SlotRecord>* full_records = nullptr;
    std::span<const std::uint8_t> halted;    // per node
    std::span<const std::uint8_t> informed;  // per node
};

/// Stateful adversary instance for one execution. Budget enforcement is
/// shared across strategies: when the remaining budget cannot cover a
/// requested jam set, the lowest-indexed requested channels are jammed up to
/// the remaining budget and the adversary is depleted for good.
class Adversary {
public:
    Adversary(AdversarySpec spec, std::uint64_t seed, std::uint32_t channels);

    /// Fills `jam` for the current slot and charges the budget ledger.
    void next_jam_set(const HistoryView& history, const ProbabilityProfile& profile,
                      JamSet& jam);

    std::uint64_t spent() const { return spent_; }
    std::uint64_t remaining_budget() const;
    bool depleted() const { return depleted_; }
    const AdversarySpec& spec() const { return spec_; }

private:
    void desired_jams(const HistoryView& history, const ProbabilityProfile& profile,
                      std::vector<std::uint32_t>& out);

    AdversarySpec spec_;
    std::uint64_t seed_;
    std::uint32_t channels_;
    std::uint64_t spent_ = 0;
    bool depleted_ = false;
    std::vector<std::uint32_t> scratch_;
};

}  // namespace jamnet

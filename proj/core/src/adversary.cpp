#include "jamnet/adversary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jamnet {

double success_probability(const ProbabilityProfile& profile, std::uint32_t channel,
                           SuccessScope scope) {
    if (channel < 1 || channel > profile.channels)
        throw std::invalid_argument("success_probability: channel out of range");
    const double c = static_cast<double>(profile.channels);

    // One pass for the shared products, then one term per eligible sender.
    double prod_all_not_send = 1.0;       // over all active nodes: (1 - p/C)
    double prod_uninformed_not_send = 1.0;
    double prod_uninformed_quiet = 1.0;   // (1 - 2p/C): neither sends nor listens here
    for (const auto& e : profile.nodes) {
        if (!e.active) continue;
        prod_all_not_send *= 1.0 - e.p / c;
        if (!e.informed) {
            prod_uninformed_not_send *= 1.0 - e.p / c;
            prod_uninformed_quiet *= 1.0 - 2.0 * e.p / c;
        }
    }
    const double listener_factor = prod_uninformed_not_send - prod_uninformed_quiet;
    if (listener_factor <= 0.0) return 0.0;

    double total = 0.0;
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) {
        const auto& e = profile.nodes[v];
        if (!e.active || !e.informed) continue;
        if (scope == SuccessScope::SourceOnly && v != 0) continue;
        const double not_send_v = 1.0 - e.p / c;
        if (not_send_v <= 0.0) continue;  // p = C impossible under valid profiles
        // Informed peers of v must stay off the channel; uninformed handled below.
        const double prod_informed_others = prod_all_not_send / not_send_v / prod_uninformed_not_send;
        total += (e.p / c) * prod_informed_others * listener_factor;
    }
    return total;
}

std::vector<std::vector<std::uint32_t>> load_jam_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open jam schedule file: " + path);
    std::vector<std::vector<std::uint32_t>> schedule;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::uint32_t> slots;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto first = tok.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = tok.find_last_not_of(" \t\r");
            const std::string trimmed = tok.substr(first, last - first + 1);
            const long value = std::stol(trimmed);
            if (value < 1) throw std::runtime_error("jam schedule: channel index must be >= 1");
            slots.push_back(static_cast<std::uint32_t>(value));
        }
        schedule.push_back(std::move(slots));
    }
    return schedule;
}

Adversary::Adversary(AdversarySpec spec, std::uint64_t seed, std::uint32_t channels)
    : spec_(std::move(spec)), seed_(seed), channels_(channels) {
    if (spec_.kind != AdversarySpec::Kind::NoJam &&
        spec_.kind != AdversarySpec::Kind::ObliviousSchedule && !spec_.budget) {
        throw std::invalid_argument("adversary: this strategy requires a budget");
    }
    if (spec_.kind == AdversarySpec::Kind::RandomBudgeted &&
        (spec_.density < 0.0 || spec_.density > 1.0)) {
        throw std::invalid_argument("adversary: density must lie in [0, 1]");
    }
    for (const auto& slot : spec_.schedule)
        for (std::uint32_t ch : slot)
            if (ch < 1 || ch > channels_)
                throw std::invalid_argument("adversary: schedule channel index out of range");
}

std::uint64_t Adversary::remaining_budget() const {
    if (!spec_.budget) return UINT64_MAX;
    return *spec_.budget - spent_;
}

void Adversary::desired_jams(const HistoryView& history, const ProbabilityProfile& profile,
                             std::vector<std::uint32_t>& out) {
    out.clear();
    switch (spec_.kind) {
        case AdversarySpec::Kind::NoJam:
            break;
        case AdversarySpec::Kind::FullPrefix:
            for (std::uint32_t ch = 1; ch <= channels_; ++ch) out.push_back(ch);
            break;
        case AdversarySpec::Kind::ObliviousSchedule: {
            if (spec_.schedule.empty()) break;
            const std::size_t idx =
                std::min<std::size_t>(history.slots_elapsed, spec_.schedule.size() - 1);
            out = spec_.schedule[idx];  // schedule exhaustion repeats the last entry
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        }
        case AdversarySpec::Kind::RandomBudgeted: {
            RngStream rng(seed_, kAdversaryStream, history.slots_elapsed);
            for (std::uint32_t ch = 1; ch <= channels_; ++ch)
                if (rng.next_bernoulli(spec_.density)) out.push_back(ch);
            break;
        }
        case AdversarySpec::Kind::ThresholdS: {
            const double cut = 1.0 / static_cast<double>(*spec_.budget);
            const SuccessScope scope =
                spec_.source_only ? SuccessScope::SourceOnly : SuccessScope::AnyInformed;
            for (std::uint32_t ch = 1; ch <= channels_; ++ch)
                if (success_probability(profile, ch, scope) > cut) out.push_back(ch);
            break;
        }
    }
}

void Adversary::next_jam_set(const HistoryView& history, const ProbabilityProfile& profile,
                             JamSet& jam) {
    jam.reset(true);
    if (depleted_) return;

    desired_jams(history, profile, scratch_);
    if (scratch_.empty()) return;

    std::uint64_t affordable = scratch_.size();
    if (spec_.budget) {
        const std::uint64_t remaining = *spec_.budget - spent_;
        if (remaining < affordable) {
            affordable = remaining;
            depleted_ = true;  // partial coverage: stop jamming for good afterwards
        }
    }
    // desired_jams emits ascending channel indices, so truncation keeps the
    // lowest-indexed channels.
    for (std::uint64_t k = 0; k < affordable; ++k) jam.set_unjammed(scratch_[k], false);
    spent_ += affordable;
}

}  // namespace jamnet

#include "jamnet/verify/oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace jamnet::verify {

std::vector<std::optional<Feedback>> reference_resolve(std::span<const SlotBehavior> behaviors,
                                                       const JamSet& jam,
                                                       std::uint32_t channels) {
    (void)channels;
    std::vector<std::optional<Feedback>> out(behaviors.size());
    for (std::size_t u = 0; u < behaviors.size(); ++u) {
        if (behaviors[u].action != Action::Listen) continue;
        const std::uint32_t ch = behaviors[u].channel;
        if (!jam.is_unjammed(ch)) {
            out[u] = Feedback::noise();
            continue;
        }
        int senders = 0;
        Payload heard = Payload::Beacon;
        for (std::size_t v = 0; v < behaviors.size(); ++v) {
            if (behaviors[v].action == Action::Send && behaviors[v].channel == ch) {
                senders += 1;
                heard = behaviors[v].payload;
            }
        }
        if (senders == 0) out[u] = Feedback::silence();
        else if (senders == 1) out[u] = Feedback::received(heard);
        else out[u] = Feedback::noise();
    }
    return out;
}

ProbabilityProfile ExactProfile::to_profile() const {
    ProbabilityProfile p;
    p.channels = channels;
    p.nodes.reserve(nodes.size());
    for (const Node& n : nodes)
        p.nodes.push_back({static_cast<double>(n.k) / 256.0, n.informed, true});
    return p;
}

double ExactFraction::to_double(std::uint64_t base) const {
    double value = static_cast<double>(num);
    for (int i = 0; i < power; ++i) value /= static_cast<double>(base);
    return value;
}

ExactFraction exact_silence(const ExactProfile& profile, std::size_t node) {
    const std::uint64_t base = profile.base();
    ExactFraction f{1, 0};
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) {
        if (v == node) continue;
        f.num *= base - profile.nodes[v].k;
        f.power += 1;
    }
    return f;
}

ExactFraction exact_message(const ExactProfile& profile, std::size_t node) {
    const std::uint64_t base = profile.base();
    ExactFraction f{0, static_cast<int>(profile.nodes.size()) - 1};
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) {
        if (v == node || !profile.nodes[v].informed) continue;
        unsigned __int128 term = profile.nodes[v].k;
        for (std::size_t w = 0; w < profile.nodes.size(); ++w) {
            if (w == node || w == v) continue;
            term *= base - profile.nodes[w].k;
        }
        f.num += term;
    }
    return f;
}

ExactFraction exact_success(const ExactProfile& profile, SuccessScope scope) {
    const std::uint64_t base = profile.base();
    // Uninformed-listener factor: prod(1 - p/C) - prod(1 - 2p/C), over the
    // uninformed nodes, with denominator base^{#uninformed}.
    unsigned __int128 not_send = 1;
    unsigned __int128 quiet = 1;
    int uninformed = 0;
    for (const auto& n : profile.nodes) {
        if (n.informed) continue;
        not_send *= base - n.k;
        quiet *= base - 2ull * n.k;
        uninformed += 1;
    }
    const unsigned __int128 listener_factor = not_send - quiet;

    ExactFraction f{0, static_cast<int>(profile.nodes.size())};
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) {
        if (!profile.nodes[v].informed) continue;
        if (scope == SuccessScope::SourceOnly && v != 0) continue;
        unsigned __int128 term = profile.nodes[v].k;
        for (std::size_t w = 0; w < profile.nodes.size(); ++w) {
            if (w == v || !profile.nodes[w].informed) continue;
            term *= base - profile.nodes[w].k;
        }
        f.num += term * listener_factor;
    }
    (void)uninformed;
    return f;
}

namespace {

// Per-node outcome weights: index encodes (channel - 1) * 3 + action with
// action 0 = send, 1 = listen, 2 = idle. Weight numerators over base: send
// and listen on a given channel weigh k, idle weighs 256 - 2k.
struct Enumerator {
    const ExactProfile& profile;
    std::vector<std::size_t> participants;  // node indices being enumerated
    std::vector<std::uint32_t> outcome;     // current outcome per participant

    explicit Enumerator(const ExactProfile& p) : profile(p) {}

    std::uint64_t weight(std::size_t participant_idx, std::uint32_t code) const {
        const auto& node = profile.nodes[participants[participant_idx]];
        const std::uint32_t action = code % 3;
        if (action == 2) return 256ull - 2ull * node.k;
        return node.k;
    }

    template <class EventFn>
    ExactFraction sum(EventFn&& event) {
        const std::uint32_t radix = 3 * profile.channels;
        outcome.assign(participants.size(), 0);
        ExactFraction total{0, static_cast<int>(participants.size())};
        while (true) {
            unsigned __int128 w = 1;
            for (std::size_t i = 0; i < participants.size(); ++i) w *= weight(i, outcome[i]);
            if (w != 0 && event(outcome)) total.num += w;

            // next mixed-radix outcome
            std::size_t pos = 0;
            while (pos < outcome.size()) {
                outcome[pos] += 1;
                if (outcome[pos] < radix) break;
                outcome[pos] = 0;
                pos += 1;
            }
            if (pos == outcome.size()) break;
        }
        return total;
    }

    static std::uint32_t channel_of(std::uint32_t code) { return code / 3 + 1; }
    static bool sends(std::uint32_t code) { return code % 3 == 0; }
    static bool listens(std::uint32_t code) { return code % 3 == 1; }
};

}  // namespace

ExactFraction brute_silence(const ExactProfile& profile, std::size_t node, std::uint32_t channel) {
    Enumerator e(profile);
    for (std::size_t v = 0; v < profile.nodes.size(); ++v)
        if (v != node) e.participants.push_back(v);
    return e.sum([&](const std::vector<std::uint32_t>& outcome) {
        for (std::size_t i = 0; i < outcome.size(); ++i)
            if (Enumerator::sends(outcome[i]) && Enumerator::channel_of(outcome[i]) == channel)
                return false;
        return true;
    });
}

ExactFraction brute_message(const ExactProfile& profile, std::size_t node, std::uint32_t channel) {
    Enumerator e(profile);
    for (std::size_t v = 0; v < profile.nodes.size(); ++v)
        if (v != node) e.participants.push_back(v);
    return e.sum([&](const std::vector<std::uint32_t>& outcome) {
        int senders = 0;
        bool informed_sender = false;
        for (std::size_t i = 0; i < outcome.size(); ++i) {
            if (Enumerator::sends(outcome[i]) && Enumerator::channel_of(outcome[i]) == channel) {
                senders += 1;
                informed_sender = profile.nodes[e.participants[i]].informed;
            }
        }
        return senders == 1 && informed_sender;
    });
}

ExactFraction brute_success(const ExactProfile& profile, std::uint32_t channel,
                            SuccessScope scope) {
    Enumerator e(profile);
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) e.participants.push_back(v);
    return e.sum([&](const std::vector<std::uint32_t>& outcome) {
        int senders = 0;
        std::size_t sender = 0;
        bool uninformed_listener = false;
        for (std::size_t i = 0; i < outcome.size(); ++i) {
            if (Enumerator::sends(outcome[i]) && Enumerator::channel_of(outcome[i]) == channel) {
                senders += 1;
                sender = e.participants[i];
            }
            if (Enumerator::listens(outcome[i]) && Enumerator::channel_of(outcome[i]) == channel &&
                !profile.nodes[e.participants[i]].informed)
                uninformed_listener = true;
        }
        if (senders != 1 || !uninformed_listener) return false;
        if (!profile.nodes[sender].informed) return false;
        if (scope == SuccessScope::SourceOnly && sender != 0) return false;
        return true;
    });
}

double chi_square_critical(int dof, double significance) {
    if (dof < 1) throw std::invalid_argument("chi_square_critical: dof must be >= 1");
    // Wilson-Hilferty: chi2_q ~ dof * (1 - 2/(9 dof) + z_q sqrt(2/(9 dof)))^3.
    // z for the common upper-tail significances used here.
    double z;
    if (significance <= 0.001) z = 3.090232306167814;
    else if (significance <= 0.01) z = 2.3263478740408408;
    else if (significance <= 0.05) z = 1.6448536269514722;
    else z = 1.2815515655446004;
    const double d = static_cast<double>(dof);
    const double term = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
    return d * term * term * term;
}

}  // namespace jamnet::verify

#include "jamnet/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jamnet {

namespace {

using nlohmann::json;

const char* action_name(Action a) {
    switch (a) {
        case Action::Send: return "send";
        case Action::Listen: return "listen";
        case Action::Idle: return "idle";
    }
    return "idle";
}

Action action_from(const std::string& s) {
    if (s == "send") return Action::Send;
    if (s == "listen") return Action::Listen;
    if (s == "idle") return Action::Idle;
    throw std::runtime_error("trace: unknown action '" + s + "'");
}

const char* payload_name(Payload p) { return p == Payload::Msg ? "msg" : "beacon"; }

Payload payload_from(const std::string& s) {
    if (s == "msg") return Payload::Msg;
    if (s == "beacon") return Payload::Beacon;
    throw std::runtime_error("trace: unknown payload '" + s + "'");
}

json behavior_to_json(const SlotBehavior& b) {
    json j;
    j["ch"] = b.channel;
    j["act"] = action_name(b.action);
    if (b.action == Action::Send) j["payload"] = payload_name(b.payload);
    return j;
}

SlotBehavior behavior_from_json(const json& j) {
    SlotBehavior b;
    b.channel = j.at("ch").get<std::uint32_t>();
    b.action = action_from(j.at("act").get<std::string>());
    if (b.action == Action::Send) b.payload = payload_from(j.at("payload").get<std::string>());
    return b;
}

json feedback_to_json(const std::optional<Feedback>& fb) {
    if (!fb) return nullptr;
    switch (fb->kind) {
        case Feedback::Kind::Silence: return "silence";
        case Feedback::Kind::Noise: return "noise";
        case Feedback::Kind::Received: {
            json j;
            j["received"] = payload_name(fb->payload);
            return j;
        }
    }
    return nullptr;
}

std::optional<Feedback> feedback_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "silence") return Feedback::silence();
        if (s == "noise") return Feedback::noise();
        throw std::runtime_error("trace: unknown feedback '" + s + "'");
    }
    return Feedback::received(payload_from(j.at("received").get<std::string>()));
}

json slot_to_json(const SlotRecord& r) {
    json j;
    j["slot"] = r.slot;
    j["jam_unjammed"] = r.jam_unjammed;
    json behaviors = json::array();
    for (const auto& b : r.behaviors) behaviors.push_back(behavior_to_json(b));
    j["behaviors"] = std::move(behaviors);
    json feedback = json::array();
    for (const auto& fb : r.feedback) feedback.push_back(feedback_to_json(fb));
    j["feedback"] = std::move(feedback);
    j["energy_nodes"] = r.energy_nodes;
    j["eve_spend"] = r.eve_spend;
    return j;
}

json outcome_to_json(const ExecutionTrace& t) {
    json nodes = json::array();
    for (const auto& o : t.outcome) {
        json n;
        n["halted_at"] = o.halted_at ? json(*o.halted_at) : json(nullptr);
        n["informed"] = o.informed;
        n["energy"] = o.energy;
        nodes.push_back(std::move(n));
    }
    json j;
    j["outcome"] = {
        {"nodes", std::move(nodes)},
        {"eve_spend", t.eve_spend},
        {"seed", t.seed},
        {"config_digest", t.config_digest},
        {"n", t.n},
        {"channels", t.channels},
        {"slots_run", t.slots_run},
        {"limit_exhausted", t.limit_exhausted},
    };
    return j;
}

}  // namespace

void write_trace_jsonl(const ExecutionTrace& trace, TraceMode mode, std::ostream& out) {
    if (mode == TraceMode::Full) {
        for (const auto& r : trace.slots) out << slot_to_json(r).dump() << '\n';
    } else {
        for (const auto& e : trace.eras) {
            json j;
            j["epoch"] = e.label;
            j["start_slot"] = e.start_slot;
            j["slots"] = e.slots;
            j["eve_spend"] = e.eve_spend;
            j["informed"] = e.informed;
            j["halted"] = e.halted;
            if (e.partial) j["partial"] = true;
            out << j.dump() << '\n';
        }
    }
    out << outcome_to_json(trace).dump() << '\n';
}

std::string trace_to_jsonl(const ExecutionTrace& trace, TraceMode mode) {
    std::ostringstream ss;
    write_trace_jsonl(trace, mode, ss);
    return ss.str();
}

ExecutionTrace read_trace_jsonl(std::istream& in) {
    ExecutionTrace t;
    std::string line;
    bool saw_outcome = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (j.contains("outcome")) {
            const json& o = j["outcome"];
            for (const auto& n : o.at("nodes")) {
                NodeOutcome node;
                if (!n.at("halted_at").is_null())
                    node.halted_at = n.at("halted_at").get<std::uint64_t>();
                node.informed = n.at("informed").get<bool>();
                node.energy = n.at("energy").get<std::uint64_t>();
                t.outcome.push_back(node);
            }
            t.eve_spend = o.at("eve_spend").get<std::uint64_t>();
            t.seed = o.at("seed").get<std::uint64_t>();
            t.config_digest = o.at("config_digest").get<std::string>();
            t.n = o.at("n").get<std::uint64_t>();
            t.channels = o.at("channels").get<std::uint32_t>();
            t.slots_run = o.at("slots_run").get<std::uint64_t>();
            t.limit_exhausted = o.at("limit_exhausted").get<bool>();
            saw_outcome = true;
        } else if (j.contains("slot")) {
            SlotRecord r;
            r.slot = j.at("slot").get<std::uint64_t>();
            r.jam_unjammed = j.at("jam_unjammed").get<std::vector<std::uint32_t>>();
            for (const auto& b : j.at("behaviors")) r.behaviors.push_back(behavior_from_json(b));
            for (const auto& fb : j.at("feedback")) r.feedback.push_back(feedback_from_json(fb));
            r.energy_nodes = j.at("energy_nodes").get<std::vector<std::uint64_t>>();
            r.eve_spend = j.at("eve_spend").get<std::uint64_t>();
            t.slots.push_back(std::move(r));
        }
        // era lines are summaries; the reader serves the adapter, which needs slots
    }
    if (!saw_outcome) throw std::runtime_error("trace: missing outcome block");
    return t;
}

}  // namespace jamnet

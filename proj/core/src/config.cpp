#include "jamnet/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace jamnet {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(const std::string& field, const std::string& value) {
    try {
        if (value.empty() || value[0] == '-') throw std::invalid_argument("negative");
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(ConfigError::Kind::BadValue, field,
                          field + ": expected an unsigned integer, got '" + value + "'");
    }
}

double parse_double(const std::string& field, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(ConfigError::Kind::BadValue, field,
                          field + ": expected a number, got '" + value + "'");
    }
}

std::vector<std::uint64_t> parse_u64_list(const std::string& field, const std::string& value) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        out.push_back(parse_u64(field, tok));
    }
    if (out.empty())
        throw ConfigError(ConfigError::Kind::BadValue, field, field + ": empty list");
    return out;
}

}  // namespace

std::vector<std::uint64_t> ExperimentConfig::run_seeds() const {
    if (!seed_list.empty()) return seed_list;
    std::vector<std::uint64_t> out;
    out.reserve(seeds);
    for (std::uint64_t k = 0; k < seeds; ++k) out.push_back(split_seed(base_seed, k));
    return out;
}

ExperimentConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ConfigError::Kind::BadValue, line, "expected key=value, got '" + line + "'");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    static const char* known[] = {"protocol", "n", "C", "adversary", "budget", "budgets",
                                  "density", "schedule_file", "source_only", "seeds",
                                  "seed_list", "seed", "a", "b", "slot_limit", "trace_mode",
                                  "output_dir"};
    for (const auto& [key, value] : kv) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&key](const char* k) { return key == k; }) == std::end(known))
            throw ConfigError(ConfigError::Kind::UnknownKey, key, "unknown key '" + key + "'");
    }

    auto require = [&kv](const char* field) -> const std::string& {
        auto it = kv.find(field);
        if (it == kv.end())
            throw ConfigError(ConfigError::Kind::MissingKey, field,
                              std::string("missing required key '") + field + "'");
        return it->second;
    };

    ExperimentConfig cfg;

    const std::string& proto = require("protocol");
    if (proto == "adp") cfg.protocol = ProtocolConfig::Kind::Adp;
    else if (proto == "advadp") cfg.protocol = ProtocolConfig::Kind::AdvAdp;
    else
        throw ConfigError(ConfigError::Kind::BadValue, "protocol",
                          "protocol must be adp or advadp, got '" + proto + "'");

    cfg.n = parse_u64("n", require("n"));
    if (cfg.n < 2)
        throw ConfigError(ConfigError::Kind::OutOfRange, "n", "broadcast needs n >= 2");
    cfg.channels = static_cast<std::uint32_t>(parse_u64("C", require("C")));
    if (cfg.channels < 1)
        throw ConfigError(ConfigError::Kind::OutOfRange, "C", "need at least one channel");

    const std::string& adv = require("adversary");
    if (adv == "nojam") cfg.adversary = AdversarySpec::Kind::NoJam;
    else if (adv == "fullprefix") cfg.adversary = AdversarySpec::Kind::FullPrefix;
    else if (adv == "oblivious") cfg.adversary = AdversarySpec::Kind::ObliviousSchedule;
    else if (adv == "randombudgeted") cfg.adversary = AdversarySpec::Kind::RandomBudgeted;
    else if (adv == "thresholds") cfg.adversary = AdversarySpec::Kind::ThresholdS;
    else
        throw ConfigError(ConfigError::Kind::BadValue, "adversary",
                          "adversary must be one of nojam, fullprefix, oblivious, "
                          "randombudgeted, thresholds; got '" + adv + "'");

    if (kv.count("budget") && kv.count("budgets"))
        throw ConfigError(ConfigError::Kind::BadValue, "budget",
                          "give either budget or budgets, not both");
    if (kv.count("budget")) cfg.budgets = {parse_u64("budget", kv.at("budget"))};
    if (kv.count("budgets")) cfg.budgets = parse_u64_list("budgets", kv.at("budgets"));

    const bool needs_budget = cfg.adversary == AdversarySpec::Kind::FullPrefix ||
                              cfg.adversary == AdversarySpec::Kind::RandomBudgeted ||
                              cfg.adversary == AdversarySpec::Kind::ThresholdS;
    if (needs_budget && cfg.budgets.empty())
        throw ConfigError(ConfigError::Kind::MissingKey, "budget",
                          "adversary '" + adv + "' requires budget or budgets");
    if (needs_budget)
        for (std::uint64_t t : cfg.budgets)
            if (t == 0)
                throw ConfigError(ConfigError::Kind::OutOfRange, "budget",
                                  "budgets must be positive for '" + adv + "'");
    if (cfg.budgets.empty()) cfg.budgets = {0};

    if (kv.count("density")) {
        cfg.density = parse_double("density", kv.at("density"));
        if (cfg.density < 0.0 || cfg.density > 1.0)
            throw ConfigError(ConfigError::Kind::OutOfRange, "density",
                              "density must lie in [0, 1]");
    }
    if (kv.count("schedule_file")) cfg.schedule_file = kv.at("schedule_file");
    if (cfg.adversary == AdversarySpec::Kind::ObliviousSchedule && cfg.schedule_file.empty())
        throw ConfigError(ConfigError::Kind::MissingKey, "schedule_file",
                          "oblivious adversary requires schedule_file");
    if (kv.count("source_only"))
        cfg.source_only = parse_u64("source_only", kv.at("source_only")) != 0;

    if (kv.count("seed_list")) cfg.seed_list = parse_u64_list("seed_list", kv.at("seed_list"));
    if (kv.count("seeds")) cfg.seeds = parse_u64("seeds", kv.at("seeds"));
    if (cfg.seed_list.empty() && cfg.seeds == 0)
        throw ConfigError(ConfigError::Kind::MissingKey, "seeds",
                          "need seeds count or seed_list");
    if (kv.count("seed")) cfg.base_seed = parse_u64("seed", kv.at("seed"));

    if (kv.count("a")) {
        cfg.a = parse_double("a", kv.at("a"));
        if (cfg.a < 1.0)
            throw ConfigError(ConfigError::Kind::OutOfRange, "a", "a must be >= 1");
    }
    if (kv.count("b")) {
        cfg.b = static_cast<int>(parse_u64("b", kv.at("b")));
        if (cfg.b != 20)
            throw ConfigError(ConfigError::Kind::OutOfRange, "b",
                              "b is fixed at 20 per the algorithm");
    }
    if (kv.count("slot_limit")) {
        cfg.slot_limit = parse_u64("slot_limit", kv.at("slot_limit"));
        if (cfg.slot_limit == 0)
            throw ConfigError(ConfigError::Kind::OutOfRange, "slot_limit",
                              "slot_limit must be >= 1");
    }
    if (kv.count("trace_mode")) {
        const std::string& mode = kv.at("trace_mode");
        if (mode == "compact") cfg.trace_mode = TraceMode::Compact;
        else if (mode == "full") cfg.trace_mode = TraceMode::Full;
        else
            throw ConfigError(ConfigError::Kind::BadValue, "trace_mode",
                              "trace_mode must be compact or full, got '" + mode + "'");
    }
    if (kv.count("output_dir")) cfg.output_dir = kv.at("output_dir");

    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_digest(const ExperimentConfig& cfg) {
    std::ostringstream canon;
    canon << "protocol=" << (cfg.protocol == ProtocolConfig::Kind::Adp ? "adp" : "advadp")
          << ";n=" << cfg.n << ";C=" << cfg.channels
          << ";adversary=" << static_cast<int>(cfg.adversary) << ";budgets=";
    for (std::uint64_t t : cfg.budgets) canon << t << ',';
    canon << ";density=" << cfg.density << ";schedule=" << cfg.schedule_file
          << ";source_only=" << cfg.source_only << ";seed=" << cfg.base_seed << ";seeds=";
    for (std::uint64_t s : cfg.run_seeds()) canon << s << ',';
    canon << ";a=" << cfg.effective_a() << ";slot_limit=" << cfg.slot_limit;

    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (unsigned char ch : canon.str()) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

EngineConfig engine_config(const ExperimentConfig& cfg, std::uint64_t budget, std::uint64_t seed) {
    EngineConfig e;
    e.protocol.kind = cfg.protocol == ProtocolConfig::Kind::Adp ? ProtocolConfig::Kind::Adp
                                                                : ProtocolConfig::Kind::AdvAdp;
    e.protocol.a = cfg.effective_a();
    e.n = cfg.n;
    e.channels = cfg.channels;
    e.seed = seed;
    e.slot_limit = cfg.slot_limit;
    e.trace_mode = cfg.trace_mode;
    e.config_digest = config_digest(cfg);

    AdversarySpec spec;
    spec.kind = cfg.adversary;
    if (budget > 0) spec.budget = budget;
    spec.density = cfg.density;
    spec.source_only = cfg.source_only;
    if (cfg.adversary == AdversarySpec::Kind::ObliviousSchedule && !cfg.schedule_file.empty())
        spec.schedule = load_jam_schedule(cfg.schedule_file);
    e.adversary = std::move(spec);
    return e;
}

}  // namespace jamnet

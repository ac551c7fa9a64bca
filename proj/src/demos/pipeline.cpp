#include "hima/demos/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hima::demos {

std::vector<DemoSample> extract_samples(const ReplayLog& log, const PipelineConfig& cfg,
                                        int player) {
    std::vector<std::size_t> own;
    for (std::size_t i = 0; i < log.events.size(); ++i)
        if (log.events[i].player == player) own.push_back(i);
    if (own.empty()) throw EmptyReplay();

    std::vector<DemoSample> samples;
    int last_t = -1;
    for (std::size_t pos = 0; pos < own.size(); ++pos) {
        int t = log.events[own[pos]].t;
        if (t == last_t) continue;  // one sample per distinct timestamp
        last_t = t;

        DemoSample s;
        s.state_text = log.snapshots[own[pos]];
        s.replay_id = log.meta.id;
        s.t = t;
        for (std::size_t j = pos; j < own.size(); ++j) {
            const ReplayEvent& ev = log.events[own[j]];
            if (ev.t >= t + cfg.window_seconds) break;
            s.window.push_back({ev.action_id, ev.t - t});
        }
        samples.push_back(std::move(s));
    }
    return samples;
}

namespace {

std::string describe_action(const world::ActionSpec& spec) {
    using world::ActionCategory;
    if (spec.category == ActionCategory::GeneralCommand) {
        if (spec.id == "Attack") return "commit the army to an attack";
        if (spec.id == "Scout") return "gather intelligence on the opponent";
        return "use " + spec.id;
    }
    if (spec.supply_granted > 0) return "raise the supply headroom with " + spec.id;
    if (spec.category == ActionCategory::UnitProduction) {
        if (spec.strength <= 0.0) return "reinforce the economy with " + spec.id;
        return spec.air ? "add air power with " + spec.id
                        : "strengthen the ground army with " + spec.id;
    }
    if (spec.category == ActionCategory::TechnologyDevelopment)
        return "invest in technology with " + spec.id;
    return "expand infrastructure with " + spec.id;
}

std::string timeframe_sentence(const std::vector<const world::ActionSpec*>& specs) {
    if (specs.empty()) return "hold course and let current production finish.";
    // Collapse repeats, keep first-seen order.
    std::vector<std::pair<const world::ActionSpec*, int>> grouped;
    for (const auto* s : specs) {
        if (!grouped.empty() && grouped.back().first->id == s->id) {
            ++grouped.back().second;
            continue;
        }
        auto it = std::find_if(grouped.begin(), grouped.end(),
                               [&](const auto& g) { return g.first->id == s->id; });
        if (it != grouped.end())
            ++it->second;
        else
            grouped.push_back({s, 1});
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < grouped.size(); ++i) {
        if (i) out << (i + 1 == grouped.size() ? ", then " : ", ");
        out << describe_action(*grouped[i].first);
        if (grouped[i].second > 1) out << " (x" << grouped[i].second << ")";
    }
    out << ".";
    return out.str();
}

std::string template_rationale(const std::vector<advisors::WindowEntry>& window, int delta,
                               const world::ActionCatalog& catalog) {
    std::vector<const world::ActionSpec*> immediate, shortterm, longterm;
    int air_units = 0, ground_units = 0;
    for (const auto& entry : window) {
        const world::ActionSpec* spec = catalog.find(entry.action_id);
        if (!spec) continue;
        if (entry.offset < delta / 3)
            immediate.push_back(spec);
        else if (entry.offset < 2 * delta / 3)
            shortterm.push_back(spec);
        else
            longterm.push_back(spec);
        if (spec->category == world::ActionCategory::UnitProduction && spec->strength > 0.0)
            (spec->air ? air_units : ground_units) += 1;
    }
    std::string direction = "keep a balanced army composition";
    if (air_units > 2 * ground_units && air_units > 0)
        direction = "push toward air superiority";
    else if (ground_units > 2 * air_units && ground_units > 0)
        direction = "cement ground dominance";

    std::ostringstream out;
    out << "Immediate: " << timeframe_sentence(immediate) << "\n";
    out << "Short-term: " << timeframe_sentence(shortterm) << "\n";
    out << "Long-term: " << timeframe_sentence(longterm) << " Overall, " << direction << ".\n";
    return out.str();
}

constexpr const char* kRationaleSystemPrompt =
    "Explain the reasoning behind the following action sequence for the given "
    "player state. Break the explanation into exactly three time frames with "
    "the headers 'Immediate:', 'Short-term:' and 'Long-term:'.";

}  // namespace

std::string render_action_window(const std::vector<advisors::WindowEntry>& window) {
    std::ostringstream out;
    for (std::size_t i = 0; i < window.size(); ++i)
        out << i + 1 << ". " << window[i].action_id << "\n";
    return out.str();
}

DemoSample attach_rationale(DemoSample sample, const PipelineConfig& cfg,
                            const world::ActionCatalog& catalog) {
    if (sample.window.empty()) throw Error("attach_rationale on empty window");
    if (cfg.rationale_mode == RationaleMode::Template) {
        sample.rationale = template_rationale(sample.window, cfg.window_seconds, catalog);
        sample.rationale_unavailable = false;
        return sample;
    }
    advisors::AgentRequest request;
    request.system = kRationaleSystemPrompt;
    request.input = sample.state_text + "\nActions:\n" + render_action_window(sample.window);
    request.params.window_seconds = cfg.window_seconds;
    try {
        std::string reply = advisors::call_agent(cfg.endpoint, request);
        if (reply.find("Immediate:") == std::string::npos ||
            reply.find("Short-term:") == std::string::npos ||
            reply.find("Long-term:") == std::string::npos)
            throw advisors::MalformedReply("missing timeframe headers");
        sample.rationale = reply;
        sample.rationale_unavailable = false;
    } catch (const Error&) {
        sample.rationale.clear();
        sample.rationale_unavailable = true;  // ExternalUnavailable
    }
    return sample;
}

std::string dataset_instruction() {
    return std::string("You are a macro-management advisor for a real-time strategy game. "
                       "Strategic objective: ") +
           kSoPlaceholder +
           ". Given the current player state, reply with a tactical rationale covering "
           "immediate, short-term and long-term goals, followed by a numbered action "
           "sequence for the coming window.";
}

int emit_dataset(const std::vector<DemoSample>& samples, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write dataset: " + path);
    int written = 0;
    for (const auto& s : samples) {
        if (s.rationale_unavailable) continue;  // flagged-and-skipped
        nlohmann::json j;
        j["instruction"] = dataset_instruction();
        j["input"] = s.state_text;
        j["output"] = s.rationale + "\n" + render_action_window(s.window);
        nlohmann::json w = nlohmann::json::array();
        for (const auto& e : s.window) w.push_back({{"action", e.action_id}, {"offset", e.offset}});
        j["meta"] = {{"replay", s.replay_id},
                     {"t", s.t},
                     {"cluster", s.cluster_id ? nlohmann::json(*s.cluster_id) : nlohmann::json()},
                     {"window", w},
                     {"rationale", s.rationale}};
        out << j.dump() << "\n";
        ++written;
    }
    if (!out) throw IoError("dataset write failed: " + path);
    return written;
}

std::vector<DemoSample> read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset: " + path);
    std::vector<DemoSample> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        DemoSample s;
        s.state_text = j.at("input").get<std::string>();
        const auto& meta = j.at("meta");
        s.replay_id = meta.at("replay").get<std::string>();
        s.t = meta.at("t").get<int>();
        if (!meta.at("cluster").is_null()) s.cluster_id = meta.at("cluster").get<int>();
        s.rationale = meta.at("rationale").get<std::string>();
        for (const auto& e : meta.at("window"))
            s.window.push_back({e.at("action").get<std::string>(), e.at("offset").get<int>()});
        samples.push_back(std::move(s));
    }
    return samples;
}

}  // namespace hima::demos

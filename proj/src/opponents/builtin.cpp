#include "hima/opponents/builtin.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hima::opponents {

DifficultyLevel difficulty_level(int level) {
    if (level < 1 || level > 10) throw BadLevel(level);
    static const char* names[10] = {"VeryEasy",    "Easy",       "Medium", "Hard",
                                    "Harder",      "VeryHard",   "Elite",  "CheatVision",
                                    "CheatMoney",  "CheatInsane"};
    DifficultyLevel d;
    d.level = level;
    d.name = names[level - 1];
    d.cheat_vision = level == 8 || level == 10;
    d.cheat_money = level == 9 || level == 10;
    d.decision_period = std::max(2, 22 - 2 * level);  // 20 s at Lv.1 down to 2 s at Lv.10
    d.aggression_time = std::max(60, 660 - 60 * level);
    return d;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

ScriptLibrary ScriptLibrary::from_text(const std::string& text) {
    ScriptLibrary lib;
    std::istringstream in(text);
    std::string line;
    std::string current;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            if (t.rfind("hima-scripts", 0) != 0)
                throw ConfigError("missing scripts header at line " + std::to_string(line_no));
            header_seen = true;
            continue;
        }
        if (t.front() == '[' && t.back() == ']') {
            current = lower(trim(t.substr(1, t.size() - 2)));
            lib.plans_[current];  // create
            continue;
        }
        if (current.empty()) throw ConfigError("script directive before any section: " + t);
        std::istringstream ls(t);
        std::string key;
        ls >> key;
        ScriptPlan& plan = lib.plans_[current];
        if (key == "attack_supply") {
            ls >> plan.attack_army_supply;
        } else if (key == "scout_every") {
            ls >> plan.scout_every;
        } else if (key == "goal") {
            ScriptGoal g;
            ls >> g.action_id >> g.target;
            plan.goals.push_back(g);
        } else if (key == "sustain") {
            std::string id;
            ls >> id;
            plan.sustain.push_back(id);
        } else {
            throw ConfigError("unknown script directive '" + key + "' at line " + std::to_string(line_no));
        }
    }
    if (!header_seen) throw ConfigError("empty scripts document");
    return lib;
}

ScriptLibrary::ScriptLibrary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scripts file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    *this = from_text(buf.str());
}

const ScriptPlan& ScriptLibrary::plan(world::Race race, int level) const {
    std::string key = lower(world::to_string(race)) + " " + std::to_string(level);
    auto it = plans_.find(key);
    if (it == plans_.end()) throw ConfigError("no script plan for " + key);
    return it->second;
}

const ScriptPlan& ScriptLibrary::expert_plan(world::Race race, const std::string& persona) const {
    std::string key = lower(world::to_string(race)) + " expert " + lower(persona);
    auto it = plans_.find(key);
    if (it == plans_.end()) throw ConfigError("no expert plan for " + key);
    return it->second;
}

std::vector<std::string> ScriptLibrary::expert_personas(world::Race race) const {
    std::string prefix = lower(world::to_string(race)) + " expert ";
    std::vector<std::string> out;
    for (const auto& [key, _] : plans_)
        if (key.rfind(prefix, 0) == 0) out.push_back(key.substr(prefix.size()));
    return out;
}

BuiltinPolicy::BuiltinPolicy(world::Race race, DifficultyLevel difficulty, ScriptPlan plan,
                             std::uint64_t seed)
    : race_(race),
      difficulty_(std::move(difficulty)),
      plan_(std::move(plan)),
      emission_cap_(2 + (difficulty_.level + 1) / 2),
      phase_offset_(static_cast<int>(seed % 3)),
      attack_jitter_(static_cast<int>(seed % 11)) {}

std::vector<textio::ActionRequest> BuiltinPolicy::decide(const world::Observation& obs,
                                                         const world::ActionCatalog& catalog) {
    const int now = obs.tick;
    if (now - last_decision_ < difficulty_.decision_period + phase_offset_) return {};
    last_decision_ = now;
    phase_offset_ = 0;  // jitter applies to the first decision only

    std::vector<textio::ActionRequest> out;
    world::PlayerState scratch = obs.self;
    auto try_emit = [&](const std::string& action_id) {
        if (!world::validate_action(scratch, action_id, catalog).ok()) return false;
        world::apply_action_inplace(scratch, action_id, catalog);
        out.push_back({action_id});
        return true;
    };
    auto produced_count = [&](const std::string& action_id) {
        const world::ActionSpec* spec = catalog.find(action_id);
        if (!spec || !spec->produces) return 0;
        return scratch.count_with_queue(*spec->produces, catalog);
    };

    // Supply first: keep headroom while below the cap.
    const std::string supply_action = world::supply_action_id(race_);
    int queued_supply = static_cast<int>(
        std::count_if(scratch.queue.begin(), scratch.queue.end(),
                      [&](const world::QueueItem& q) { return q.action_id == supply_action; }));
    if (scratch.supply_cap < world::kSupplyCapMax && queued_supply == 0 &&
        scratch.supply_cap - scratch.supply_used <= 4)
        try_emit(supply_action);

    // Goals get resource priority in plan order: a goal starved of
    // resources reserves the bank (no sustain production this round).
    bool reserve_bank = false;
    for (const auto& goal : plan_.goals) {
        if (static_cast<int>(out.size()) >= emission_cap_) break;
        bool stop = false;
        while (produced_count(goal.action_id) < goal.target &&
               static_cast<int>(out.size()) < emission_cap_) {
            if (try_emit(goal.action_id)) continue;
            auto why = world::validate_action(scratch, goal.action_id, catalog);
            if (why.kind == world::FeasibilityKind::InsufficientResources) {
                reserve_bank = true;
                stop = true;
            }
            break;
        }
        if (stop) break;
    }

    if (!plan_.sustain.empty() && !reserve_bank) {
        std::size_t attempts = 0;
        while (static_cast<int>(out.size()) < emission_cap_ && attempts < plan_.sustain.size()) {
            const std::string& id = plan_.sustain[sustain_cursor_ % plan_.sustain.size()];
            ++sustain_cursor_;
            if (try_emit(id))
                attempts = 0;
            else
                ++attempts;
        }
    }

    if (now >= difficulty_.aggression_time + attack_jitter_ && !obs.engagement_active &&
        now - last_attack_ >= 60 &&
        scratch.army_supply(catalog) >= plan_.attack_army_supply) {
        if (try_emit("Attack")) last_attack_ = now;
    }
    if (plan_.scout_every > 0 && now - last_scout_ >= plan_.scout_every) {
        if (try_emit("Scout")) last_scout_ = now;
    }
    return out;
}

BuiltinPolicy make_builtin(world::Race race, int level, std::uint64_t seed,
                           const ScriptLibrary& scripts) {
    DifficultyLevel d = difficulty_level(level);
    return BuiltinPolicy(race, d, scripts.plan(race, level), seed);
}

BuiltinPolicy make_expert(world::Race race, const std::string& persona, std::uint64_t seed,
                          const ScriptLibrary& scripts) {
    DifficultyLevel d;
    d.level = 7;
    d.name = "Expert:" + persona;
    d.decision_period = 6;
    d.aggression_time = 330;
    return BuiltinPolicy(race, d, scripts.expert_plan(race, persona), seed);
}

}  // namespace hima::opponents

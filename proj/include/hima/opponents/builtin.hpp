#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hima/textio/parse.hpp"
#include "hima/world/rules.hpp"

namespace hima::opponents {

struct BadLevel : Error {
    explicit BadLevel(int level) : Error("builtin difficulty out of range: " + std::to_string(level)) {}
};

/// Difficulty ladder with the standard names; cheats at 8 (vision),
/// 9 (money) and 10 (both).
struct DifficultyLevel {
    int level = 1;
    std::string name;
    bool cheat_vision = false;
    bool cheat_money = false;
    int decision_period = 20;  // seconds between script decisions
    int aggression_time = 600; // earliest attack launch
};

DifficultyLevel difficulty_level(int level);

struct ScriptGoal {
    std::string action_id;
    int target = 1;  // owned + queued count to reach
};

/// Data-driven build plan: ordered goals, then round-robin sustained
/// production, with attack/scout gates.
struct ScriptPlan {
    std::vector<ScriptGoal> goals;
    std::vector<std::string> sustain;
    int attack_army_supply = 8;
    int scout_every = 0;  // 0 = never scout
};

/// Parsed scripts file; keys are "<race> <level>" and
/// "<race> expert <persona>".
class ScriptLibrary {
public:
    explicit ScriptLibrary(const std::string& path);
    static ScriptLibrary from_text(const std::string& text);

    const ScriptPlan& plan(world::Race race, int level) const;
    const ScriptPlan& expert_plan(world::Race race, const std::string& persona) const;
    std::vector<std::string> expert_personas(world::Race race) const;

private:
    ScriptLibrary() = default;
    std::map<std::string, ScriptPlan> plans_;
};

/// Deterministic scripted player. Emits only actions that validate
/// against its own state snapshot; never requests an infeasible action.
class BuiltinPolicy {
public:
    BuiltinPolicy(world::Race race, DifficultyLevel difficulty, ScriptPlan plan,
                  std::uint64_t seed);

    std::vector<textio::ActionRequest> decide(const world::Observation& obs,
                                              const world::ActionCatalog& catalog);

    world::Race race() const { return race_; }
    const DifficultyLevel& difficulty() const { return difficulty_; }

private:
    world::Race race_;
    DifficultyLevel difficulty_;
    ScriptPlan plan_;
    int emission_cap_;
    int phase_offset_;
    int attack_jitter_;
    int last_decision_ = -1000000;
    int last_attack_ = -1000000;
    int last_scout_ = -1000000;
    std::size_t sustain_cursor_ = 0;
};

BuiltinPolicy make_builtin(world::Race race, int level, std::uint64_t seed,
                           const ScriptLibrary& scripts);
/// Expert profiles used to generate demonstration replays; tuned like a
/// high-tier script with a persona-specific army mix.
BuiltinPolicy make_expert(world::Race race, const std::string& persona, std::uint64_t seed,
                          const ScriptLibrary& scripts);

inline constexpr int kCheatMoneyBankBonus = 1000;
inline constexpr int kCheatMoneyIncomePercent = 150;

}  // namespace hima::opponents

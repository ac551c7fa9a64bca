#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hima/world/catalog.hpp"

namespace hima::world {

struct Resources {
    long long minerals = 0;
    long long gas = 0;
    long long total() const { return minerals + gas; }
};

struct QueueItem {
    std::string action_id;
    int remaining = 0;  // seconds until completion
};

/// Full per-player simulation state. Confined to one match loop.
struct PlayerState {
    Race race = Race::Protoss;
    int minerals = 0;
    int gas = 0;
    int supply_used = 0;
    int supply_cap = 0;
    std::map<std::string, int> units;      // unit id -> count (> 0)
    std::map<std::string, int> buildings;  // building id -> count (> 0)
    std::set<std::string> techs;
    std::vector<QueueItem> queue;
    Resources spent;      // cumulative
    Resources harvested;  // cumulative, materialized integers only
    Resources injected;   // cheat grants
    // Sub-unit income accrual, in hundredths, so fractional rates stay
    // integer-exact and bit-reproducible.
    int mineral_cents = 0;
    int gas_cents = 0;
    int income_percent = 100;  // 150 under cheat money
    int scout_until = -1;      // opponent visible while tick <= scout_until
    std::map<std::string, int> command_ready;  // general-command cooldown gate

    int count_of(const std::string& entity_id) const;
    bool has_entity(const std::string& entity_id) const;
    /// Count including items still in the production queue.
    int count_with_queue(const std::string& entity_id, const ActionCatalog& catalog) const;
    int army_supply(const ActionCatalog& catalog) const;
    double army_power(const ActionCatalog& catalog) const;
    int worker_count(const ActionCatalog& catalog) const;
};

/// Live battle marker; armies are read from the player states each
/// combat round so reinforcements join automatically.
struct Engagement {
    int attacker = 0;
    int started_at = 0;
    int rounds = 0;
};

enum class OutcomeKind { Ongoing, Win, Draw };

struct Outcome {
    OutcomeKind kind = OutcomeKind::Ongoing;
    int winner = -1;  // player index, valid when kind == Win
    bool terminal() const { return kind != OutcomeKind::Ongoing; }
};

struct GameState {
    int tick = 0;
    std::array<PlayerState, 2> players;
    std::optional<Engagement> engagement;
    std::uint64_t rng_seed = 0;
    Outcome outcome;
};

/// Standard opening position: one town hall, twelve workers, 50
/// minerals, supply 12/15.
PlayerState starting_player_state(Race race);
GameState starting_game_state(Race race_a, Race race_b, std::uint64_t seed);

/// Starting mineral bank used by the resource-conservation equation.
inline constexpr int kStartingMinerals = 50;
inline constexpr int kSupplyCapMax = 200;

nlohmann::json to_json(const PlayerState& ps);
nlohmann::json to_json(const GameState& gs);
PlayerState player_state_from_json(const nlohmann::json& j);

/// Conservation check: bank == start + harvested + injected - spent.
bool resources_conserved(const PlayerState& ps);

}  // namespace hima::world

#pragma once

#include <string>
#include <vector>

#include "hima/world/combat.hpp"
#include "hima/world/state.hpp"

namespace hima::world {

enum class FeasibilityKind {
    Ok,
    MissingPrerequisite,
    InsufficientResources,
    SupplyBlocked,
    UnknownAction,
};

struct Feasibility {
    FeasibilityKind kind = FeasibilityKind::Ok;
    std::vector<std::string> missing;  // nonempty for MissingPrerequisite, catalog order

    bool ok() const { return kind == FeasibilityKind::Ok; }
    std::string describe() const;
};

struct ApplyOnInfeasible : Error {
    explicit ApplyOnInfeasible(const std::string& detail)
        : Error("apply_action on infeasible request: " + detail) {}
};

struct TickAfterTerminal : Error {
    TickAfterTerminal() : Error("tick on terminal game state") {}
};

/// Check order: unknown -> prerequisite -> resources -> supply; first
/// failure wins.
Feasibility validate_action(const GameState& state, int player, const std::string& action_id,
                            const CatalogSet& catalogs);
Feasibility validate_action(const PlayerState& ps, const std::string& action_id,
                            const ActionCatalog& catalog);

/// Deduct costs and enqueue; unit supply is taken immediately, entity
/// counts change only at completion. Precondition: validate_action Ok.
void apply_action_inplace(GameState& state, int player, const std::string& action_id,
                          const CatalogSet& catalogs);
GameState apply_action(const GameState& state, int player, const std::string& action_id,
                       const CatalogSet& catalogs);
void apply_action_inplace(PlayerState& ps, const std::string& action_id, const ActionCatalog& catalog);

struct WorldEvent {
    int tick = 0;
    int player = -1;  // -1 for match-level events
    std::string text;
};

/// One-second resolution advance: income, queue completion, a combat
/// round every 5 s of an engagement, terminal checks.
std::vector<WorldEvent> tick_inplace(GameState& state, int dt, const CatalogSet& catalogs,
                                     int time_cap);
GameState tick(const GameState& state, int dt, const CatalogSet& catalogs, int time_cap,
               std::vector<WorldEvent>* events = nullptr);

/// Advance a single player's economy/production only (no combat, no
/// opponent); used for planner projections.
void project_player_inplace(PlayerState& ps, int seconds, const ActionCatalog& catalog);

struct Observation {
    int tick = 0;
    int player = 0;
    Race own_race = Race::Protoss;
    Race enemy_race = Race::Protoss;
    PlayerState self;
    std::map<std::string, int> enemy_units;
    std::map<std::string, int> enemy_buildings;
    int visible_enemy_count = 0;  // visible opposing combat units
    bool engagement_active = false;
    bool cheat_vision = false;
};

/// Own state plus the fog-limited opponent view: an active engagement
/// reveals the opposing army; a scout within the last 60 s reveals the
/// full opponent layout; cheat vision reveals everything.
Observation observe(const GameState& state, int player, bool cheat_vision,
                    const CatalogSet& catalogs);

inline constexpr int kScoutVisibilitySeconds = 60;
inline constexpr int kDefaultTimeCap = 3600;
inline constexpr int kGeneralCommandCooldown = 60;

// Income model: saturating linear, minerals first.
inline constexpr int kMineralSlotsPerTownHall = 16;
inline constexpr int kGasSlotsPerGasBuilding = 3;
inline constexpr int kMineralCentsPerWorker = 100;  // 1.0/s
inline constexpr int kGasCentsPerWorker = 90;       // 0.9/s

const char* town_hall_id(Race race);
const char* worker_action_id(Race race);
const char* gas_building_id(Race race);
const char* supply_action_id(Race race);

}  // namespace hima::world

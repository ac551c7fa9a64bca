#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hima/error.hpp"

namespace hima::world {

enum class Race { Protoss, Terran, Zerg };

const char* to_string(Race race);
Race race_from_string(const std::string& name);

enum class ActionCategory {
    UnitProduction,
    BuildingConstruction,
    TechnologyDevelopment,
    GeneralCommand,
};

const char* to_string(ActionCategory cat);

/// One entry of a race's action space. Costs, timings and strengths are
/// macro-scale values owned by the shipped catalog files.
struct ActionSpec {
    std::string id;
    Race race = Race::Protoss;
    ActionCategory category = ActionCategory::GeneralCommand;
    int mineral_cost = 0;
    int gas_cost = 0;
    int supply_cost = 0;     // consumed supply; 0 for buildings and techs
    int supply_granted = 0;  // for supply-providing structures/units
    int build_time = 1;      // seconds
    std::vector<std::string> prerequisites;  // entity/tech ids, catalog order
    std::optional<std::string> produces;     // entity or tech id
    double strength = 0.0;   // combat power per unit, 0 for non-combat
    bool air = false;        // unit classification used by clustering
    bool unique_structure = false;  // planner treats >1 build as a conflict
};

struct CatalogCountError : Error {
    int expected, got;
    CatalogCountError(int expected, int got);
};

struct CatalogCycleError : Error {
    std::vector<std::string> path;
    explicit CatalogCycleError(std::vector<std::string> path);
};

struct CatalogRefError : Error {
    std::string id;
    explicit CatalogRefError(std::string id);
};

/// Validated per-race action space with prerequisite DAG and derived
/// lookups. Index order is catalog order and is used for all
/// deterministic sorting elsewhere.
class ActionCatalog {
public:
    ActionCatalog() = default;
    ActionCatalog(Race race, std::vector<ActionSpec> actions);

    Race race() const { return race_; }
    const std::vector<ActionSpec>& actions() const { return actions_; }
    std::size_t size() const { return actions_.size(); }

    const ActionSpec* find(const std::string& action_id) const;
    const ActionSpec& at(const std::string& action_id) const;
    /// Catalog index of an action id; -1 if unknown.
    int index_of(const std::string& action_id) const;
    /// Catalog index of the action producing `entity_id`; -1 if none.
    int producer_index(const std::string& entity_id) const;
    const ActionSpec* producer_of(const std::string& entity_id) const;

    /// Producible army units (strength > 0), in catalog order.
    const std::vector<std::string>& unit_set() const { return unit_set_; }
    /// All producible units including non-combat ones, in catalog order.
    const std::vector<std::string>& all_units() const { return all_units_; }
    const std::vector<std::string>& all_buildings() const { return all_buildings_; }
    const std::vector<std::string>& all_techs() const { return all_techs_; }
    int technology_action_count() const { return static_cast<int>(all_techs_.size()); }

    bool is_air_unit(const std::string& unit_id) const;
    double unit_strength(const std::string& unit_id) const;
    int unit_supply_weight(const std::string& unit_id) const;

private:
    void validate() const;

    Race race_ = Race::Protoss;
    std::vector<ActionSpec> actions_;
    std::map<std::string, int> index_;           // action id -> index
    std::map<std::string, int> producer_index_;  // entity/tech id -> action index
    std::vector<std::string> unit_set_;
    std::vector<std::string> all_units_;
    std::vector<std::string> all_buildings_;
    std::vector<std::string> all_techs_;
};

/// Expected per-race action counts; the shipped data files must match.
int expected_action_count(Race race);

/// Parse a catalog document (see data/catalog_*.txt for the format).
/// Throws CatalogCountError / CatalogCycleError / CatalogRefError.
ActionCatalog load_catalog(Race race, const std::string& text);
ActionCatalog load_catalog_file(Race race, const std::string& path);

/// All three catalogs loaded from a data directory.
class CatalogSet {
public:
    explicit CatalogSet(const std::string& data_dir);
    const ActionCatalog& get(Race race) const;

private:
    ActionCatalog protoss_, terran_, zerg_;
};

/// Resolves the data directory: explicit argument, HIMA_DATA_DIR env
/// var, or the compiled-in source-tree default.
std::string default_data_dir();

}  // namespace hima::world

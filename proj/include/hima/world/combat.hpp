#pragma once

#include <map>
#include <optional>
#include <string>

#include "hima/world/catalog.hpp"

namespace hima::world {

struct EmptyArmy : Error {
    EmptyArmy() : Error("resolve_combat on two empty armies") {}
};

enum class CombatVictor { Attacker, Defender, Draw };

using Army = std::map<std::string, int>;  // unit id -> count

struct CombatResult {
    Army losses_attacker;
    Army losses_defender;
    std::optional<CombatVictor> victor;
    int rounds_run = 0;
};

double army_power(const Army& army, const ActionCatalog& catalog);

/// Deterministic Lanchester-square attrition. Each round both sides
/// simultaneously remove units worth min(0.1 * opposing power, own
/// power), whole units, lowest strength first (ties by catalog order).
/// Runs until `rounds` elapse or one side reaches zero power.
CombatResult resolve_combat(const Army& attacker_army, const Army& defender_army,
                            const ActionCatalog& attacker_catalog,
                            const ActionCatalog& defender_catalog, int rounds);

inline constexpr double kAttritionCoefficient = 0.1;
inline constexpr int kCombatRoundSeconds = 5;

}  // namespace hima::world

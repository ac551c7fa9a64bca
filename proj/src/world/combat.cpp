#include "hima/world/combat.hpp"

#include <algorithm>
#include <vector>

namespace hima::world {

double army_power(const Army& army, const ActionCatalog& catalog) {
    double p = 0.0;
    for (const auto& [id, count] : army) p += count * catalog.unit_strength(id);
    return p;
}

namespace {

// Unit ids ascending by strength, ties by catalog order.
std::vector<std::string> removal_order(const Army& army, const ActionCatalog& catalog) {
    std::vector<std::string> ids;
    for (const auto& [id, count] : army)
        if (count > 0) ids.push_back(id);
    std::stable_sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
        double sa = catalog.unit_strength(a), sb = catalog.unit_strength(b);
        if (sa != sb) return sa < sb;
        return catalog.producer_index(a) < catalog.producer_index(b);
    });
    return ids;
}

// Remove whole units, weakest first, until at least `damage` power is
// gone (overshoot bounded by one unit).
Army apply_damage(Army& army, const ActionCatalog& catalog, double damage) {
    Army losses;
    if (damage <= 0.0) return losses;
    double removed = 0.0;
    for (const auto& id : removal_order(army, catalog)) {
        double s = catalog.unit_strength(id);
        int& count = army[id];
        while (count > 0 && removed < damage) {
            --count;
            removed += s;
            ++losses[id];
        }
        if (count == 0) army.erase(id);
        if (removed >= damage) break;
    }
    return losses;
}

void merge_losses(Army& total, const Army& step) {
    for (const auto& [id, n] : step) total[id] += n;
}

}  // namespace

CombatResult resolve_combat(const Army& attacker_army, const Army& defender_army,
                            const ActionCatalog& attacker_catalog,
                            const ActionCatalog& defender_catalog, int rounds) {
    if (attacker_army.empty() && defender_army.empty()) throw EmptyArmy();

    Army att = attacker_army;
    Army def = defender_army;
    CombatResult result;
    for (int r = 0; r < rounds; ++r) {
        double p_att = army_power(att, attacker_catalog);
        double p_def = army_power(def, defender_catalog);
        if (p_att <= 0.0 || p_def <= 0.0) break;

        // Simultaneous round: both damages computed from pre-round power.
        double damage_to_att = std::min(p_def * kAttritionCoefficient, p_att);
        double damage_to_def = std::min(p_att * kAttritionCoefficient, p_def);
        merge_losses(result.losses_attacker, apply_damage(att, attacker_catalog, damage_to_att));
        merge_losses(result.losses_defender, apply_damage(def, defender_catalog, damage_to_def));
        ++result.rounds_run;
    }

    double p_att = army_power(att, attacker_catalog);
    double p_def = army_power(def, defender_catalog);
    if (p_att <= 0.0 && p_def <= 0.0)
        result.victor = CombatVictor::Draw;
    else if (p_def <= 0.0)
        result.victor = CombatVictor::Attacker;
    else if (p_att <= 0.0)
        result.victor = CombatVictor::Defender;
    return result;
}

}  // namespace hima::world

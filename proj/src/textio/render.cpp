#include "hima/textio/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hima::textio {

namespace {

std::string format_time(int tick) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d", tick / 3600, (tick / 60) % 60, tick % 60);
    return buf;
}

// Entity lines in catalog order of the producing action.
void render_entity_map(std::ostringstream& out, const std::map<std::string, int>& entities,
                       const world::ActionCatalog& catalog) {
    std::vector<std::pair<std::string, int>> rows(entities.begin(), entities.end());
    std::erase_if(rows, [](const auto& r) { return r.second <= 0; });
    std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        return catalog.producer_index(a.first) < catalog.producer_index(b.first);
    });
    if (rows.empty()) {
        out << "- none\n";
        return;
    }
    for (const auto& [id, count] : rows) out << "- " << id << " x" << count << "\n";
}

}  // namespace

std::string render_player_state(const world::PlayerState& ps, int tick,
                                const world::ActionCatalog& catalog) {
    std::ostringstream out;
    out << "[Time] " << format_time(tick) << " (" << tick << "s)\n";
    out << "[Resources] minerals: " << ps.minerals << ", gas: " << ps.gas << "\n";
    out << "[Supply] " << ps.supply_used << "/" << ps.supply_cap << "\n";
    out << "[Units]\n";
    render_entity_map(out, ps.units, catalog);
    out << "[Buildings]\n";
    render_entity_map(out, ps.buildings, catalog);
    out << "[Technologies]\n";
    if (ps.techs.empty()) {
        out << "- none\n";
    } else {
        std::vector<std::string> techs(ps.techs.begin(), ps.techs.end());
        std::stable_sort(techs.begin(), techs.end(), [&](const std::string& a, const std::string& b) {
            return catalog.producer_index(a) < catalog.producer_index(b);
        });
        for (const auto& t : techs) out << "- " << t << "\n";
    }
    out << "[Ongoing Commands]\n";
    if (ps.queue.empty()) {
        out << "- none\n";
    } else {
        for (const auto& q : ps.queue)
            out << "- " << q.action_id << " (" << q.remaining << "s remaining)\n";
    }
    return out.str();
}

std::string render_observation(const world::Observation& obs, const world::CatalogSet& catalogs) {
    std::ostringstream out;
    out << render_player_state(obs.self, obs.tick, catalogs.get(obs.own_race));
    out << "[Visible Enemy]\n";
    if (obs.enemy_units.empty() && obs.enemy_buildings.empty()) {
        out << "- none observed\n";
    } else {
        const world::ActionCatalog& enemy_cat = catalogs.get(obs.enemy_race);
        std::vector<std::pair<std::string, int>> rows;
        for (const auto& e : obs.enemy_units) rows.push_back(e);
        for (const auto& e : obs.enemy_buildings) rows.push_back(e);
        std::erase_if(rows, [](const auto& r) { return r.second <= 0; });
        std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
            return enemy_cat.producer_index(a.first) < enemy_cat.producer_index(b.first);
        });
        for (const auto& [id, count] : rows) out << "- " << id << " x" << count << "\n";
        out << "- visible enemy combat units: " << obs.visible_enemy_count << "\n";
    }
    return out.str();
}

}  // namespace hima::textio

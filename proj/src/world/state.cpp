#include "hima/world/state.hpp"

#include <nlohmann/json.hpp>

namespace hima::world {

int PlayerState::count_of(const std::string& entity_id) const {
    if (auto it = units.find(entity_id); it != units.end()) return it->second;
    if (auto it = buildings.find(entity_id); it != buildings.end()) return it->second;
    return techs.count(entity_id) ? 1 : 0;
}

bool PlayerState::has_entity(const std::string& entity_id) const {
    return count_of(entity_id) > 0;
}

int PlayerState::count_with_queue(const std::string& entity_id, const ActionCatalog& catalog) const {
    int n = count_of(entity_id);
    for (const auto& q : queue) {
        const ActionSpec* spec = catalog.find(q.action_id);
        if (spec && spec->produces && *spec->produces == entity_id) ++n;
    }
    return n;
}

int PlayerState::army_supply(const ActionCatalog& catalog) const {
    int total = 0;
    for (const auto& [id, count] : units)
        if (catalog.unit_strength(id) > 0.0) total += count * catalog.unit_supply_weight(id);
    return total;
}

double PlayerState::army_power(const ActionCatalog& catalog) const {
    double total = 0.0;
    for (const auto& [id, count] : units) total += count * catalog.unit_strength(id);
    return total;
}

int PlayerState::worker_count(const ActionCatalog& catalog) const {
    switch (catalog.race()) {
        case Race::Protoss: return units.count("Probe") ? units.at("Probe") : 0;
        case Race::Terran: return units.count("SCV") ? units.at("SCV") : 0;
        case Race::Zerg: return units.count("Drone") ? units.at("Drone") : 0;
    }
    return 0;
}

namespace {
struct StartEntities {
    const char* town_hall;
    const char* worker;
};

StartEntities start_entities(Race race) {
    switch (race) {
        case Race::Protoss: return {"Nexus", "Probe"};
        case Race::Terran: return {"CommandCenter", "SCV"};
        case Race::Zerg: return {"Hatchery", "Drone"};
    }
    return {"Nexus", "Probe"};
}
}  // namespace

PlayerState starting_player_state(Race race) {
    PlayerState ps;
    ps.race = race;
    ps.minerals = kStartingMinerals;
    ps.gas = 0;
    auto ents = start_entities(race);
    ps.buildings[ents.town_hall] = 1;
    ps.units[ents.worker] = 12;
    ps.supply_used = 12;
    ps.supply_cap = 15;
    return ps;
}

GameState starting_game_state(Race race_a, Race race_b, std::uint64_t seed) {
    GameState gs;
    gs.players[0] = starting_player_state(race_a);
    gs.players[1] = starting_player_state(race_b);
    gs.rng_seed = seed;
    return gs;
}

nlohmann::json to_json(const PlayerState& ps) {
    nlohmann::json j;
    j["race"] = to_string(ps.race);
    j["minerals"] = ps.minerals;
    j["gas"] = ps.gas;
    j["supply_used"] = ps.supply_used;
    j["supply_cap"] = ps.supply_cap;
    j["units"] = ps.units;
    j["buildings"] = ps.buildings;
    j["techs"] = ps.techs;
    nlohmann::json q = nlohmann::json::array();
    for (const auto& item : ps.queue) q.push_back({{"action", item.action_id}, {"remaining", item.remaining}});
    j["queue"] = q;
    j["spent"] = {{"minerals", ps.spent.minerals}, {"gas", ps.spent.gas}};
    j["harvested"] = {{"minerals", ps.harvested.minerals}, {"gas", ps.harvested.gas}};
    j["injected"] = {{"minerals", ps.injected.minerals}, {"gas", ps.injected.gas}};
    j["mineral_cents"] = ps.mineral_cents;
    j["gas_cents"] = ps.gas_cents;
    j["income_percent"] = ps.income_percent;
    j["scout_until"] = ps.scout_until;
    j["command_ready"] = ps.command_ready;
    return j;
}

PlayerState player_state_from_json(const nlohmann::json& j) {
    PlayerState ps;
    ps.race = race_from_string(j.at("race").get<std::string>());
    ps.minerals = j.at("minerals").get<int>();
    ps.gas = j.at("gas").get<int>();
    ps.supply_used = j.at("supply_used").get<int>();
    ps.supply_cap = j.at("supply_cap").get<int>();
    ps.units = j.at("units").get<std::map<std::string, int>>();
    ps.buildings = j.at("buildings").get<std::map<std::string, int>>();
    ps.techs = j.at("techs").get<std::set<std::string>>();
    for (const auto& item : j.at("queue"))
        ps.queue.push_back({item.at("action").get<std::string>(), item.at("remaining").get<int>()});
    ps.spent = {j.at("spent").at("minerals").get<long long>(), j.at("spent").at("gas").get<long long>()};
    ps.harvested = {j.at("harvested").at("minerals").get<long long>(), j.at("harvested").at("gas").get<long long>()};
    ps.injected = {j.at("injected").at("minerals").get<long long>(), j.at("injected").at("gas").get<long long>()};
    ps.mineral_cents = j.at("mineral_cents").get<int>();
    ps.gas_cents = j.at("gas_cents").get<int>();
    ps.income_percent = j.at("income_percent").get<int>();
    ps.scout_until = j.at("scout_until").get<int>();
    ps.command_ready = j.at("command_ready").get<std::map<std::string, int>>();
    return ps;
}

nlohmann::json to_json(const GameState& gs) {
    nlohmann::json j;
    j["tick"] = gs.tick;
    j["players"] = {to_json(gs.players[0]), to_json(gs.players[1])};
    if (gs.engagement)
        j["engagement"] = {{"attacker", gs.engagement->attacker},
                           {"started_at", gs.engagement->started_at},
                           {"rounds", gs.engagement->rounds}};
    else
        j["engagement"] = nullptr;
    j["rng_seed"] = gs.rng_seed;
    switch (gs.outcome.kind) {
        case OutcomeKind::Ongoing: j["outcome"] = "ongoing"; break;
        case OutcomeKind::Draw: j["outcome"] = "draw"; break;
        case OutcomeKind::Win: j["outcome"] = "win:" + std::to_string(gs.outcome.winner); break;
    }
    return j;
}

bool resources_conserved(const PlayerState& ps) {
    return ps.minerals == kStartingMinerals + ps.harvested.minerals + ps.injected.minerals - ps.spent.minerals &&
           ps.gas == ps.harvested.gas + ps.injected.gas - ps.spent.gas;
}

}  // namespace hima::world

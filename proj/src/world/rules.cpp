#include "hima/world/rules.hpp"

#include <algorithm>
#include <sstream>

namespace hima::world {

std::string Feasibility::describe() const {
    switch (kind) {
        case FeasibilityKind::Ok: return "Ok";
        case FeasibilityKind::InsufficientResources: return "InsufficientResources";
        case FeasibilityKind::SupplyBlocked: return "SupplyBlocked";
        case FeasibilityKind::UnknownAction: return "UnknownAction";
        case FeasibilityKind::MissingPrerequisite: {
            std::string out = "MissingPrerequisite(";
            for (std::size_t i = 0; i < missing.size(); ++i) {
                if (i) out += ",";
                out += missing[i];
            }
            return out + ")";
        }
    }
    return "?";
}

const char* town_hall_id(Race race) {
    switch (race) {
        case Race::Protoss: return "Nexus";
        case Race::Terran: return "CommandCenter";
        case Race::Zerg: return "Hatchery";
    }
    return "Nexus";
}

const char* worker_action_id(Race race) {
    switch (race) {
        case Race::Protoss: return "TrainProbe";
        case Race::Terran: return "TrainSCV";
        case Race::Zerg: return "TrainDrone";
    }
    return "TrainProbe";
}

const char* gas_building_id(Race race) {
    switch (race) {
        case Race::Protoss: return "Assimilator";
        case Race::Terran: return "Refinery";
        case Race::Zerg: return "Extractor";
    }
    return "Assimilator";
}

const char* supply_action_id(Race race) {
    switch (race) {
        case Race::Protoss: return "BuildPylon";
        case Race::Terran: return "BuildSupplyDepot";
        case Race::Zerg: return "TrainOverlord";
    }
    return "BuildPylon";
}

Feasibility validate_action(const PlayerState& ps, const std::string& action_id,
                            const ActionCatalog& catalog) {
    const ActionSpec* spec = catalog.find(action_id);
    if (!spec) return {FeasibilityKind::UnknownAction, {}};

    std::vector<std::string> missing;
    for (const auto& p : spec->prerequisites)
        if (!ps.has_entity(p)) missing.push_back(p);
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end(), [&](const std::string& a, const std::string& b) {
            return catalog.producer_index(a) < catalog.producer_index(b);
        });
        return {FeasibilityKind::MissingPrerequisite, std::move(missing)};
    }
    if (ps.minerals < spec->mineral_cost || ps.gas < spec->gas_cost)
        return {FeasibilityKind::InsufficientResources, {}};
    if (spec->supply_cost > 0 && ps.supply_used + spec->supply_cost > ps.supply_cap)
        return {FeasibilityKind::SupplyBlocked, {}};
    return {};
}

Feasibility validate_action(const GameState& state, int player, const std::string& action_id,
                            const CatalogSet& catalogs) {
    const PlayerState& ps = state.players[static_cast<std::size_t>(player)];
    return validate_action(ps, action_id, catalogs.get(ps.race));
}

void apply_action_inplace(PlayerState& ps, const std::string& action_id, const ActionCatalog& catalog) {
    Feasibility f = validate_action(ps, action_id, catalog);
    if (!f.ok()) throw ApplyOnInfeasible(action_id + ": " + f.describe());
    const ActionSpec& spec = catalog.at(action_id);
    ps.minerals -= spec.mineral_cost;
    ps.gas -= spec.gas_cost;
    ps.spent.minerals += spec.mineral_cost;
    ps.spent.gas += spec.gas_cost;
    if (spec.category == ActionCategory::UnitProduction) ps.supply_used += spec.supply_cost;
    ps.queue.push_back({action_id, spec.build_time});
}

void apply_action_inplace(GameState& state, int player, const std::string& action_id,
                          const CatalogSet& catalogs) {
    PlayerState& ps = state.players[static_cast<std::size_t>(player)];
    apply_action_inplace(ps, action_id, catalogs.get(ps.race));
}

GameState apply_action(const GameState& state, int player, const std::string& action_id,
                       const CatalogSet& catalogs) {
    GameState next = state;
    apply_action_inplace(next, player, action_id, catalogs);
    return next;
}

namespace {

void accrue_income(PlayerState& ps, const ActionCatalog& catalog) {
    int workers = ps.worker_count(catalog);
    int town_halls = 0;
    if (auto it = ps.buildings.find(town_hall_id(ps.race)); it != ps.buildings.end())
        town_halls = it->second;
    int gas_buildings = 0;
    if (auto it = ps.buildings.find(gas_building_id(ps.race)); it != ps.buildings.end())
        gas_buildings = it->second;

    int mineral_workers = std::min(workers, kMineralSlotsPerTownHall * town_halls);
    int gas_workers = std::min(workers - mineral_workers, kGasSlotsPerGasBuilding * gas_buildings);

    ps.mineral_cents += mineral_workers * kMineralCentsPerWorker * ps.income_percent / 100;
    ps.gas_cents += gas_workers * kGasCentsPerWorker * ps.income_percent / 100;
    int dm = ps.mineral_cents / 100;
    int dg = ps.gas_cents / 100;
    ps.mineral_cents %= 100;
    ps.gas_cents %= 100;
    ps.minerals += dm;
    ps.gas += dg;
    ps.harvested.minerals += dm;
    ps.harvested.gas += dg;
}

void run_general_command(GameState& state, int player, const ActionSpec& spec,
                         std::vector<WorldEvent>* events, const CatalogSet& catalogs) {
    PlayerState& ps = state.players[static_cast<std::size_t>(player)];
    const ActionCatalog& catalog = catalogs.get(ps.race);
    auto emit = [&](const std::string& text) {
        if (events) events->push_back({state.tick, player, text});
    };

    if (spec.id == "Attack") {
        if (!state.engagement && ps.army_power(catalog) > 0.0) {
            state.engagement = Engagement{player, state.tick, 0};
            emit("engagement started");
        }
        return;
    }
    if (spec.id == "Scout") {
        ps.scout_until = state.tick + kScoutVisibilitySeconds;
        emit("scout dispatched");
        return;
    }

    // Race-specific commands share a fixed cooldown.
    if (auto it = ps.command_ready.find(spec.id); it != ps.command_ready.end() && state.tick < it->second)
        return;
    ps.command_ready[spec.id] = state.tick + kGeneralCommandCooldown;

    if (spec.id == "ChronoBoost") {
        // Speeds up the slowest job in the pipeline.
        QueueItem* target = nullptr;
        for (auto& q : ps.queue)
            if (!target || q.remaining > target->remaining) target = &q;
        if (target) target->remaining = std::max(1, target->remaining - 10);
    } else if (spec.id == "LarvaInject") {
        for (auto& q : ps.queue) {
            const ActionSpec* qs = catalog.find(q.action_id);
            if (qs && qs->category == ActionCategory::UnitProduction)
                q.remaining = std::max(1, q.remaining - 5);
        }
    } else if (spec.id == "CallMule") {
        ps.minerals += 50;
        ps.harvested.minerals += 50;
    }
}

void complete_queue_items(GameState& state, int player, std::vector<WorldEvent>* events,
                          const CatalogSet& catalogs) {
    PlayerState& ps = state.players[static_cast<std::size_t>(player)];
    const ActionCatalog& catalog = catalogs.get(ps.race);
    std::vector<QueueItem> remaining;
    std::vector<std::string> done;
    for (auto& item : ps.queue) {
        if (--item.remaining > 0) {
            remaining.push_back(item);
            continue;
        }
        done.push_back(item.action_id);
    }
    ps.queue = std::move(remaining);
    for (const auto& action_id : done) {
        const ActionSpec& spec = catalog.at(action_id);
        switch (spec.category) {
            case ActionCategory::UnitProduction:
                ++ps.units[*spec.produces];
                break;
            case ActionCategory::BuildingConstruction:
                ++ps.buildings[*spec.produces];
                break;
            case ActionCategory::TechnologyDevelopment:
                ps.techs.insert(*spec.produces);
                break;
            case ActionCategory::GeneralCommand:
                run_general_command(state, player, spec, events, catalogs);
                continue;
        }
        if (spec.supply_granted > 0)
            ps.supply_cap = std::min(kSupplyCapMax, ps.supply_cap + spec.supply_granted);
        if (events) events->push_back({state.tick, player, spec.id + " completed"});
    }
}

Army combat_units(const PlayerState& ps, const ActionCatalog& catalog) {
    Army army;
    for (const auto& [id, count] : ps.units)
        if (catalog.unit_strength(id) > 0.0 && count > 0) army[id] = count;
    return army;
}

void apply_army_losses(PlayerState& ps, const Army& losses, const ActionCatalog& catalog) {
    for (const auto& [id, n] : losses) {
        auto it = ps.units.find(id);
        if (it == ps.units.end()) continue;
        int dead = std::min(it->second, n);
        it->second -= dead;
        ps.supply_used = std::max(0, ps.supply_used - dead * catalog.unit_supply_weight(id));
        if (it->second == 0) ps.units.erase(it);
    }
}

std::string summarize_army(const Army& army) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [id, n] : army) {
        if (!first) out << ", ";
        out << n << " " << id;
        first = false;
    }
    return out.str();
}

// Buildings fall to an unopposed attacker; sturdiness scales with cost.
void raze_buildings(GameState& state, int defender, double damage, std::vector<WorldEvent>* events,
                    const CatalogSet& catalogs) {
    PlayerState& ps = state.players[static_cast<std::size_t>(defender)];
    const ActionCatalog& catalog = catalogs.get(ps.race);
    std::vector<std::string> order;
    for (const auto& [id, count] : ps.buildings)
        if (count > 0) order.push_back(id);
    std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
        const ActionSpec* sa = catalog.producer_of(a);
        const ActionSpec* sb = catalog.producer_of(b);
        int ca = sa ? sa->mineral_cost + sa->gas_cost : 0;
        int cb = sb ? sb->mineral_cost + sb->gas_cost : 0;
        if (ca != cb) return ca < cb;
        return catalog.producer_index(a) < catalog.producer_index(b);
    });
    double removed = 0.0;
    for (const auto& id : order) {
        const ActionSpec* spec = catalog.producer_of(id);
        double toughness = spec ? (spec->mineral_cost + spec->gas_cost) / 100.0 : 1.0;
        int& count = ps.buildings[id];
        while (count > 0 && removed < damage) {
            --count;
            removed += toughness;
            if (events) events->push_back({state.tick, defender, id + " destroyed"});
        }
        if (count == 0) ps.buildings.erase(id);
        if (removed >= damage) break;
    }
}

void run_engagement_round(GameState& state, std::vector<WorldEvent>* events,
                          const CatalogSet& catalogs) {
    Engagement& eng = *state.engagement;
    int att = eng.attacker;
    int def = 1 - att;
    PlayerState& att_ps = state.players[static_cast<std::size_t>(att)];
    PlayerState& def_ps = state.players[static_cast<std::size_t>(def)];
    const ActionCatalog& att_cat = catalogs.get(att_ps.race);
    const ActionCatalog& def_cat = catalogs.get(def_ps.race);

    Army att_army = combat_units(att_ps, att_cat);
    Army def_army = combat_units(def_ps, def_cat);
    double p_att = army_power(att_army, att_cat);
    double p_def = army_power(def_army, def_cat);

    if (p_att <= 0.0) {
        if (events) events->push_back({state.tick, att, "attack repelled"});
        state.engagement.reset();
        return;
    }
    ++eng.rounds;
    if (p_def <= 0.0) {
        raze_buildings(state, def, p_att * kAttritionCoefficient, events, catalogs);
        return;
    }

    CombatResult round = resolve_combat(att_army, def_army, att_cat, def_cat, 1);
    apply_army_losses(att_ps, round.losses_attacker, att_cat);
    apply_army_losses(def_ps, round.losses_defender, def_cat);
    if (events && (!round.losses_attacker.empty() || !round.losses_defender.empty())) {
        events->push_back({state.tick, att,
                           "battle round " + std::to_string(eng.rounds) + ": attacker lost [" +
                               summarize_army(round.losses_attacker) + "], defender lost [" +
                               summarize_army(round.losses_defender) + "]"});
    }
}

void check_terminal(GameState& state, int time_cap, std::vector<WorldEvent>* events,
                    const CatalogSet& catalogs) {
    bool dead0 = state.players[0].buildings.empty();
    bool dead1 = state.players[1].buildings.empty();
    if (dead0 || dead1) {
        if (dead0 && dead1)
            state.outcome = {OutcomeKind::Draw, -1};
        else
            state.outcome = {OutcomeKind::Win, dead0 ? 1 : 0};
    } else if (state.tick >= time_cap) {
        int a0 = state.players[0].army_supply(catalogs.get(state.players[0].race));
        int a1 = state.players[1].army_supply(catalogs.get(state.players[1].race));
        if (a0 == a1)
            state.outcome = {OutcomeKind::Draw, -1};
        else
            state.outcome = {OutcomeKind::Win, a0 > a1 ? 0 : 1};
    }
    if (state.outcome.terminal()) {
        state.engagement.reset();
        if (events) {
            std::string text = state.outcome.kind == OutcomeKind::Draw
                                   ? "match drawn"
                                   : "player " + std::to_string(state.outcome.winner) + " wins";
            events->push_back({state.tick, -1, text});
        }
    }
}

}  // namespace

std::vector<WorldEvent> tick_inplace(GameState& state, int dt, const CatalogSet& catalogs,
                                     int time_cap) {
    if (state.outcome.terminal()) throw TickAfterTerminal();
    if (dt < 1) throw Error("tick dt must be >= 1");

    std::vector<WorldEvent> events;
    for (int s = 0; s < dt && !state.outcome.terminal(); ++s) {
        ++state.tick;
        for (int p = 0; p < 2; ++p)
            accrue_income(state.players[static_cast<std::size_t>(p)],
                          catalogs.get(state.players[static_cast<std::size_t>(p)].race));
        for (int p = 0; p < 2; ++p) complete_queue_items(state, p, &events, catalogs);
        if (state.engagement && state.tick > state.engagement->started_at &&
            (state.tick - state.engagement->started_at) % kCombatRoundSeconds == 0)
            run_engagement_round(state, &events, catalogs);
        check_terminal(state, time_cap, &events, catalogs);
    }
    return events;
}

GameState tick(const GameState& state, int dt, const CatalogSet& catalogs, int time_cap,
               std::vector<WorldEvent>* events) {
    GameState next = state;
    auto ev = tick_inplace(next, dt, catalogs, time_cap);
    if (events) *events = std::move(ev);
    return next;
}

void project_player_inplace(PlayerState& ps, int seconds, const ActionCatalog& catalog) {
    for (int s = 0; s < seconds; ++s) {
        accrue_income(ps, catalog);
        std::vector<QueueItem> remaining;
        for (auto& item : ps.queue) {
            if (--item.remaining > 0) {
                remaining.push_back(item);
                continue;
            }
            const ActionSpec& spec = catalog.at(item.action_id);
            switch (spec.category) {
                case ActionCategory::UnitProduction: ++ps.units[*spec.produces]; break;
                case ActionCategory::BuildingConstruction: ++ps.buildings[*spec.produces]; break;
                case ActionCategory::TechnologyDevelopment: ps.techs.insert(*spec.produces); break;
                case ActionCategory::GeneralCommand: break;  // no world to act on
            }
            if (spec.supply_granted > 0)
                ps.supply_cap = std::min(kSupplyCapMax, ps.supply_cap + spec.supply_granted);
        }
        ps.queue = std::move(remaining);
    }
}

Observation observe(const GameState& state, int player, bool cheat_vision,
                    const CatalogSet& catalogs) {
    const PlayerState& self = state.players[static_cast<std::size_t>(player)];
    const PlayerState& enemy = state.players[static_cast<std::size_t>(1 - player)];
    const ActionCatalog& enemy_cat = catalogs.get(enemy.race);

    Observation obs;
    obs.tick = state.tick;
    obs.player = player;
    obs.own_race = self.race;
    obs.enemy_race = enemy.race;
    obs.self = self;
    obs.engagement_active = state.engagement.has_value();
    obs.cheat_vision = cheat_vision;

    bool scouted = self.scout_until >= state.tick;
    if (cheat_vision || scouted) {
        obs.enemy_units = enemy.units;
        obs.enemy_buildings = enemy.buildings;
    } else if (state.engagement) {
        for (const auto& [id, count] : enemy.units)
            if (enemy_cat.unit_strength(id) > 0.0) obs.enemy_units[id] = count;
    }
    for (const auto& [id, count] : obs.enemy_units)
        if (enemy_cat.unit_strength(id) > 0.0) obs.visible_enemy_count += count;
    return obs;
}

}  // namespace hima::world

#include "hima/advisors/features.hpp"

namespace hima::advisors {

namespace {

template <typename UnitsMap, typename BuildingsMap, typename TechSet>
std::vector<double> build_features(int minerals, int gas, int supply_used, int supply_cap,
                                   const UnitsMap& units, const BuildingsMap& buildings,
                                   const TechSet& techs, int tick,
                                   const world::ActionCatalog& catalog) {
    std::vector<double> f;
    f.reserve(feature_dimension(catalog));
    f.push_back(minerals / kResourceScale);
    f.push_back(gas / kResourceScale);
    f.push_back(supply_used / kSupplyScale);
    f.push_back(supply_cap / kSupplyScale);
    for (const auto& id : catalog.all_units()) {
        auto it = units.find(id);
        f.push_back((it == units.end() ? 0 : it->second) / kUnitCountScale);
    }
    for (const auto& id : catalog.all_buildings()) {
        auto it = buildings.find(id);
        f.push_back((it == buildings.end() ? 0 : it->second) / kBuildingCountScale);
    }
    for (const auto& id : catalog.all_techs()) f.push_back(techs.count(id) ? 1.0 : 0.0);
    f.push_back(tick / kTimeScale);
    return f;
}

}  // namespace

std::size_t feature_dimension(const world::ActionCatalog& catalog) {
    return 4 + catalog.all_units().size() + catalog.all_buildings().size() +
           catalog.all_techs().size() + 1;
}

std::vector<double> feature_vector(const textio::StateSummary& s,
                                   const world::ActionCatalog& catalog) {
    return build_features(s.minerals, s.gas, s.supply_used, s.supply_cap, s.units, s.buildings,
                          s.techs, s.tick, catalog);
}

std::vector<double> feature_vector(const world::PlayerState& ps, int tick,
                                   const world::ActionCatalog& catalog) {
    return build_features(ps.minerals, ps.gas, ps.supply_used, ps.supply_cap, ps.units,
                          ps.buildings, ps.techs, tick, catalog);
}

}  // namespace hima::advisors

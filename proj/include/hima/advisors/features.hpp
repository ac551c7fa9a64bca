#pragma once

#include <vector>

#include "hima/textio/parse.hpp"
#include "hima/world/rules.hpp"

namespace hima::advisors {

// Normalization constants for the retrieval feature space.
inline constexpr double kResourceScale = 1000.0;
inline constexpr double kSupplyScale = 200.0;
inline constexpr double kUnitCountScale = 20.0;
inline constexpr double kBuildingCountScale = 10.0;
inline constexpr double kTimeScale = 3600.0;

/// Fixed-dimension normalized state vector:
/// [minerals, gas, supply_used, supply_cap, per-unit counts,
///  per-building counts, tech flags, game time]. Dimension depends only
/// on the race's catalog.
std::vector<double> feature_vector(const textio::StateSummary& s,
                                   const world::ActionCatalog& catalog);
std::vector<double> feature_vector(const world::PlayerState& ps, int tick,
                                   const world::ActionCatalog& catalog);

std::size_t feature_dimension(const world::ActionCatalog& catalog);

}  // namespace hima::advisors

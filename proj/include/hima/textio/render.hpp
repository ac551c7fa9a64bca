#pragma once

#include <string>
#include <vector>

#include "hima/world/rules.hpp"

namespace hima::textio {

/// Player-only state block (time, resources, supply, units, buildings,
/// technologies, ongoing commands). This is the S_t serialization used
/// by demo samples; it carries no opponent data.
std::string render_player_state(const world::PlayerState& ps, int tick,
                                const world::ActionCatalog& catalog);

/// Full observation text: player block plus the fog-limited
/// [Visible Enemy] section. Deterministic; entity lines follow catalog
/// order; zero-count entities are omitted.
std::string render_observation(const world::Observation& obs, const world::CatalogSet& catalogs);

}  // namespace hima::textio

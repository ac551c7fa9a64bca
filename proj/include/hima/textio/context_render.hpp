#pragma once

#include <string>

#include "hima/planner/context.hpp"

namespace hima::textio {

/// Planner-facing context block: observation, one block per advisor
/// (ordered by agent id: SO line, TR paragraph, numbered window),
/// failure records newest-last, battle events. Deterministic.
std::string render_planner_context(const planner::PlanContext& ctx,
                                   const world::CatalogSet& catalogs);

}  // namespace hima::textio

#pragma once

#include <string>
#include <vector>

#include "hima/advisors/proposal.hpp"
#include "hima/execloop/feedback.hpp"
#include "hima/world/rules.hpp"

namespace hima::planner {

/// Everything the Strategic Planner sees at one invocation.
struct PlanContext {
    world::Observation obs;
    std::vector<advisors::Proposal> proposals;
    std::vector<execloop::FailureRecord> failure_records;  // chronological
    std::vector<std::string> battle_events;
    int game_time = 0;
};

struct NoProposals : Error {
    NoProposals() : Error("plan context carries no proposals") {}
};

}  // namespace hima::planner

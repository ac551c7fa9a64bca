#pragma once

#include <string>
#include <vector>

namespace hima::advisors {

struct WindowEntry {
    std::string action_id;
    int offset = 0;  // seconds from window start, < delta

    bool operator==(const WindowEntry&) const = default;
};

/// One advisor's output: an action window plus the Tactical Rationale
/// and the Strategic Objective of the advisor's cluster.
struct Proposal {
    std::string agent_id;
    std::vector<WindowEntry> window;  // nonempty, offsets nondecreasing
    std::string tactical_rationale;
    std::string strategic_objective;
    std::string objective_label;           // GroundSupportFocus / AirFocus / GroundAirHybrid
    std::vector<std::string> quality_flags;  // parse issues from external backends
};

}  // namespace hima::advisors

#pragma once

#include <string>

#include "hima/world/rules.hpp"

namespace hima::execloop {

/// One recorded execution failure, fed back into the next plan context.
struct FailureRecord {
    int tick = 0;
    std::string action_id;
    world::Feasibility reason;  // never Ok
    int retry_count = 0;
};

struct FeedbackConfig {
    int threat_threshold = 10;      // tau
    int replan_period = 180;        // seconds, defaults to the window delta
    int max_retries_per_action = 2;
    int retry_delay = 10;           // seconds between retries of a failed entry
};

/// True iff the visible enemy combat count has reached tau (inclusive).
bool detect_threat(const world::Observation& obs, const FeedbackConfig& cfg);

enum class ReplanDecision { None, Periodic, ThreatDiscard, Exhausted };

const char* to_string(ReplanDecision d);

/// Threat discards outrank everything; then the periodic cadence; then
/// plan exhaustion.
ReplanDecision should_replan(int now, int last_plan_time, bool threat, bool plan_exhausted,
                             const FeedbackConfig& cfg);

}  // namespace hima::execloop

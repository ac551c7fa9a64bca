#include "hima/execloop/feedback.hpp"

namespace hima::execloop {

bool detect_threat(const world::Observation& obs, const FeedbackConfig& cfg) {
    return obs.visible_enemy_count >= cfg.threat_threshold;
}

const char* to_string(ReplanDecision d) {
    switch (d) {
        case ReplanDecision::None: return "none";
        case ReplanDecision::Periodic: return "periodic";
        case ReplanDecision::ThreatDiscard: return "threat_discard";
        case ReplanDecision::Exhausted: return "exhausted";
    }
    return "?";
}

ReplanDecision should_replan(int now, int last_plan_time, bool threat, bool plan_exhausted,
                             const FeedbackConfig& cfg) {
    if (threat) return ReplanDecision::ThreatDiscard;
    if (now - last_plan_time >= cfg.replan_period) return ReplanDecision::Periodic;
    if (plan_exhausted) return ReplanDecision::Exhausted;
    return ReplanDecision::None;
}

}  // namespace hima::execloop

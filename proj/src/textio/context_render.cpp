#include "hima/textio/context_render.hpp"

#include <algorithm>
#include <sstream>

#include "hima/textio/render.hpp"

namespace hima::textio {

std::string render_planner_context(const planner::PlanContext& ctx,
                                   const world::CatalogSet& catalogs) {
    if (ctx.proposals.empty()) throw planner::NoProposals();

    std::ostringstream out;
    out << "=== Current State ===\n";
    out << render_observation(ctx.obs, catalogs);

    std::vector<const advisors::Proposal*> ordered;
    for (const auto& p : ctx.proposals) ordered.push_back(&p);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto* a, const auto* b) { return a->agent_id < b->agent_id; });

    out << "=== Advisor Proposals ===\n";
    for (const auto* p : ordered) {
        out << "--- Advisor " << p->agent_id << " ---\n";
        out << "Strategic Objective: " << p->strategic_objective << "\n";
        out << "Tactical Rationale:\n" << p->tactical_rationale;
        if (!p->tactical_rationale.empty() && p->tactical_rationale.back() != '\n') out << "\n";
        out << "Proposed actions:\n";
        for (std::size_t i = 0; i < p->window.size(); ++i)
            out << i + 1 << ". " << p->window[i].action_id << " (t+" << p->window[i].offset << "s)\n";
        if (!p->quality_flags.empty()) {
            out << "Quality flags:\n";
            for (const auto& f : p->quality_flags) out << "- " << f << "\n";
        }
    }

    out << "=== Action Outcome Feedback ===\n";
    if (ctx.failure_records.empty()) {
        out << "- none\n";
    } else {
        for (const auto& f : ctx.failure_records)
            out << "- t=" << f.tick << " " << f.action_id << " failed: " << f.reason.describe()
                << " (retry " << f.retry_count << ")\n";
    }

    out << "=== Battle Progress ===\n";
    if (ctx.battle_events.empty()) {
        out << "- none\n";
    } else {
        for (const auto& e : ctx.battle_events) out << "- " << e << "\n";
    }
    return out.str();
}

}  // namespace hima::textio

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hima/world/catalog.hpp"

namespace hima::textio {

struct ActionRequest {
    std::string action_id;
};

enum class ParseIssueKind { UnknownAction, NoActionsFound };

struct ParseIssue {
    ParseIssueKind kind;
    std::string token;  // offending text for UnknownAction

    bool operator==(const ParseIssue&) const = default;
};

struct ParseResult {
    std::vector<ActionRequest> actions;
    std::vector<ParseIssue> issues;
};

/// Lenient, total extraction of catalog action ids from an agent reply.
/// Accepts numbered lists, comma/semicolon/newline separation, spaced
/// or squashed id spelling, case-insensitively. Unknown segments are
/// reported, never thrown.
ParseResult parse_action_sequence(const std::string& text, const world::ActionCatalog& catalog);

/// Machine-readable view of a rendered player-state block.
struct StateSummary {
    int tick = 0;
    int minerals = 0;
    int gas = 0;
    int supply_used = 0;
    int supply_cap = 0;
    std::map<std::string, int> units;
    std::map<std::string, int> buildings;
    std::set<std::string> techs;
    std::vector<std::string> ongoing;  // action ids in queue order
};

/// Inverse of render_player_state for all machine-consumed fields.
StateSummary parse_state(const std::string& text);

}  // namespace hima::textio

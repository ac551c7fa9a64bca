#pragma once

#include <string>

#include "hima/advisors/proposal.hpp"
#include "hima/world/catalog.hpp"

namespace hima::advisors {

/// Where an external agent lives: "http://host:port/path" for POST
/// exchanges, or "cmd:<shell command>" for a line-oriented local pipe
/// (one JSON document per line on stdin/stdout).
struct AgentEndpoint {
    std::string target;
    int timeout_seconds = 60;

    bool configured() const { return !target.empty(); }
};

/// Endpoint from HIMA_AGENT_ENDPOINT / HIMA_AGENT_TIMEOUT, if set.
AgentEndpoint endpoint_from_env();

struct AgentParams {
    double temperature = 0.7;
    int max_actions = 40;
    int window_seconds = 180;
};

struct AgentRequest {
    std::string system;
    std::string input;
    AgentParams params;
};

struct EndpointUnconfigured : Error {
    EndpointUnconfigured() : Error("external agent endpoint not configured") {}
};

struct Timeout : Error {
    explicit Timeout(int seconds)
        : Error("external agent call timed out after " + std::to_string(seconds) + "s") {}
};

struct MalformedReply : Error {
    explicit MalformedReply(const std::string& detail)
        : Error("external agent reply unusable: " + detail) {}
};

/// One request/response exchange; returns the reply's output field.
/// Throws Timeout / MalformedReply / EndpointUnconfigured.
std::string call_agent(const AgentEndpoint& endpoint, const AgentRequest& request);

/// Full advisor-style exchange: send (system, state text, params),
/// parse the reply into an action window. Parse issues degrade the
/// proposal instead of failing it; an actionless reply is malformed.
Proposal external_exchange(const AgentEndpoint& endpoint, const std::string& system_prompt,
                           const std::string& state_text, const AgentParams& params,
                           const world::ActionCatalog& catalog);

}  // namespace hima::advisors

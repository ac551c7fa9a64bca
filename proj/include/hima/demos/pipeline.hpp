#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hima/advisors/agent_io.hpp"
#include "hima/advisors/proposal.hpp"
#include "hima/demos/replay.hpp"
#include "hima/world/catalog.hpp"

namespace hima::demos {

enum class RationaleMode { Template, External };

struct PipelineConfig {
    int window_seconds = 180;  // delta
    RationaleMode rationale_mode = RationaleMode::Template;
    bool winners_only = false;
    advisors::AgentEndpoint endpoint;  // External mode only
};

/// One (state text, window, rationale) training record.
struct DemoSample {
    std::string state_text;  // player-only, no enemy data
    std::vector<advisors::WindowEntry> window;  // nonempty, first offset 0
    std::string rationale;
    std::string replay_id;
    int t = 0;
    std::optional<int> cluster_id;
    bool rationale_unavailable = false;  // External endpoint failed
};

struct EmptyReplay : Error {
    EmptyReplay() : Error("replay has no events for the requested player") {}
};

/// One sample per distinct action timestamp of `player`; the window at
/// t collects that player's actions in the half-open span [t, t+delta).
std::vector<DemoSample> extract_samples(const ReplayLog& log, const PipelineConfig& cfg,
                                        int player);

/// Template mode fills the three-timeframe scaffold from the window;
/// External mode asks the configured endpoint and flags the sample on
/// failure instead of throwing.
DemoSample attach_rationale(DemoSample sample, const PipelineConfig& cfg,
                            const world::ActionCatalog& catalog);

inline constexpr const char* kSoPlaceholder = "<<SO>>";

/// Instruction text shared by every dataset record; the advisor's
/// strategic objective replaces kSoPlaceholder downstream.
std::string dataset_instruction();

/// Render the numbered action list that ends each record's output.
std::string render_action_window(const std::vector<advisors::WindowEntry>& window);

/// Newline-delimited records {instruction, input, output} (+ metadata
/// for lossless reload). Flagged rationale-less samples are skipped.
/// Returns the record count written.
int emit_dataset(const std::vector<DemoSample>& samples, const std::string& path);
std::vector<DemoSample> read_dataset(const std::string& path);

}  // namespace hima::demos

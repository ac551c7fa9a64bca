#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hima/world/state.hpp"

namespace hima::demos {

struct ReplayEvent {
    int t = 0;
    int player = 0;
    std::string action_id;
};

struct ReplayMeta {
    std::string id;
    std::array<world::Race, 2> races = {world::Race::Protoss, world::Race::Protoss};
    std::uint64_t seed = 0;
    int winner = -1;  // player index, -1 for draw
    int duration = 0;
    int subject = 0;  // the demonstrating side
    std::array<std::map<std::string, int>, 2> final_units;
};

/// Match recording: ordered action events, each with the acting
/// player's serialized state at issue time.
struct ReplayLog {
    ReplayMeta meta;
    std::vector<ReplayEvent> events;       // sorted by t, emission order on ties
    std::vector<std::string> snapshots;    // state text per event, player-only
};

void write_replay(const ReplayLog& log, const std::string& path);
ReplayLog read_replay(const std::string& path);

std::string replay_to_text(const ReplayLog& log);
ReplayLog replay_from_text(const std::string& text);

}  // namespace hima::demos

#include "hima/demos/replay.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hima::demos {

std::string replay_to_text(const ReplayLog& log) {
    std::ostringstream out;
    nlohmann::json header;
    header["hima_replay"] = 1;
    header["id"] = log.meta.id;
    header["races"] = {world::to_string(log.meta.races[0]), world::to_string(log.meta.races[1])};
    header["seed"] = log.meta.seed;
    header["winner"] = log.meta.winner;
    header["duration"] = log.meta.duration;
    header["subject"] = log.meta.subject;
    header["final_units"] = {log.meta.final_units[0], log.meta.final_units[1]};
    out << header.dump() << "\n";
    for (std::size_t i = 0; i < log.events.size(); ++i) {
        nlohmann::json ev;
        ev["t"] = log.events[i].t;
        ev["player"] = log.events[i].player;
        ev["action"] = log.events[i].action_id;
        ev["state"] = i < log.snapshots.size() ? log.snapshots[i] : "";
        out << ev.dump() << "\n";
    }
    return out.str();
}

ReplayLog replay_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ReplayLog log;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        if (!header_seen) {
            if (!j.contains("hima_replay") || j["hima_replay"].get<int>() != 1)
                throw IoError("not a hima replay document");
            log.meta.id = j.at("id").get<std::string>();
            log.meta.races[0] = world::race_from_string(j.at("races")[0].get<std::string>());
            log.meta.races[1] = world::race_from_string(j.at("races")[1].get<std::string>());
            log.meta.seed = j.at("seed").get<std::uint64_t>();
            log.meta.winner = j.at("winner").get<int>();
            log.meta.duration = j.at("duration").get<int>();
            log.meta.subject = j.at("subject").get<int>();
            log.meta.final_units[0] = j.at("final_units")[0].get<std::map<std::string, int>>();
            log.meta.final_units[1] = j.at("final_units")[1].get<std::map<std::string, int>>();
            header_seen = true;
            continue;
        }
        log.events.push_back({j.at("t").get<int>(), j.at("player").get<int>(),
                              j.at("action").get<std::string>()});
        log.snapshots.push_back(j.at("state").get<std::string>());
    }
    if (!header_seen) throw IoError("empty replay document");
    return log;
}

void write_replay(const ReplayLog& log, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write replay: " + path);
    out << replay_to_text(log);
    if (!out) throw IoError("replay write failed: " + path);
}

ReplayLog read_replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open replay: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return replay_from_text(buf.str());
}

}  // namespace hima::demos

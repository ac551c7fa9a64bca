#include "hima/world/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hima::world {

const char* to_string(Race race) {
    switch (race) {
        case Race::Protoss: return "Protoss";
        case Race::Terran: return "Terran";
        case Race::Zerg: return "Zerg";
    }
    return "?";
}

Race race_from_string(const std::string& name) {
    std::string lowered;
    for (char c : name) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lowered == "protoss") return Race::Protoss;
    if (lowered == "terran") return Race::Terran;
    if (lowered == "zerg") return Race::Zerg;
    throw ConfigError("unknown race: " + name);
}

const char* to_string(ActionCategory cat) {
    switch (cat) {
        case ActionCategory::UnitProduction: return "unit";
        case ActionCategory::BuildingConstruction: return "building";
        case ActionCategory::TechnologyDevelopment: return "tech";
        case ActionCategory::GeneralCommand: return "command";
    }
    return "?";
}

CatalogCountError::CatalogCountError(int expected_, int got_)
    : Error("catalog action count mismatch: expected " + std::to_string(expected_) +
            ", got " + std::to_string(got_)),
      expected(expected_),
      got(got_) {}

namespace {
std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& p : path) {
        if (!out.empty()) out += " -> ";
        out += p;
    }
    return out;
}
}  // namespace

CatalogCycleError::CatalogCycleError(std::vector<std::string> path_)
    : Error("catalog prerequisite cycle: " + join_path(path_)), path(std::move(path_)) {}

CatalogRefError::CatalogRefError(std::string id_)
    : Error("catalog dangling reference: " + id_), id(std::move(id_)) {}

int expected_action_count(Race race) {
    switch (race) {
        case Race::Protoss: return 58;
        case Race::Zerg: return 61;
        case Race::Terran: return 62;
    }
    return 0;
}

ActionCatalog::ActionCatalog(Race race, std::vector<ActionSpec> actions)
    : race_(race), actions_(std::move(actions)) {
    for (int i = 0; i < static_cast<int>(actions_.size()); ++i) {
        const auto& a = actions_[static_cast<std::size_t>(i)];
        if (index_.count(a.id)) throw CatalogRefError("duplicate action id " + a.id);
        index_[a.id] = i;
        if (a.produces) {
            if (producer_index_.count(*a.produces))
                throw CatalogRefError("duplicate produces id " + *a.produces);
            producer_index_[*a.produces] = i;
        }
        if (a.produces) {
            switch (a.category) {
                case ActionCategory::UnitProduction:
                    all_units_.push_back(*a.produces);
                    if (a.strength > 0.0) unit_set_.push_back(*a.produces);
                    break;
                case ActionCategory::BuildingConstruction:
                    all_buildings_.push_back(*a.produces);
                    break;
                case ActionCategory::TechnologyDevelopment:
                    all_techs_.push_back(*a.produces);
                    break;
                default: break;
            }
        }
    }
    validate();
}

void ActionCatalog::validate() const {
    const int expected = expected_action_count(race_);
    if (static_cast<int>(actions_.size()) != expected)
        throw CatalogCountError(expected, static_cast<int>(actions_.size()));

    // Every prerequisite must be producible within this catalog.
    for (const auto& a : actions_) {
        if (a.category != ActionCategory::GeneralCommand && a.mineral_cost + a.gas_cost <= 0)
            throw CatalogRefError("zero-cost non-command action " + a.id);
        if (a.build_time < 1) throw CatalogRefError("non-positive build_time on " + a.id);
        for (const auto& p : a.prerequisites)
            if (!producer_index_.count(p)) throw CatalogRefError(p);
    }

    // Cycle detection over the action graph: action -> producer of each
    // prerequisite entity.
    enum class Mark { White, Grey, Black };
    std::vector<Mark> mark(actions_.size(), Mark::White);
    std::vector<std::string> stack;
    auto dfs = [&](auto&& self, int idx) -> void {
        mark[static_cast<std::size_t>(idx)] = Mark::Grey;
        stack.push_back(actions_[static_cast<std::size_t>(idx)].id);
        for (const auto& p : actions_[static_cast<std::size_t>(idx)].prerequisites) {
            int dep = producer_index_.at(p);
            if (mark[static_cast<std::size_t>(dep)] == Mark::Grey) {
                auto path = stack;
                path.push_back(actions_[static_cast<std::size_t>(dep)].id);
                throw CatalogCycleError(path);
            }
            if (mark[static_cast<std::size_t>(dep)] == Mark::White) self(self, dep);
        }
        mark[static_cast<std::size_t>(idx)] = Mark::Black;
        stack.pop_back();
    };
    for (int i = 0; i < static_cast<int>(actions_.size()); ++i)
        if (mark[static_cast<std::size_t>(i)] == Mark::White) dfs(dfs, i);

    // Bootstrap reachability: starting from actions with no
    // prerequisites, everything must become buildable.
    std::set<std::string> producible;
    bool any_bootstrap = false;
    std::vector<bool> reached(actions_.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < actions_.size(); ++i) {
            if (reached[i]) continue;
            const auto& a = actions_[i];
            bool ok = std::all_of(a.prerequisites.begin(), a.prerequisites.end(),
                                  [&](const std::string& p) { return producible.count(p) > 0; });
            if (!ok) continue;
            reached[i] = true;
            progress = true;
            if (a.prerequisites.empty()) any_bootstrap = true;
            if (a.produces) producible.insert(*a.produces);
        }
    }
    if (!any_bootstrap) throw CatalogRefError("no bootstrap action (empty prerequisites)");
    for (std::size_t i = 0; i < actions_.size(); ++i)
        if (!reached[i]) throw CatalogRefError("unreachable action " + actions_[i].id);
}

const ActionSpec* ActionCatalog::find(const std::string& action_id) const {
    auto it = index_.find(action_id);
    if (it == index_.end()) return nullptr;
    return &actions_[static_cast<std::size_t>(it->second)];
}

const ActionSpec& ActionCatalog::at(const std::string& action_id) const {
    const ActionSpec* spec = find(action_id);
    if (!spec) throw Error("unknown action id: " + action_id);
    return *spec;
}

int ActionCatalog::index_of(const std::string& action_id) const {
    auto it = index_.find(action_id);
    return it == index_.end() ? -1 : it->second;
}

int ActionCatalog::producer_index(const std::string& entity_id) const {
    auto it = producer_index_.find(entity_id);
    return it == producer_index_.end() ? -1 : it->second;
}

const ActionSpec* ActionCatalog::producer_of(const std::string& entity_id) const {
    int idx = producer_index(entity_id);
    return idx < 0 ? nullptr : &actions_[static_cast<std::size_t>(idx)];
}

bool ActionCatalog::is_air_unit(const std::string& unit_id) const {
    const ActionSpec* spec = producer_of(unit_id);
    return spec != nullptr && spec->air;
}

double ActionCatalog::unit_strength(const std::string& unit_id) const {
    const ActionSpec* spec = producer_of(unit_id);
    return spec ? spec->strength : 0.0;
}

int ActionCatalog::unit_supply_weight(const std::string& unit_id) const {
    const ActionSpec* spec = producer_of(unit_id);
    return spec ? spec->supply_cost : 0;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    return out;
}

ActionCategory category_from_string(const std::string& s) {
    if (s == "unit") return ActionCategory::UnitProduction;
    if (s == "building") return ActionCategory::BuildingConstruction;
    if (s == "tech") return ActionCategory::TechnologyDevelopment;
    if (s == "command") return ActionCategory::GeneralCommand;
    throw ConfigError("unknown action category: " + s);
}

}  // namespace

ActionCatalog load_catalog(Race race, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::vector<ActionSpec> actions;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            // Versioned header: "hima-catalog <version> <race>"
            auto parts = split(t, ' ');
            if (parts.size() < 3 || parts[0] != "hima-catalog")
                throw ConfigError("missing catalog header at line " + std::to_string(line_no));
            if (race_from_string(parts[2]) != race)
                throw ConfigError("catalog race mismatch: " + parts[2]);
            header_seen = true;
            continue;
        }
        auto f = split(t, '|');
        if (f.size() != 11)
            throw ConfigError("bad catalog record at line " + std::to_string(line_no) + ": " + t);
        ActionSpec a;
        a.id = f[0];
        a.race = race;
        a.category = category_from_string(f[1]);
        a.mineral_cost = std::stoi(f[2]);
        a.gas_cost = std::stoi(f[3]);
        a.supply_cost = std::stoi(f[4]);
        a.supply_granted = std::stoi(f[5]);
        a.build_time = std::stoi(f[6]);
        a.strength = std::stod(f[7]);
        if (f[8] != "-")
            for (const auto& flag : split(f[8], ',')) {
                if (flag == "air") a.air = true;
                else if (flag == "unique") a.unique_structure = true;
                else throw ConfigError("unknown flag '" + flag + "' on " + a.id);
            }
        if (f[9] != "-") a.produces = f[9];
        if (f[10] != "-") a.prerequisites = split(f[10], ',');
        actions.push_back(std::move(a));
    }
    if (!header_seen) throw ConfigError("empty catalog document");
    return ActionCatalog(race, std::move(actions));
}

ActionCatalog load_catalog_file(Race race, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open catalog file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_catalog(race, buf.str());
}

std::string default_data_dir() {
    if (const char* env = std::getenv("HIMA_DATA_DIR"); env && *env) return env;
#ifdef HIMA_DEFAULT_DATA_DIR
    return HIMA_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

CatalogSet::CatalogSet(const std::string& data_dir)
    : protoss_(load_catalog_file(Race::Protoss, data_dir + "/catalog_protoss.txt")),
      terran_(load_catalog_file(Race::Terran, data_dir + "/catalog_terran.txt")),
      zerg_(load_catalog_file(Race::Zerg, data_dir + "/catalog_zerg.txt")) {}

const ActionCatalog& CatalogSet::get(Race race) const {
    switch (race) {
        case Race::Protoss: return protoss_;
        case Race::Terran: return terran_;
        case Race::Zerg: return zerg_;
    }
    return protoss_;
}

}  // namespace hima::world

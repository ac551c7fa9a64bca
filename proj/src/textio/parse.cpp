#include "hima/textio/parse.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace hima::textio {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string normalize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

}  // namespace

ParseResult parse_action_sequence(const std::string& text, const world::ActionCatalog& catalog) {
    ParseResult result;

    std::map<std::string, std::string> by_norm;
    for (const auto& a : catalog.actions()) by_norm[normalize(a.id)] = a.id;

    // Item boundaries: list numbering, commas, semicolons, newlines.
    static const std::regex item_marker(R"((^|\s)\d+\s*[.)\]:])");
    std::string prepared = std::regex_replace(text, item_marker, "\n");
    for (char& c : prepared)
        if (c == ',' || c == ';') c = '\n';

    std::istringstream in(prepared);
    std::string line;
    while (std::getline(in, line)) {
        std::string seg = trim(line);
        while (!seg.empty() && (seg[0] == '-' || seg[0] == '*' || seg[0] == '>')) seg = trim(seg.substr(1));
        // Drop a trailing parenthetical remark.
        if (auto p = seg.find('('); p != std::string::npos && seg.back() == ')') seg = trim(seg.substr(0, p));
        if (seg.empty()) continue;
        std::string key = normalize(seg);
        if (key.empty()) continue;
        if (auto it = by_norm.find(key); it != by_norm.end())
            result.actions.push_back({it->second});
        else
            result.issues.push_back({ParseIssueKind::UnknownAction, seg});
    }

    if (result.actions.empty() && result.issues.empty())
        result.issues.push_back({ParseIssueKind::NoActionsFound, ""});
    return result;
}

StateSummary parse_state(const std::string& text) {
    StateSummary s;
    enum class Section { None, Units, Buildings, Techs, Ongoing, Enemy };
    Section section = Section::None;

    static const std::regex time_re(R"(\[Time\].*\((\d+)s\))");
    static const std::regex res_re(R"(\[Resources\] minerals: (-?\d+), gas: (-?\d+))");
    static const std::regex supply_re(R"(\[Supply\] (\d+)/(\d+))");
    static const std::regex count_re(R"(- (\w+) x(\d+))");
    static const std::regex ongoing_re(R"(- (\w+) \((\d+)s remaining\))");

    std::istringstream in(text);
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        if (std::regex_search(line, m, time_re)) { s.tick = std::stoi(m[1]); continue; }
        if (std::regex_search(line, m, res_re)) {
            s.minerals = std::stoi(m[1]);
            s.gas = std::stoi(m[2]);
            continue;
        }
        if (std::regex_search(line, m, supply_re)) {
            s.supply_used = std::stoi(m[1]);
            s.supply_cap = std::stoi(m[2]);
            continue;
        }
        if (line.rfind("[Units]", 0) == 0) { section = Section::Units; continue; }
        if (line.rfind("[Buildings]", 0) == 0) { section = Section::Buildings; continue; }
        if (line.rfind("[Technologies]", 0) == 0) { section = Section::Techs; continue; }
        if (line.rfind("[Ongoing Commands]", 0) == 0) { section = Section::Ongoing; continue; }
        if (line.rfind("[Visible Enemy]", 0) == 0) { section = Section::Enemy; continue; }
        if (line.rfind("- none", 0) == 0) continue;

        switch (section) {
            case Section::Units:
                if (std::regex_search(line, m, count_re)) s.units[m[1]] = std::stoi(m[2]);
                break;
            case Section::Buildings:
                if (std::regex_search(line, m, count_re)) s.buildings[m[1]] = std::stoi(m[2]);
                break;
            case Section::Techs:
                if (line.rfind("- ", 0) == 0) s.techs.insert(trim(line.substr(2)));
                break;
            case Section::Ongoing:
                if (std::regex_search(line, m, ongoing_re)) s.ongoing.push_back(m[1]);
                break;
            default:
                break;
        }
    }
    return s;
}

}  // namespace hima::textio

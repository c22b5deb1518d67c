#include "sim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::sim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
    fail(ErrorCode::ScenarioParseError, msg, line);
}

void parse_datapoint_line(ScenarioFile& out, std::string_view rest, int line_no) {
    // @datapoint <user_id> <type> <value...>; the value keeps inner spaces.
    std::istringstream ss{std::string(rest)};
    std::string user_id, type;
    if (!(ss >> user_id >> type)) bad_line(line_no, "@datapoint needs <user_id> <type> <value>");
    std::string value;
    std::getline(ss, value);
    value = std::string(trim(value));
    if (value.empty()) bad_line(line_no, "@datapoint needs a non-empty value");
    if (!is_known_datapoint_type(type))
        bad_line(line_no, "unknown datapoint type '" + type + "'");
    for (const auto& [uid, profile] : out.profiles) {
        if (uid != user_id && profile.datapoints.count(type))
            bad_line(line_no, "datapoint type '" + type + "' already belongs to user '" + uid +
                                  "'; one type per user in a scenario");
    }
    UserProfile& profile = out.profiles[user_id];
    profile.user_id = user_id;
    auto [it, inserted] = profile.datapoints.emplace(type, value);
    if (!inserted && it->second != value)
        bad_line(line_no, "conflicting values for datapoint '" + type + "' of user '" +
                              user_id + "'");
}

void parse_record_line(ScenarioFile& out, std::string_view line, int line_no) {
    auto p1 = line.find('|');
    auto p2 = p1 == std::string_view::npos ? p1 : line.find('|', p1 + 1);
    if (p2 == std::string_view::npos)
        bad_line(line_no, "expected '<time> | <user_id> | <utterance>'");
    ScenarioRecord rec;
    rec.time_iso = std::string(trim(line.substr(0, p1)));
    rec.user_id = std::string(trim(line.substr(p1 + 1, p2 - p1 - 1)));
    rec.utterance = std::string(trim(line.substr(p2 + 1)));
    rec.line = line_no;
    auto epoch = timeutil::parse_iso_utc(rec.time_iso);
    if (!epoch) bad_line(line_no, "malformed timestamp '" + rec.time_iso + "'");
    rec.epoch = *epoch;
    if (rec.user_id.empty()) bad_line(line_no, "empty user id");
    if (rec.utterance.empty()) bad_line(line_no, "empty utterance");
    out.records.push_back(std::move(rec));
}

} // namespace

ScenarioFile parse_scenario(std::string_view text) {
    ScenarioFile out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '@') {
            if (line.rfind("@datapoint", 0) == 0)
                parse_datapoint_line(out, line.substr(10), line_no);
            else
                bad_line(line_no, "unknown directive '" + std::string(line) + "'");
            continue;
        }
        parse_record_line(out, line, line_no);
    }
    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const ScenarioRecord& a, const ScenarioRecord& b) {
                         return a.epoch < b.epoch;
                     });
    return out;
}

ScenarioFile load_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) fail(ErrorCode::StorageError, "cannot read scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

} // namespace provaud::sim

#include "query/narrate.hpp"

#include <algorithm>

#include "query/generalize.hpp"
#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::query {

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t");
    if (lo == std::string::npos) return "";
    std::size_t hi = s.find_last_not_of(" \t");
    return s.substr(lo, hi - lo + 1);
}

void push_unique(std::vector<std::string>& items, const std::string& value) {
    if (std::find(items.begin(), items.end(), value) == items.end()) items.push_back(value);
}

} // namespace

std::string DisplayNames::display(const prov::QualifiedName& id) const {
    auto it = labels.find(id.str());
    return it == labels.end() ? id.local : it->second;
}

DisplayNames parse_display_names(const std::string& text) {
    DisplayNames names;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
        pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::SyntaxError, "display names: missing '='", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string label = trim(line.substr(eq + 1));
        if (key.empty() || label.empty())
            fail(ErrorCode::SyntaxError, "display names: empty side of '='", line_no);
        names.labels[key] = label;
    }
    return names;
}

NarrativePlan plan_recipients(const std::vector<DataFlowRow>& rows, const DisplayNames& names,
                              bool generalize) {
    NarrativePlan plan;
    for (const DataFlowRow& row : rows) {
        auto frame = std::find_if(plan.frames.begin(), plan.frames.end(),
                                  [&](const SentenceFrame& f) { return f.data_type == row.data_type; });
        if (frame == plan.frames.end()) {
            SentenceFrame fresh;
            fresh.data_type = row.data_type;
            if (!row.time_iso.empty()) {
                auto epoch = timeutil::parse_iso_utc(row.time_iso);
                if (epoch) {
                    std::int64_t shown = generalize ? generalize_time(*epoch) : *epoch;
                    fresh.date = timeutil::date_part(shown);
                    fresh.clock = timeutil::hh_mm_part(shown);
                }
            }
            plan.frames.push_back(std::move(fresh));
            frame = plan.frames.end() - 1;
        }
        push_unique(frame->services, names.display(row.service_id));
        push_unique(frame->skills, names.display(row.skill_id));
    }
    return plan;
}

std::string realize(const NarrativePlan& plan) {
    if (plan.frames.empty()) return "No personal data was sent to any external service.";
    std::string out;
    for (const SentenceFrame& frame : plan.frames) {
        if (!out.empty()) out += ' ';
        out += "Your " + frame.data_type + " was sent to " + join_names(frame.services) +
               " by the " + join_names(frame.skills) +
               (frame.skills.size() > 1 ? " skills" : " skill");
        if (!frame.date.empty()) out += " on " + frame.date + " at " + frame.clock;
        out += '.';
    }
    return out;
}

std::string narrate_recipients(const std::vector<DataFlowRow>& rows, const DisplayNames& names,
                               bool generalize) {
    return realize(plan_recipients(rows, names, generalize));
}

std::string join_names(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += (i + 1 == items.size()) ? " and " : ", ";
        out += items[i];
    }
    return out;
}

} // namespace provaud::query

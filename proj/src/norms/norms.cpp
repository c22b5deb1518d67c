#include "norms/norms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include <json.hpp>

#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::norms {

using prov::ProvDocument;
using prov::ProvNode;
using prov::ProvRelation;
using prov::QualifiedName;
using prov::RelationKind;

const char* day_class_name(DayClass c) {
    return c == DayClass::Weekday ? "weekday" : "weekend";
}

DayClass day_class_of(std::int64_t epoch_seconds) {
    return timeutil::is_weekend(epoch_seconds) ? DayClass::Weekend : DayClass::Weekday;
}

IntervalSpec door_interval_spec() {
    return {"door_open_interval", "door_opened", "door_closed"};
}

namespace {

bool ends_with(const std::string& text, const std::string& suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Marker occurrences: (time, is_close). Opens order before closes at the
/// same instant so a zero-length interval still pairs up.
std::vector<std::pair<std::int64_t, bool>> marker_occurrences(const ProvDocument& trail,
                                                              const IntervalSpec& spec) {
    const std::string open_suffix = "/action/" + spec.open_marker;
    const std::string close_suffix = "/action/" + spec.close_marker;
    std::set<std::pair<QualifiedName, QualifiedName>> seen; // (activity, entity)
    std::vector<std::pair<std::int64_t, bool>> occurrences;
    for (const ProvRelation& rel : trail.relations()) {
        if (rel.kind != RelationKind::Used) continue;
        bool is_open = ends_with(rel.target.local, open_suffix);
        bool is_close = ends_with(rel.target.local, close_suffix);
        if (!is_open && !is_close) continue;
        const ProvNode* activity = trail.find_node(rel.source);
        if (!activity || !activity->start_time) continue;
        auto start = timeutil::parse_iso_utc(activity->start_time->iso);
        if (!start) continue;
        if (!seen.insert({rel.source, rel.target}).second) continue;
        occurrences.push_back({*start, is_close});
    }
    std::sort(occurrences.begin(), occurrences.end());
    return occurrences;
}

} // namespace

std::vector<ActionEvent> extract_events(const ProvDocument& trail, const IntervalSpec& spec) {
    std::vector<std::int64_t> pending_opens;
    std::vector<ActionEvent> events;
    for (const auto& [time, is_close] : marker_occurrences(trail, spec)) {
        if (!is_close) {
            pending_opens.push_back(time);
            continue;
        }
        if (pending_opens.empty()) continue; // close without an open
        std::int64_t open = pending_opens.front();
        pending_opens.erase(pending_opens.begin());
        events.push_back({spec.action_type, open, time - open});
    }
    for (std::int64_t open : pending_opens)
        events.push_back({spec.action_type, open, std::nullopt});
    std::sort(events.begin(), events.end(), [](const ActionEvent& a, const ActionEvent& b) {
        return a.start_epoch < b.start_epoch;
    });
    return events;
}

namespace {

void validate_config(const NormConfig& config) {
    if (config.bin_width_min < 1 || config.bin_width_min > 1440)
        fail(ErrorCode::InvalidArgument, "bin width must be between 1 and 1440 minutes");
    if (config.min_support < 1)
        fail(ErrorCode::InvalidArgument, "min support must be at least 1");
    if (config.window_pad_min < 0)
        fail(ErrorCode::InvalidArgument, "window pad cannot be negative");
    if (!(config.duration_factor > 0))
        fail(ErrorCode::InvalidArgument, "duration factor must be positive");
}

} // namespace

std::vector<Norm> mine_norms(const std::vector<ActionEvent>& events, const NormConfig& config) {
    validate_config(config);
    const int width = config.bin_width_min;
    const int n_bins = (1440 + width - 1) / width;

    // Partition closed events by (action_type, day_class); bucket by start bin.
    std::map<std::pair<std::string, DayClass>, std::map<int, std::vector<std::int64_t>>> parts;
    for (const ActionEvent& ev : events) {
        if (!ev.duration_seconds) continue;
        int bin = timeutil::minute_of_day(ev.start_epoch) / width;
        parts[{ev.action_type, day_class_of(ev.start_epoch)}][bin].push_back(
            *ev.duration_seconds);
    }

    std::vector<Norm> norms;
    for (const auto& [key, bins] : parts) {
        int run_start = -1;
        auto close_run = [&](int run_end) {
            if (run_start < 0) return;
            Norm norm;
            norm.action_type = key.first;
            norm.day_class = key.second;
            norm.window_start_min = std::max(0, run_start * width - config.window_pad_min);
            norm.window_end_min = std::min(1440, (run_end + 1) * width + config.window_pad_min);
            bool first = true;
            for (int b = run_start; b <= run_end; ++b) {
                auto it = bins.find(b);
                if (it == bins.end()) continue;
                for (std::int64_t d : it->second) {
                    norm.duration_min_s = first ? d : std::min(norm.duration_min_s, d);
                    norm.duration_max_s = first ? d : std::max(norm.duration_max_s, d);
                    first = false;
                    ++norm.support;
                }
            }
            norms.push_back(std::move(norm));
            run_start = -1;
        };
        for (int b = 0; b < n_bins; ++b) {
            auto it = bins.find(b);
            bool qualifies = it != bins.end() &&
                             static_cast<int>(it->second.size()) >= config.min_support;
            if (qualifies && run_start < 0) run_start = b;
            if (!qualifies) close_run(b - 1);
        }
        close_run(n_bins - 1);
    }

    std::sort(norms.begin(), norms.end(), [](const Norm& a, const Norm& b) {
        return std::tie(a.action_type, a.day_class, a.window_start_min) <
               std::tie(b.action_type, b.day_class, b.window_start_min);
    });
    return norms;
}

std::optional<Violation> check_violation(const ActionEvent& event,
                                         const std::vector<Norm>& norms,
                                         const NormConfig& config,
                                         std::optional<std::int64_t> as_of_epoch) {
    validate_config(config);
    const DayClass day = day_class_of(event.start_epoch);
    const int minute = timeutil::minute_of_day(event.start_epoch);

    const Norm* best = nullptr;
    for (const Norm& norm : norms) {
        if (norm.action_type != event.action_type || norm.day_class != day) continue;
        if (!norm.contains_minute(minute)) continue;
        if (!best ||
            std::tuple(norm.duration_max_s, norm.support, -norm.window_start_min) >
                std::tuple(best->duration_max_s, best->support, -best->window_start_min))
            best = &norm;
    }
    if (!best) return Violation{event, ViolationKind::OutsideWindow, std::nullopt};

    std::optional<std::int64_t> duration = event.duration_seconds;
    if (!duration && as_of_epoch && *as_of_epoch >= event.start_epoch)
        duration = *as_of_epoch - event.start_epoch;
    if (duration &&
        static_cast<double>(*duration) >
            config.duration_factor * static_cast<double>(best->duration_max_s))
        return Violation{event, ViolationKind::ExcessiveDuration, *best};
    return std::nullopt;
}

std::string encode_norm(const Norm& norm) {
    nlohmann::ordered_json j;
    j["action_type"] = norm.action_type;
    j["day_class"] = day_class_name(norm.day_class);
    j["window"] = {norm.window_start_min, norm.window_end_min};
    j["duration"] = {norm.duration_min_s, norm.duration_max_s};
    j["support"] = norm.support;
    return j.dump();
}

std::optional<Norm> decode_norm(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("action_type") || !j["action_type"].is_string()) return std::nullopt;
    if (!j.contains("day_class") || !j["day_class"].is_string()) return std::nullopt;
    if (!j.contains("window") || !j["window"].is_array() || j["window"].size() != 2 ||
        !j["window"][0].is_number_integer() || !j["window"][1].is_number_integer())
        return std::nullopt;
    if (!j.contains("duration") || !j["duration"].is_array() || j["duration"].size() != 2 ||
        !j["duration"][0].is_number_integer() || !j["duration"][1].is_number_integer())
        return std::nullopt;
    if (!j.contains("support") || !j["support"].is_number_integer()) return std::nullopt;

    Norm norm;
    norm.action_type = j["action_type"].get<std::string>();
    std::string day = j["day_class"].get<std::string>();
    if (day == "weekday") norm.day_class = DayClass::Weekday;
    else if (day == "weekend") norm.day_class = DayClass::Weekend;
    else return std::nullopt;
    norm.window_start_min = j["window"][0].get<int>();
    norm.window_end_min = j["window"][1].get<int>();
    norm.duration_min_s = j["duration"][0].get<std::int64_t>();
    norm.duration_max_s = j["duration"][1].get<std::int64_t>();
    norm.support = j["support"].get<int>();
    if (norm.window_start_min < 0 || norm.window_end_min > 1440 ||
        norm.window_start_min >= norm.window_end_min)
        return std::nullopt;
    if (norm.duration_min_s < 0 || norm.duration_min_s > norm.duration_max_s) return std::nullopt;
    if (norm.support < 1) return std::nullopt;
    return norm;
}

std::string format_duration(std::int64_t seconds) {
    if (seconds >= 3600 && seconds % 3600 == 0) return std::to_string(seconds / 3600) + " h";
    if (seconds >= 60 && seconds % 60 == 0) return std::to_string(seconds / 60) + " min";
    return std::to_string(seconds) + " s";
}

namespace {

std::string duration_range_text(std::int64_t lo, std::int64_t hi) {
    if (lo == hi) return format_duration(lo);
    // "2-5 min" when the unit agrees, "90 s-40 min" otherwise.
    std::string a = format_duration(lo);
    std::string b = format_duration(hi);
    auto unit = [](const std::string& s) { return s.substr(s.find(' ') + 1); };
    if (unit(a) == unit(b)) return a.substr(0, a.find(' ')) + "-" + b;
    return a + "-" + b;
}

} // namespace

std::string summarize_norm(const Norm& norm) {
    return norm.action_type + ": " + day_class_name(norm.day_class) + "s " +
           timeutil::hh_mm_of_minutes(norm.window_start_min) + "-" +
           timeutil::hh_mm_of_minutes(norm.window_end_min) + ", " +
           duration_range_text(norm.duration_min_s, norm.duration_max_s) + ", support " +
           std::to_string(norm.support);
}

std::string describe_violation(const Violation& violation) {
    std::string when = timeutil::format_iso_utc(violation.event.start_epoch);
    if (violation.kind == ViolationKind::OutsideWindow)
        return violation.event.action_type + " at " + when + ": outside every learned " +
               day_class_name(day_class_of(violation.event.start_epoch)) + " window";
    const Norm& norm = *violation.matched_norm;
    std::string lasted = violation.event.duration_seconds
                             ? "lasted " + format_duration(*violation.event.duration_seconds)
                             : std::string("still open");
    return violation.event.action_type + " at " + when + ": " + lasted + ", usual range " +
           duration_range_text(norm.duration_min_s, norm.duration_max_s);
}

} // namespace provaud::norms

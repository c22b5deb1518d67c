#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prov/document.hpp"

namespace provaud::norms {

/// One occurrence of a recurring action, reconstructed from a trail. An
/// event without a duration is open-ended: its closing action has not been
/// seen yet.
struct ActionEvent {
    std::string action_type;
    std::int64_t start_epoch = 0;
    std::optional<std::int64_t> duration_seconds;

    friend bool operator==(const ActionEvent&, const ActionEvent&) = default;
};

enum class DayClass { Weekday, Weekend };

const char* day_class_name(DayClass c);
DayClass day_class_of(std::int64_t epoch_seconds);

/// A learned routine: this action happens on this class of day inside this
/// time-of-day window (minutes since midnight, inclusive), lasting between
/// duration_min_s and duration_max_s, observed `support` times.
struct Norm {
    std::string action_type;
    DayClass day_class = DayClass::Weekday;
    int window_start_min = 0;
    int window_end_min = 0;
    std::int64_t duration_min_s = 0;
    std::int64_t duration_max_s = 0;
    int support = 0;

    bool contains_minute(int minute_of_day) const {
        return minute_of_day >= window_start_min && minute_of_day <= window_end_min;
    }

    friend bool operator==(const Norm&, const Norm&) = default;
};

struct NormConfig {
    int bin_width_min = 30;
    int min_support = 3;
    int window_pad_min = 30;
    double duration_factor = 2.0;
};

enum class ViolationKind { OutsideWindow, ExcessiveDuration };

struct Violation {
    ActionEvent event;
    ViolationKind kind = ViolationKind::OutsideWindow;
    std::optional<Norm> matched_norm; // present exactly for ExcessiveDuration

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Which marker entities open and close one interval-valued action.
struct IntervalSpec {
    std::string action_type;  // name given to extracted events
    std::string open_marker;  // e.g. "door_opened"
    std::string close_marker; // e.g. "door_closed"
};

/// The garage door intervals the demo skills produce.
IntervalSpec door_interval_spec();

/// Reconstructs intervals from a trail. A marker occurrence is an entity
/// whose id ends in "/action/<marker>", used by an activity that has a start
/// time. Occurrences are paired chronologically: each close matches the
/// earliest still-open open (opens sort before closes at the same instant).
/// Opens left unmatched become open-ended events; closes with nothing to
/// match are dropped. Results are sorted by start time.
std::vector<ActionEvent> extract_events(const prov::ProvDocument& trail,
                                        const IntervalSpec& spec);

/// Histogram mining: events split by (action_type, day class), counted into
/// bin_width_min-wide start-of-day bins; every maximal run of adjacent bins
/// that each hold at least min_support events becomes one norm. Its window
/// is the run padded by window_pad_min on both sides (clamped to the day),
/// its duration range and support come from the events inside the run.
/// Open-ended events are ignored. InvalidArgument for a nonsensical config.
std::vector<Norm> mine_norms(const std::vector<ActionEvent>& events, const NormConfig& config);

/// Checks one event against the learned norms. No norm of the right action
/// type and day class containing the start: OutsideWindow. Otherwise the
/// most permissive containing norm (largest max duration, then largest
/// support, then earliest window) sets the bar: an event lasting more than
/// duration_factor times that bar is ExcessiveDuration. Open-ended events
/// use as_of_epoch to measure how long they have been running; without it
/// only the window is checked.
std::optional<Violation> check_violation(const ActionEvent& event,
                                         const std::vector<Norm>& norms,
                                         const NormConfig& config,
                                         std::optional<std::int64_t> as_of_epoch = {});

/// One JSON object per norm, one norm per line.
std::string encode_norm(const Norm& norm);
std::optional<Norm> decode_norm(const std::string& line);

/// "door_open_interval: weekdays 07:30-08:30, 2-5 min, support 20"
std::string summarize_norm(const Norm& norm);

/// "2 min", "90 s", "1 h" -- whole hours as hours, whole minutes as
/// minutes, everything else in seconds.
std::string format_duration(std::int64_t seconds);

/// Human-readable account of a violation, for notifications.
std::string describe_violation(const Violation& violation);

} // namespace provaud::norms

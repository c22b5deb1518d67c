#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace provaud::timeutil {

// All timestamps in the system are ISO-8601 UTC at second precision:
// "YYYY-MM-DDTHH:MM:SSZ". Conversions below are calendar-exact and never
// touch the wall clock or the local time zone.

/// Parses a strict ISO-8601 UTC timestamp. Returns epoch seconds, or
/// nullopt if the text is not exactly of the supported form.
std::optional<std::int64_t> parse_iso_utc(std::string_view text);

/// Formats epoch seconds as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso_utc(std::int64_t epoch_seconds);

/// Days since 1970-01-01 for a civil date (proleptic Gregorian).
std::int64_t days_from_civil(int year, int month, int day);

/// Inverse of days_from_civil.
void civil_from_days(std::int64_t days, int& year, int& month, int& day);

/// 0 = Sunday ... 6 = Saturday.
int weekday_of(std::int64_t epoch_seconds);

inline bool is_weekend(std::int64_t epoch_seconds) {
    const int wd = weekday_of(epoch_seconds);
    return wd == 0 || wd == 6;
}

/// Seconds elapsed since that day's 00:00:00Z.
int second_of_day(std::int64_t epoch_seconds);

inline int minute_of_day(std::int64_t epoch_seconds) {
    return second_of_day(epoch_seconds) / 60;
}

/// "YYYY-MM-DD" part of the timestamp.
std::string date_part(std::int64_t epoch_seconds);

/// "HH:MM" part of the timestamp (seconds dropped).
std::string hh_mm_part(std::int64_t epoch_seconds);

/// "HH:MM" for a minute-of-day value (0..1440; 1440 renders as 24:00).
std::string hh_mm_of_minutes(int minutes);

} // namespace provaud::timeutil

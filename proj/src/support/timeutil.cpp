#include "support/timeutil.hpp"

#include <array>
#include <cstdio>

#include "support/error.hpp"

namespace provaud::timeutil {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return !s.empty();
}

int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> kDays{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[static_cast<std::size_t>(m - 1)];
}

// Floor division for possibly negative epochs.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

} // namespace

std::int64_t days_from_civil(int y, int m, int d) {
    // Howard Hinnant's algorithm, shifted era arithmetic.
    y -= m <= 2;
    const std::int64_t era = floor_div(y, 400);
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& year, int& month, int& day) {
    z += 719468;
    const std::int64_t era = floor_div(z, 146097);
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    year = static_cast<int>(y + (m <= 2));
    month = static_cast<int>(m);
    day = static_cast<int>(d);
}

std::optional<std::int64_t> parse_iso_utc(std::string_view text) {
    // Exactly "YYYY-MM-DDTHH:MM:SSZ".
    if (text.size() != 20) return std::nullopt;
    if (text[4] != '-' || text[7] != '-' || text[10] != 'T' || text[13] != ':' ||
        text[16] != ':' || text[19] != 'Z') {
        return std::nullopt;
    }
    const auto ys = text.substr(0, 4), ms = text.substr(5, 2), ds = text.substr(8, 2);
    const auto hs = text.substr(11, 2), mins = text.substr(14, 2), ss = text.substr(17, 2);
    if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds) || !all_digits(hs) ||
        !all_digits(mins) || !all_digits(ss)) {
        return std::nullopt;
    }
    const int y = to_int(ys), mo = to_int(ms), d = to_int(ds);
    const int h = to_int(hs), mi = to_int(mins), s = to_int(ss);
    if (mo < 1 || mo > 12 || d < 1 || d > days_in_month(y, mo)) return std::nullopt;
    if (h > 23 || mi > 59 || s > 59) return std::nullopt;
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_iso_utc(std::int64_t epoch_seconds) {
    const std::int64_t days = floor_div(epoch_seconds, 86400);
    const int sod = static_cast<int>(floor_mod(epoch_seconds, 86400));
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[80]; // generous: keeps -Wformat-truncation quiet for any int year
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d, sod / 3600,
                  (sod / 60) % 60, sod % 60);
    return buf;
}

int weekday_of(std::int64_t epoch_seconds) {
    // 1970-01-01 was a Thursday.
    const std::int64_t days = floor_div(epoch_seconds, 86400);
    return static_cast<int>(floor_mod(days + 4, 7));
}

int second_of_day(std::int64_t epoch_seconds) {
    return static_cast<int>(floor_mod(epoch_seconds, 86400));
}

std::string date_part(std::int64_t epoch_seconds) {
    return format_iso_utc(epoch_seconds).substr(0, 10);
}

std::string hh_mm_part(std::int64_t epoch_seconds) {
    return format_iso_utc(epoch_seconds).substr(11, 5);
}

std::string hh_mm_of_minutes(int minutes) {
    if (minutes < 0 || minutes > 1440)
        fail(ErrorCode::OutOfRange, "minute-of-day out of range: " + std::to_string(minutes));
    char buf[6];
    std::snprintf(buf, sizeof buf, "%02d:%02d", minutes / 60, minutes % 60);
    return buf;
}

} // namespace provaud::timeutil

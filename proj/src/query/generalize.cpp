#include "query/generalize.hpp"

#include <cmath>
#include <cstdio>

#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::query {

std::int64_t generalize_time(std::int64_t epoch_seconds) {
    constexpr std::int64_t half_hour = 1800;
    std::int64_t rem = ((epoch_seconds % half_hour) + half_hour) % half_hour;
    return epoch_seconds - rem + (rem > half_hour / 2 ? half_hour : 0);
}

std::string generalize_time_iso(const std::string& iso) {
    auto epoch = timeutil::parse_iso_utc(iso);
    if (!epoch) fail(ErrorCode::InvalidArgument, "not a timestamp: " + iso);
    return timeutil::format_iso_utc(generalize_time(*epoch));
}

std::pair<double, double> generalize_location(double lat, double lon) {
    if (!(lat >= -90.0 && lat <= 90.0))
        fail(ErrorCode::OutOfRange, "latitude out of range: " + std::to_string(lat));
    if (!(lon >= -180.0 && lon <= 180.0))
        fail(ErrorCode::OutOfRange, "longitude out of range: " + std::to_string(lon));
    auto coarse = [](double v) {
        double r = std::round(v * 10.0) / 10.0;
        if (r == 0.0) r = 0.0; // never hand back -0.0
        return r;
    };
    return {coarse(lat), coarse(lon)};
}

std::string format_coordinate(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", value);
    return buf;
}

} // namespace provaud::query

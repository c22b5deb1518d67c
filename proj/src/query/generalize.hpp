#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace provaud::query {

/// Rounds an epoch second to the nearest half-hour boundary. An exact
/// midpoint (15 minutes past a boundary) rounds down.
std::int64_t generalize_time(std::int64_t epoch_seconds);

/// Same rounding for an ISO-8601 UTC timestamp. InvalidArgument when the
/// text is not a timestamp.
std::string generalize_time_iso(const std::string& iso);

/// Coarsens coordinates to one decimal place, roughly 11 km of slack.
/// OutOfRange when |lat| > 90 or |lon| > 180.
std::pair<double, double> generalize_location(double lat, double lon);

/// Renders a coarsened coordinate with the single decimal it carries.
std::string format_coordinate(double value);

} // namespace provaud::query

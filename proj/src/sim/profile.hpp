#pragma once

#include <map>
#include <optional>
#include <string>

namespace provaud::sim {

/// Personal data configured for one user, keyed by data type. Types come
/// from a fixed vocabulary so datapoint entity ids stay well-formed.
struct UserProfile {
    std::string user_id;
    std::map<std::string, std::string> datapoints;

    std::optional<std::string> datapoint(const std::string& type) const {
        auto it = datapoints.find(type);
        if (it == datapoints.end()) return std::nullopt;
        return it->second;
    }
};

/// True for the data types profiles may carry: geo-location, name, email,
/// home-address, phone-number.
bool is_known_datapoint_type(const std::string& type);

} // namespace provaud::sim

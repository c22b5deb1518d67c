#include "sim/profile.hpp"

#include <array>

namespace provaud::sim {

bool is_known_datapoint_type(const std::string& type) {
    static constexpr std::array<const char*, 5> kTypes = {
        "geo-location", "name", "email", "home-address", "phone-number",
    };
    for (const char* t : kTypes)
        if (type == t) return true;
    return false;
}

} // namespace provaud::sim

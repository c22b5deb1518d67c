#pragma once

#include "sim/profile.hpp"
#include "sim/service.hpp"
#include "sim/skill.hpp"

namespace provaud::sim {

// The bundled demo setup: a weather skill that sends the user's geo-location
// to a stubbed forecast service, a garage door skill whose open/close events
// feed routine mining, and a joke skill that touches no personal data.

/// Ids of the demo actors.
inline constexpr const char* kWeatherSkillId = "mycroft:weather-skill";
inline constexpr const char* kGarageSkillId = "mycroft:garage-door-skill";
inline constexpr const char* kJokeSkillId = "mycroft:joke-skill";
inline constexpr const char* kWeatherServiceId = "svc:openweather";

SkillRegistry demo_skills();
ServiceRegistry demo_services();

/// The default "owner" profile used by interactive sessions.
UserProfile demo_owner_profile();

} // namespace provaud::sim

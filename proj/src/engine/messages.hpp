#pragma once

// Every engine-composed, human-visible string lives here so tests can pin
// exact output. Strings owned by deeper layers stay there: skills word their
// own speech, narration owns the answer sentences, norms own summaries.

namespace provaud::engine::msg {

inline constexpr const char* kWhichSkill = "Which skill do you mean?";

// printf-style pieces assembled by the engine
inline constexpr const char* kUnknownSkillPrefix = "I don't know a skill called '";
inline constexpr const char* kUnknownSkillSuffix = "'.";
inline constexpr const char* kUsedPrefix = "You used the ";
inline constexpr const char* kUsedInfix = " skill ";
inline constexpr const char* kUsedOnce = " time.";
inline constexpr const char* kUsedMany = " times.";

inline constexpr const char* kDefaultDisplayNames =
    "# Labels used when narrating audit answers: qualified id = label\n"
    "core:intent-service = Intent Service\n"
    "mycroft:garage-door-skill = Garage Door\n"
    "mycroft:joke-skill = Joke\n"
    "mycroft:weather-skill = Weather\n"
    "svc:openweather = OpenWeather\n";

} // namespace provaud::engine::msg

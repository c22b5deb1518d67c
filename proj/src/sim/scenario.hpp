#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sim/profile.hpp"

namespace provaud::sim {

struct ScenarioRecord {
    std::string time_iso;
    std::int64_t epoch = 0;
    std::string user_id;
    std::string utterance;
    int line = 0; // source line, for error reporting
};

/// A parsed scenario: user profiles from `@datapoint` header lines plus
/// utterance records, already stably sorted by timestamp.
struct ScenarioFile {
    std::map<std::string, UserProfile> profiles;
    std::vector<ScenarioRecord> records;
};

/// Parses scenario text. Lines: `# comment`, blank,
/// `@datapoint <user_id> <type> <value>`, or
/// `<ISO-8601 time> | <user_id> | <utterance>`.
/// Raises ScenarioParseError with the offending line number. A data type
/// owned by two different users is rejected (datapoint entity ids are
/// type-keyed).
ScenarioFile parse_scenario(std::string_view text);

/// Reads and parses a scenario file; StorageError if unreadable.
ScenarioFile load_scenario_file(const std::string& path);

} // namespace provaud::sim

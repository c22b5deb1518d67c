#pragma once

#include <string>

// Deterministic builders for the bundled garage-door scenarios. The checked-in
// .scn files are this code's output; a test compares them byte for byte so
// the files and the expectations about them cannot drift apart.

namespace testgen {

/// Four weeks of routine: weekday openings around 08:00 and 18:00 (2-5 min),
/// early starts near 05:00 and 06:00 on the first three days, and three
/// longer weekend sessions per day. Starts Monday 2024-03-04.
std::string garage_training_scenario();

/// Monday 2024-04-01: a small-hours opening, a morning opening left open for
/// 40 minutes, and one ordinary opening as a control.
std::string garage_anomalies_scenario();

} // namespace testgen

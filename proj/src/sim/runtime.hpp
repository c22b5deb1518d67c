#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sim/bus.hpp"
#include "sim/scenario.hpp"
#include "sim/service.hpp"
#include "sim/skill.hpp"

namespace provaud::sim {

struct TurnResult {
    std::string trace_id;
    std::string time_iso;
    std::string user_id;
    std::string utterance;
    std::string speech;
    std::optional<std::string> skill_id; // empty when no intent matched
};

struct SimulationLog {
    std::vector<BusMessage> messages; // bus traffic of this run, in order
    std::vector<TurnResult> turns;
};

/// The simulated assistant: matches each utterance to a skill, runs the
/// skill against stubbed services, and publishes both the pipeline traffic
/// and the prov.* instrumentation messages on the bus. Time comes entirely
/// from the caller; nothing here reads a wall clock.
class Runtime {
public:
    Runtime(SkillRegistry skills, ServiceRegistry services,
            std::map<std::string, UserProfile> profiles);

    MessageBus& bus() { return bus_; }
    ServiceRegistry& services() { return services_; }
    const std::map<std::string, UserProfile>& profiles() const { return profiles_; }

    /// Runs one turn at the given simulated time. Mints the next trace id,
    /// publishes messages, and returns what was said and answered.
    TurnResult process_utterance(const std::string& time_iso, const std::string& user_id,
                                 const std::string& text);

    /// Processes every record of the scenario in timestamp order.
    SimulationLog run(const ScenarioFile& scenario);

    /// Trace ids are "t0001", "t0002", ...; continuation runs (REPL over an
    /// existing log) bump the start so ids never collide.
    void set_next_trace_number(int n) { trace_counter_ = n - 1; }

private:
    std::string mint_trace_id();

    SkillRegistry skills_;
    ServiceRegistry services_;
    std::map<std::string, UserProfile> profiles_;
    MessageBus bus_;
    int trace_counter_ = 0;
};

} // namespace provaud::sim

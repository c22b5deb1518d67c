#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sim/intent.hpp"
#include "sim/profile.hpp"
#include "sim/service.hpp"

namespace provaud::sim {

/// An external call a skill made while handling a turn, including the
/// profile datapoint that was sent and the stubbed response.
struct ExternalCallRecord {
    std::string service_id;
    std::string endpoint;
    std::map<std::string, std::string> params;
    std::string datapoint_type;
    StubResponse response;
};

/// What a skill did with one matched intent: the spoken reply, optionally a
/// named device/world action, and optionally one external service call.
struct SkillOutcome {
    std::string speech;
    std::optional<std::string> action;
    std::optional<ExternalCallRecord> call;
};

struct Skill {
    std::string skill_id; // e.g. "mycroft:weather-skill"
    std::vector<IntentRule> rules;
    std::function<SkillOutcome(const IntentMatch&, const UserProfile&, ServiceRegistry&)> handler;
};

class SkillRegistry {
public:
    /// Skill ids are unique; a duplicate raises InvalidArgument.
    void register_skill(Skill skill);

    const Skill* find(const std::string& skill_id) const;

    /// Intent rules of all skills, in registration order (the matcher's
    /// tie-break order).
    const std::vector<IntentRule>& all_rules() const { return rules_; }

private:
    std::vector<Skill> skills_;
    std::vector<IntentRule> rules_;
};

} // namespace provaud::sim

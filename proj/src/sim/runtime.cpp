#include "sim/runtime.hpp"

#include <cstdio>

#include "prov/qualified_name.hpp"
#include "support/error.hpp"

namespace provaud::sim {

using prov::Literal;
using prov::QualifiedName;

namespace {

const char* kNoMatchSpeech = "Sorry, I didn't understand.";

QualifiedName trace_qn(const std::string& trace_id, const std::string& role) {
    return QualifiedName{"trace", trace_id + "/" + role};
}

QualifiedName parse_skill_qn(const std::string& skill_id) {
    QualifiedName qn;
    if (!prov::split_qualified_name(skill_id, qn))
        fail(ErrorCode::InvalidArgument, "skill id is not a qualified name: " + skill_id);
    return qn;
}

} // namespace

Runtime::Runtime(SkillRegistry skills, ServiceRegistry services,
                 std::map<std::string, UserProfile> profiles)
    : skills_(std::move(skills)),
      services_(std::move(services)),
      profiles_(std::move(profiles)) {}

std::string Runtime::mint_trace_id() {
    char buf[16];
    std::snprintf(buf, sizeof buf, "t%04d", ++trace_counter_);
    return buf;
}

TurnResult Runtime::process_utterance(const std::string& time_iso, const std::string& user_id,
                                      const std::string& text) {
    TurnResult turn;
    turn.trace_id = mint_trace_id();
    turn.time_iso = time_iso;
    turn.user_id = user_id;
    turn.utterance = text;

    auto publish = [&](std::string topic, std::map<std::string, Literal> payload) {
        bus_.publish(BusMessage{std::move(topic), turn.trace_id, time_iso, std::move(payload)});
    };
    QualifiedName user_qn{"user", user_id};

    publish("utterance", {{"text", Literal{text}}, {"user", Literal{user_qn}}});

    std::optional<IntentMatch> match = match_intent(skills_.all_rules(), text);
    if (!match) {
        turn.speech = kNoMatchSpeech;
        return turn;
    }
    turn.skill_id = match->skill_id;
    QualifiedName skill_qn = parse_skill_qn(match->skill_id);

    publish("prov.intent_matching", {
                                        {"matching", Literal{trace_qn(turn.trace_id, "matching")}},
                                        {"utterance", Literal{trace_qn(turn.trace_id, "utterance")}},
                                        {"intent", Literal{trace_qn(turn.trace_id, "intent")}},
                                        {"user", Literal{user_qn}},
                                    });

    const Skill* skill = skills_.find(match->skill_id);
    if (!skill)
        fail(ErrorCode::InvalidArgument, "matched unregistered skill " + match->skill_id);

    static const UserProfile kEmptyProfile;
    auto profile_it = profiles_.find(user_id);
    const UserProfile& profile =
        profile_it == profiles_.end() ? kEmptyProfile : profile_it->second;

    SkillOutcome outcome = skill->handler(*match, profile, services_);

    if (outcome.call) {
        QualifiedName service_qn;
        if (!prov::split_qualified_name(outcome.call->service_id, service_qn))
            fail(ErrorCode::InvalidArgument,
                 "service id is not a qualified name: " + outcome.call->service_id);
        publish("prov.skill_invocation",
                {
                    {"invocation", Literal{trace_qn(turn.trace_id, "inv")}},
                    {"skill", Literal{skill_qn}},
                    {"service", Literal{service_qn}},
                    {"intent", Literal{trace_qn(turn.trace_id, "intent")}},
                    {"request", Literal{trace_qn(turn.trace_id, "req")}},
                    {"user_datapoint",
                     Literal{QualifiedName{"user", outcome.call->datapoint_type}}},
                    {"response", Literal{trace_qn(turn.trace_id, "resp")}},
                    {"status", Literal{std::int64_t{outcome.call->response.status}}},
                });
    }

    // The handled "response" is the external response when a call happened,
    // otherwise the marker entity for the skill's own action.
    QualifiedName handled = outcome.call
                                ? trace_qn(turn.trace_id, "resp")
                                : trace_qn(turn.trace_id, "action/" + outcome.action.value_or("answered"));
    publish("prov.sa_response", {
                                    {"handling", Literal{trace_qn(turn.trace_id, "handling")}},
                                    {"intent", Literal{trace_qn(turn.trace_id, "intent")}},
                                    {"response", Literal{handled}},
                                    {"voice_response", Literal{trace_qn(turn.trace_id, "voice")}},
                                    {"skill", Literal{skill_qn}},
                                });

    publish("skill.response", {{"text", Literal{outcome.speech}}});
    turn.speech = outcome.speech;
    return turn;
}

SimulationLog Runtime::run(const ScenarioFile& scenario) {
    // Scenario profiles complete (and win over) whatever the runtime was
    // constructed with, so a run is self-contained.
    for (const auto& [uid, profile] : scenario.profiles) {
        UserProfile& dst = profiles_[uid];
        dst.user_id = uid;
        for (const auto& [type, value] : profile.datapoints) dst.datapoints[type] = value;
    }
    SimulationLog log;
    std::size_t history_start = bus_.history().size();
    for (const auto& rec : scenario.records)
        log.turns.push_back(process_utterance(rec.time_iso, rec.user_id, rec.utterance));
    log.messages.assign(bus_.history().begin() + static_cast<std::ptrdiff_t>(history_start),
                        bus_.history().end());
    return log;
}

} // namespace provaud::sim

#include "sim/bus.hpp"

#include <array>

#include "support/error.hpp"

namespace provaud::sim {

namespace {

constexpr std::array<const char*, 6> kTopics = {
    "utterance",          "intent.matched",    "prov.intent_matching",
    "prov.skill_invocation", "prov.sa_response", "skill.response",
};

} // namespace

bool MessageBus::is_valid_topic(const std::string& topic) {
    for (const char* t : kTopics)
        if (topic == t) return true;
    return false;
}

bool MessageBus::matches(const std::string& filter, const std::string& topic) {
    if (filter == "prov.*") return topic.rfind("prov.", 0) == 0;
    return filter == topic;
}

void MessageBus::subscribe(const std::string& filter, Handler handler) {
    if (filter != "prov.*" && !is_valid_topic(filter))
        fail(ErrorCode::UnknownTopic, "cannot subscribe to unknown topic '" + filter + "'");
    subs_.push_back({filter, std::move(handler)});
}

void MessageBus::publish(const BusMessage& msg) {
    if (!is_valid_topic(msg.topic))
        fail(ErrorCode::UnknownTopic, "cannot publish to unknown topic '" + msg.topic + "'");
    history_.push_back(msg);
    for (const auto& sub : subs_)
        if (matches(sub.filter, msg.topic)) sub.handler(msg);
}

} // namespace provaud::sim

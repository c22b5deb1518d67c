#include "sim/demo.hpp"

namespace provaud::sim {

namespace {

SkillOutcome handle_weather(const IntentMatch&, const UserProfile& profile,
                            ServiceRegistry& services) {
    SkillOutcome out;
    auto geo = profile.datapoint("geo-location");
    if (!geo) {
        out.speech = "I don't know your location, so I cannot fetch the forecast.";
        out.action = "no_forecast";
        return out;
    }
    ServiceStub* stub = services.find(kWeatherServiceId);
    StubResponse resp = stub ? stub->call("forecast", {{"geo", *geo}})
                             : StubResponse{503, "service unavailable"};
    out.call = ExternalCallRecord{kWeatherServiceId, "forecast", {{"geo", *geo}},
                                  "geo-location", resp};
    if (resp.status >= 400)
        out.speech = "The weather service is unavailable right now.";
    else
        out.speech = "The forecast for today is " + resp.body + ".";
    return out;
}

SkillOutcome handle_garage(const IntentMatch& match, const UserProfile&, ServiceRegistry&) {
    SkillOutcome out;
    if (match.intent_name == "open_door") {
        out.speech = "Opening the garage door.";
        out.action = "door_opened";
    } else {
        out.speech = "Closing the garage door.";
        out.action = "door_closed";
    }
    return out;
}

SkillOutcome handle_joke(const IntentMatch&, const UserProfile&, ServiceRegistry&) {
    SkillOutcome out;
    out.speech = "I would tell you a UDP joke, but you might not get it.";
    out.action = "joke_told";
    return out;
}

} // namespace

SkillRegistry demo_skills() {
    SkillRegistry reg;

    Skill weather;
    weather.skill_id = kWeatherSkillId;
    weather.rules.push_back(IntentRule{kWeatherSkillId,
                                       "get_forecast",
                                       {"weather"},
                                       {"today", "forecast"},
                                       {{"location", "in"}}});
    weather.handler = handle_weather;
    reg.register_skill(std::move(weather));

    Skill garage;
    garage.skill_id = kGarageSkillId;
    garage.rules.push_back(
        IntentRule{kGarageSkillId, "open_door", {"garage", "open"}, {"door"}, {}});
    garage.rules.push_back(
        IntentRule{kGarageSkillId, "close_door", {"garage", "close"}, {"door"}, {}});
    garage.handler = handle_garage;
    reg.register_skill(std::move(garage));

    Skill joke;
    joke.skill_id = kJokeSkillId;
    joke.rules.push_back(IntentRule{kJokeSkillId, "tell_joke", {"joke"}, {"tell"}, {}});
    joke.handler = handle_joke;
    reg.register_skill(std::move(joke));

    return reg;
}

ServiceRegistry demo_services() {
    ServiceRegistry reg;
    ServiceStub& weather = reg.add(kWeatherServiceId);
    weather.set_default("forecast", {200, "sunny with a high of 21 degrees"});
    return reg;
}

UserProfile demo_owner_profile() {
    UserProfile owner;
    owner.user_id = "owner";
    owner.datapoints = {
        {"geo-location", "51.5128,-0.1168"},
        {"name", "Alex Doe"},
        {"email", "owner@example.org"},
    };
    return owner;
}

} // namespace provaud::sim

#include "sim/service.hpp"

#include "support/error.hpp"

namespace provaud::sim {

std::string ServiceStub::rule_key(const std::string& endpoint,
                                  const std::map<std::string, std::string>& params) {
    std::string key = endpoint;
    for (const auto& [k, v] : params) key += "\x1f" + k + "=" + v;
    return key;
}

void ServiceStub::add_rule(const std::string& endpoint,
                           const std::map<std::string, std::string>& params,
                           StubResponse response) {
    exact_rules_[rule_key(endpoint, params)] = std::move(response);
}

void ServiceStub::set_default(const std::string& endpoint, StubResponse response) {
    defaults_[endpoint] = std::move(response);
}

StubResponse ServiceStub::call(const std::string& endpoint,
                               const std::map<std::string, std::string>& params) {
    ++calls_;
    if (failing_) return {503, "service unavailable"};
    auto exact = exact_rules_.find(rule_key(endpoint, params));
    if (exact != exact_rules_.end()) return exact->second;
    auto dflt = defaults_.find(endpoint);
    if (dflt != defaults_.end()) return dflt->second;
    return {404, "no rule for endpoint " + endpoint};
}

ServiceStub& ServiceRegistry::add(const std::string& service_id) {
    auto [it, inserted] = stubs_.emplace(service_id, ServiceStub(service_id));
    if (!inserted)
        fail(ErrorCode::InvalidArgument, "service already registered: " + service_id);
    return it->second;
}

ServiceStub* ServiceRegistry::find(const std::string& service_id) {
    auto it = stubs_.find(service_id);
    return it == stubs_.end() ? nullptr : &it->second;
}

std::size_t ServiceRegistry::total_calls() const {
    std::size_t n = 0;
    for (const auto& [id, stub] : stubs_) n += stub.calls_made();
    return n;
}

} // namespace provaud::sim

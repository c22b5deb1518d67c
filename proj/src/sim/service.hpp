#pragma once

#include <map>
#include <string>

namespace provaud::sim {

struct StubResponse {
    int status = 200;
    std::string body;

    friend bool operator==(const StubResponse&, const StubResponse&) = default;
};

/// Canned stand-in for a third-party service. Lookup order: exact
/// (endpoint, params) rule, then the endpoint's default, then 404. A stub
/// can be switched into a failing mode where every call returns 503.
/// Lookup is total: every call yields a response and bumps the call count.
class ServiceStub {
public:
    ServiceStub() = default;
    explicit ServiceStub(std::string service_id) : service_id_(std::move(service_id)) {}

    const std::string& service_id() const { return service_id_; }

    void add_rule(const std::string& endpoint, const std::map<std::string, std::string>& params,
                  StubResponse response);
    void set_default(const std::string& endpoint, StubResponse response);
    void set_failing(bool failing) { failing_ = failing; }

    StubResponse call(const std::string& endpoint,
                      const std::map<std::string, std::string>& params);

    std::size_t calls_made() const { return calls_; }

private:
    static std::string rule_key(const std::string& endpoint,
                                const std::map<std::string, std::string>& params);

    std::string service_id_;
    std::map<std::string, StubResponse> exact_rules_;   // keyed by rule_key
    std::map<std::string, StubResponse> defaults_;      // keyed by endpoint
    bool failing_ = false;
    std::size_t calls_ = 0;
};

/// The services a simulation can reach, keyed by service id
/// (e.g. "svc:openweather").
class ServiceRegistry {
public:
    ServiceStub& add(const std::string& service_id);
    ServiceStub* find(const std::string& service_id);

    /// Sum of calls made across all stubs.
    std::size_t total_calls() const;

private:
    std::map<std::string, ServiceStub> stubs_;
};

} // namespace provaud::sim

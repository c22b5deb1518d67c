#include "audit/ingest.hpp"

#include "support/error.hpp"

namespace provaud::audit {

using prov::Literal;
using prov::QualifiedName;
using sim::BusMessage;
using tmpl::BindingRow;

namespace {

std::string template_for_topic(const std::string& topic) {
    constexpr const char* prefix = "prov.";
    if (topic.rfind(prefix, 0) != 0)
        fail(ErrorCode::SchemaViolation, "not an instrumentation topic: " + topic);
    return topic.substr(5);
}

} // namespace

Auditor::Auditor(BindingLog& log, const tmpl::TemplateCatalogue& catalogue,
                 const std::map<std::string, sim::UserProfile>& profiles)
    : log_(log), catalogue_(catalogue), profiles_(profiles) {}

void Auditor::attach(sim::MessageBus& bus) {
    bus.subscribe("prov.*", [this](const BusMessage& msg) { handle(msg); });
}

BindingRow Auditor::ingest(const BusMessage& msg) const {
    std::string template_id = template_for_topic(msg.topic);
    const tmpl::Template* tmpl = catalogue_.find(template_id);
    if (!tmpl)
        fail(ErrorCode::SchemaViolation,
             "topic " + msg.topic + " maps to unknown template " + template_id);
    BindingRow row;
    row.template_id = template_id;
    row.trace_id = msg.trace_id;
    row.timestamp = msg.sim_time;
    for (const auto& name : tmpl->variables) {
        auto it = msg.payload.find(name);
        if (it == msg.payload.end())
            fail(ErrorCode::SchemaViolation,
                 msg.topic + " payload is missing variable '" + name + "'");
        row.values.emplace(name, it->second);
    }
    return row;
}

void Auditor::append_row(BindingRow row) {
    row.seq = next_seq_++;
    log_.append(row);
    ++rows_written_;
}

void Auditor::synthesize_datapoint(const BusMessage& msg) {
    auto it = msg.payload.find("user_datapoint");
    if (it == msg.payload.end()) return; // caught again by ingest's coverage check
    const auto* qn = std::get_if<QualifiedName>(&it->second);
    if (!qn) return;
    const std::string& type = qn->local;
    // Datapoint ids are type-keyed, so exactly one profile can own the type.
    for (const auto& [uid, profile] : profiles_) {
        auto value = profile.datapoint(type);
        if (!value) continue;
        if (!datapoints_seen_.insert(uid + "/" + type).second) return;
        BindingRow row;
        row.template_id = "user_datapoint";
        row.trace_id = msg.trace_id;
        row.timestamp = msg.sim_time;
        row.values = {
            {"user", Literal{QualifiedName{"user", uid}}},
            {"user_datapoint", Literal{*qn}},
            {"data_type", Literal{type}},
            {"data_value", Literal{*value}},
        };
        append_row(std::move(row));
        return;
    }
    log_.append_dead("datapoint type '" + type + "' is not in any profile", msg);
    ++rows_rejected_;
}

void Auditor::synthesize_api_error(const BusMessage& msg) {
    auto status_it = msg.payload.find("status");
    if (status_it == msg.payload.end()) return;
    const auto* status = std::get_if<std::int64_t>(&status_it->second);
    if (!status || *status < 400) return;
    auto resp_it = msg.payload.find("response");
    if (resp_it == msg.payload.end()) return;
    BindingRow row;
    row.template_id = "api_error";
    row.trace_id = msg.trace_id;
    row.timestamp = msg.sim_time;
    row.values = {
        {"response", resp_it->second},
        {"status", Literal{*status}},
    };
    append_row(std::move(row));
}

void Auditor::handle(const BusMessage& msg) {
    BindingRow row;
    try {
        row = ingest(msg);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SchemaViolation) throw;
        log_.append_dead(e.what(), msg);
        ++rows_rejected_;
        return;
    }
    // The datapoint description precedes the row that references it, so the
    // log always reads causally.
    if (msg.topic == "prov.skill_invocation") synthesize_datapoint(msg);
    append_row(std::move(row));
    if (msg.topic == "prov.skill_invocation") synthesize_api_error(msg);
}

void Auditor::seed_from(const std::vector<BindingRow>& existing) {
    for (const auto& row : existing) {
        next_seq_ = std::max(next_seq_, row.seq + 1);
        if (row.template_id != "user_datapoint") continue;
        auto user_it = row.values.find("user");
        auto dp_it = row.values.find("user_datapoint");
        if (user_it == row.values.end() || dp_it == row.values.end()) continue;
        const auto* user = std::get_if<QualifiedName>(&user_it->second);
        const auto* dp = std::get_if<QualifiedName>(&dp_it->second);
        if (user && dp) datapoints_seen_.insert(user->local + "/" + dp->local);
    }
}

} // namespace provaud::audit

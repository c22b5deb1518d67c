#include "query/dataflow.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::query {

using prov::Attribute;
using prov::NodeKind;
using prov::ProvDocument;
using prov::ProvNode;
using prov::ProvRelation;
using prov::QualifiedName;
using prov::RelationKind;

namespace {

bool has_prov_type(const ProvNode& node, const char* prefix, const char* local) {
    for (const Attribute& attr : node.attrs) {
        if (attr.key != QualifiedName{"prov", "type"}) continue;
        const auto* qn = std::get_if<QualifiedName>(&attr.value);
        if (qn && qn->prefix == prefix && qn->local == local) return true;
    }
    return false;
}

std::string data_type_of(const ProvNode& node) {
    for (const Attribute& attr : node.attrs) {
        if (attr.key != QualifiedName{"sais", "data_type"}) continue;
        if (const auto* s = std::get_if<std::string>(&attr.value)) return *s;
    }
    return node.id.local;
}

} // namespace

bool dataflow_row_less(const DataFlowRow& a, const DataFlowRow& b) {
    return std::tie(a.time_iso, a.service_id, a.data_type, a.skill_id, a.datapoint_id) <
           std::tie(b.time_iso, b.service_id, b.data_type, b.skill_id, b.datapoint_id);
}

std::vector<DataFlowRow> data_recipients(const ProvDocument& trail) {
    // Adjacency indexes keyed by the activity (or entity) they hang off.
    std::map<QualifiedName, std::vector<QualifiedName>> generated_by;  // activity -> entities
    std::map<QualifiedName, std::vector<QualifiedName>> associated;    // activity -> agents
    std::map<QualifiedName, std::vector<QualifiedName>> attributed;    // entity -> agents
    for (const ProvRelation& rel : trail.relations()) {
        switch (rel.kind) {
            case RelationKind::WasGeneratedBy: generated_by[rel.target].push_back(rel.source); break;
            case RelationKind::WasAssociatedWith: associated[rel.source].push_back(rel.target); break;
            case RelationKind::WasAttributedTo: attributed[rel.source].push_back(rel.target); break;
            default: break;
        }
    }

    std::vector<DataFlowRow> rows;
    for (const ProvRelation& used : trail.relations()) {
        if (used.kind != RelationKind::Used) continue;
        const ProvNode* datapoint = trail.find_node(used.target);
        if (!datapoint || !has_prov_type(*datapoint, "sais", "UserData")) continue;
        const QualifiedName& activity_id = used.source;

        auto outputs = generated_by.find(activity_id);
        if (outputs == generated_by.end()) continue;
        bool produced_response = false;
        for (const QualifiedName& out : outputs->second) {
            const ProvNode* node = trail.find_node(out);
            if (node && has_prov_type(*node, "sais", "APIResponse")) {
                produced_response = true;
                break;
            }
        }
        if (!produced_response) continue;

        auto skills = associated.find(activity_id);
        if (skills == associated.end()) continue;

        std::string time;
        const ProvNode* activity = trail.find_node(activity_id);
        if (activity && activity->start_time) time = activity->start_time->iso;
        else if (used.time) time = used.time->iso;

        for (const QualifiedName& out : outputs->second) {
            auto services = attributed.find(out);
            if (services == attributed.end()) continue;
            for (const QualifiedName& service : services->second)
                for (const QualifiedName& skill : skills->second)
                    rows.push_back({datapoint->id, data_type_of(*datapoint), service, skill, time});
        }
    }

    std::sort(rows.begin(), rows.end(), dataflow_row_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

int usage_count(const ProvDocument& trail, const QualifiedName& skill_id,
                const std::optional<std::string>& from_iso,
                const std::optional<std::string>& to_iso) {
    std::optional<std::int64_t> lo, hi;
    if (from_iso) {
        lo = timeutil::parse_iso_utc(*from_iso);
        if (!lo) fail(ErrorCode::InvalidArgument, "bad 'from' bound: " + *from_iso);
    }
    if (to_iso) {
        hi = timeutil::parse_iso_utc(*to_iso);
        if (!hi) fail(ErrorCode::InvalidArgument, "bad 'to' bound: " + *to_iso);
    }
    if (lo && hi && *lo > *hi) fail(ErrorCode::InvalidArgument, "empty time range");

    std::map<QualifiedName, std::vector<QualifiedName>> generated_by;
    std::map<QualifiedName, std::vector<QualifiedName>> associated;
    for (const ProvRelation& rel : trail.relations()) {
        if (rel.kind == RelationKind::WasGeneratedBy) generated_by[rel.target].push_back(rel.source);
        if (rel.kind == RelationKind::WasAssociatedWith) associated[rel.source].push_back(rel.target);
    }

    int count = 0;
    for (const auto& [id, node] : trail.nodes()) {
        if (node.kind != NodeKind::Activity) continue;
        auto agents = associated.find(id);
        if (agents == associated.end()) continue;
        if (std::find(agents->second.begin(), agents->second.end(), skill_id) ==
            agents->second.end())
            continue;

        auto outputs = generated_by.find(id);
        if (outputs == generated_by.end()) continue;
        bool produced_response = false;
        for (const QualifiedName& out : outputs->second) {
            const ProvNode* produced = trail.find_node(out);
            if (produced && has_prov_type(*produced, "sais", "APIResponse")) {
                produced_response = true;
                break;
            }
        }
        if (produced_response) continue;

        if (lo || hi) {
            if (!node.start_time) continue;
            auto start = timeutil::parse_iso_utc(node.start_time->iso);
            if (!start) continue;
            if (lo && *start < *lo) continue;
            if (hi && *start > *hi) continue;
        }
        ++count;
    }
    return count;
}

} // namespace provaud::query

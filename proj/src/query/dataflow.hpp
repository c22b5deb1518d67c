#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prov/document.hpp"

namespace provaud::query {

/// One observed transfer of a user datapoint to an external service.
struct DataFlowRow {
    prov::QualifiedName datapoint_id;
    std::string data_type;
    prov::QualifiedName service_id;
    prov::QualifiedName skill_id;
    std::string time_iso; // start of the sending activity; empty when unknown

    friend bool operator==(const DataFlowRow& a, const DataFlowRow& b) {
        return a.datapoint_id == b.datapoint_id && a.data_type == b.data_type &&
               a.service_id == b.service_id && a.skill_id == b.skill_id &&
               a.time_iso == b.time_iso;
    }
};

bool dataflow_row_less(const DataFlowRow& a, const DataFlowRow& b);

/// Finds every datapoint that reached an external service. The shape looked
/// for: an activity that used an entity typed sais:UserData and generated an
/// entity typed sais:APIResponse, is associated with a skill agent, and
/// generated some entity attributed to a service agent. One row per
/// (datapoint, service, skill) found that way, de-duplicated, sorted by time
/// then service. The row's data_type comes from the datapoint's
/// sais:data_type attribute, falling back to the local part of its id; its
/// time is the activity's start, falling back to the usage time.
std::vector<DataFlowRow> data_recipients(const prov::ProvDocument& trail);

/// Counts the turns a skill answered: activities associated with the skill
/// that generated at least one entity but no sais:APIResponse entity (the
/// answer-handling step, not the external call). A bounded range admits only
/// activities whose start lies inside it, both ends inclusive; activities
/// without a start time count only when the range is fully open.
/// InvalidArgument for a malformed or reversed range.
int usage_count(const prov::ProvDocument& trail, const prov::QualifiedName& skill_id,
                const std::optional<std::string>& from_iso,
                const std::optional<std::string>& to_iso);

} // namespace provaud::query

#include "audit/trail.hpp"

#include <set>

#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::audit {

using prov::QualifiedName;
using tmpl::BindingRow;

namespace {

std::int64_t parse_bound(const std::string& iso, const char* which) {
    auto t = timeutil::parse_iso_utc(iso);
    if (!t) fail(ErrorCode::InvalidArgument, std::string(which) + " bound is not a timestamp: " + iso);
    return *t;
}

bool mentions(const BindingRow& row, const QualifiedName& qn) {
    for (const auto& [name, value] : row.values)
        if (const auto* v = std::get_if<QualifiedName>(&value); v && *v == qn) return true;
    return false;
}

} // namespace

std::vector<BindingRow> filter_rows(const std::vector<BindingRow>& rows,
                                    const TrailFilter& filter) {
    std::optional<std::int64_t> from, to;
    if (filter.from_iso) from = parse_bound(*filter.from_iso, "from");
    if (filter.to_iso) to = parse_bound(*filter.to_iso, "to");
    if (from && to && *from > *to)
        fail(ErrorCode::InvalidArgument,
             "empty time range: " + *filter.from_iso + " > " + *filter.to_iso);

    std::optional<QualifiedName> user_qn, skill_qn;
    if (filter.user_id) user_qn = QualifiedName{"user", *filter.user_id};
    if (filter.skill_id) {
        QualifiedName qn;
        if (!prov::split_qualified_name(*filter.skill_id, qn))
            fail(ErrorCode::InvalidArgument,
                 "skill filter is not a qualified name: " + *filter.skill_id);
        skill_qn = qn;
    }

    // Pass 1: find the traces the user/skill filters select.
    std::set<std::string> marked;
    if (user_qn || skill_qn) {
        for (const auto& row : rows) {
            if (user_qn && mentions(row, *user_qn)) marked.insert(row.trace_id);
            if (skill_qn && mentions(row, *skill_qn)) marked.insert(row.trace_id);
        }
    }

    std::vector<BindingRow> out;
    for (const auto& row : rows) {
        if (filter.trace_id && row.trace_id != *filter.trace_id) continue;
        if ((user_qn || skill_qn) && !marked.count(row.trace_id)) continue;
        if (from || to) {
            auto t = timeutil::parse_iso_utc(row.timestamp);
            if (!t) continue; // timeless rows never satisfy a bounded range
            if (from && *t < *from) continue;
            if (to && *t > *to) continue;
        }
        out.push_back(row);
    }
    return out;
}

prov::ProvDocument build_audit_trail(const tmpl::TemplateCatalogue& catalogue,
                                     const std::vector<BindingRow>& rows,
                                     const TrailFilter& filter) {
    prov::ProvDocument doc = tmpl::expand_all(catalogue, filter_rows(rows, filter));
    prov::validate(doc);
    return doc;
}

} // namespace provaud::audit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prov/document.hpp"
#include "tmpl/template.hpp"

namespace provaud::audit {

/// Selects binding rows for trail building. Bounds are inclusive and apply
/// per row; user and skill filters mark whole traces (a trace is kept when
/// any of its rows mentions the user or skill), so a selected turn keeps all
/// of its context.
struct TrailFilter {
    std::optional<std::string> from_iso;
    std::optional<std::string> to_iso;
    std::optional<std::string> user_id;  // bare id, e.g. "owner"
    std::optional<std::string> skill_id; // qualified, e.g. "mycroft:weather-skill"
    std::optional<std::string> trace_id;

    bool unrestricted() const {
        return !from_iso && !to_iso && !user_id && !skill_id && !trace_id;
    }
};

/// Validates bounds (from <= to, both well-formed) and returns the matching
/// rows in input order.
std::vector<tmpl::BindingRow> filter_rows(const std::vector<tmpl::BindingRow>& rows,
                                          const TrailFilter& filter);

/// Expands the filtered rows and merges them into one validated document.
prov::ProvDocument build_audit_trail(const tmpl::TemplateCatalogue& catalogue,
                                     const std::vector<tmpl::BindingRow>& rows,
                                     const TrailFilter& filter);

} // namespace provaud::audit

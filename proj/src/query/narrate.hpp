#pragma once

#include <map>
#include <string>
#include <vector>

#include "prov/qualified_name.hpp"
#include "query/dataflow.hpp"

namespace provaud::query {

/// Human labels for agent ids. Unlisted ids fall back to the local part of
/// the qualified name.
struct DisplayNames {
    std::map<std::string, std::string> labels; // "svc:openweather" -> "OpenWeather"

    std::string display(const prov::QualifiedName& id) const;
};

/// Parses "qname = label" lines; '#' starts a comment, blank lines are
/// skipped. A line without '=' or with an empty side raises SyntaxError.
DisplayNames parse_display_names(const std::string& text);

/// One planned sentence: which data type went where, through which skills,
/// and when it first happened. Services and skills hold display names in
/// first-appearance order.
struct SentenceFrame {
    std::string data_type;
    std::vector<std::string> services;
    std::vector<std::string> skills;
    std::string date;  // "2024-03-12"; empty when the flow carries no time
    std::string clock; // "08:00", already generalized when asked for

    friend bool operator==(const SentenceFrame&, const SentenceFrame&) = default;
};

struct NarrativePlan {
    std::vector<SentenceFrame> frames;

    friend bool operator==(const NarrativePlan&, const NarrativePlan&) = default;
};

/// Groups rows by data type (first-appearance order; rows are expected in
/// data_recipients order, so the group's moment is its earliest). When
/// generalize is set, displayed times snap to the nearest half hour.
NarrativePlan plan_recipients(const std::vector<DataFlowRow>& rows, const DisplayNames& names,
                              bool generalize);

/// Renders the plan. Empty plan: "No personal data was sent to any external
/// service." Otherwise one sentence per frame, joined by single spaces:
/// "Your <type> was sent to <services> by the <skills> skill(s) on <date>
/// at <clock>."
std::string realize(const NarrativePlan& plan);

std::string narrate_recipients(const std::vector<DataFlowRow>& rows, const DisplayNames& names,
                               bool generalize);

/// "a" / "a and b" / "a, b and c".
std::string join_names(const std::vector<std::string>& items);

} // namespace provaud::query

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace provaud::sim {

/// Keyword-based intent rule. An utterance matches when every required
/// keyword appears among its normalized tokens. Among matching rules the
/// winner has the most required keywords, then the most matched optional
/// keywords, then the earliest registration.
struct IntentRule {
    std::string skill_id;    // e.g. "mycroft:weather-skill"
    std::string intent_name; // e.g. "get_forecast"
    std::set<std::string> required_keywords;
    std::set<std::string> optional_keywords;
    // slot name -> keyword; the slot value is the tokens following the
    // keyword's first occurrence.
    std::vector<std::pair<std::string, std::string>> slot_extractors;
};

struct IntentMatch {
    std::string skill_id;
    std::string intent_name;
    std::map<std::string, std::string> slots;
};

/// Lowercases, maps punctuation to spaces, and splits on whitespace.
std::vector<std::string> normalize_utterance(const std::string& text);

/// Returns the winning rule's match, or nullopt when no rule has all its
/// required keywords in the utterance.
std::optional<IntentMatch> match_intent(const std::vector<IntentRule>& rules,
                                        const std::string& utterance);

} // namespace provaud::sim

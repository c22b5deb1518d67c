#include "sim/intent.hpp"

#include <algorithm>
#include <cctype>

namespace provaud::sim {

std::vector<std::string> normalize_utterance(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text) {
        unsigned char u = static_cast<unsigned char>(c);
        if (std::isalnum(u))
            cleaned += static_cast<char>(std::tolower(u));
        else
            cleaned += ' ';
    }
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < cleaned.size()) {
        while (i < cleaned.size() && cleaned[i] == ' ') ++i;
        std::size_t start = i;
        while (i < cleaned.size() && cleaned[i] != ' ') ++i;
        if (i > start) tokens.push_back(cleaned.substr(start, i - start));
    }
    return tokens;
}

std::optional<IntentMatch> match_intent(const std::vector<IntentRule>& rules,
                                        const std::string& utterance) {
    std::vector<std::string> tokens = normalize_utterance(utterance);
    auto contains = [&](const std::string& word) {
        return std::find(tokens.begin(), tokens.end(), word) != tokens.end();
    };

    const IntentRule* best = nullptr;
    std::size_t best_required = 0, best_optional = 0;
    for (const auto& rule : rules) {
        bool all_required = true;
        for (const auto& kw : rule.required_keywords)
            if (!contains(kw)) {
                all_required = false;
                break;
            }
        if (!all_required || rule.required_keywords.empty()) continue;
        std::size_t n_optional = 0;
        for (const auto& kw : rule.optional_keywords) n_optional += contains(kw);
        std::size_t n_required = rule.required_keywords.size();
        // Earlier registration wins ties, so strict improvement is required.
        if (!best || n_required > best_required ||
            (n_required == best_required && n_optional > best_optional)) {
            best = &rule;
            best_required = n_required;
            best_optional = n_optional;
        }
    }
    if (!best) return std::nullopt;

    IntentMatch match;
    match.skill_id = best->skill_id;
    match.intent_name = best->intent_name;
    for (const auto& [slot, keyword] : best->slot_extractors) {
        auto it = std::find(tokens.begin(), tokens.end(), keyword);
        if (it == tokens.end() || ++it == tokens.end()) continue;
        std::string value;
        for (; it != tokens.end(); ++it) {
            if (!value.empty()) value += ' ';
            value += *it;
        }
        match.slots[slot] = std::move(value);
    }
    return match;
}

} // namespace provaud::sim

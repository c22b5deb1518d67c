#include "sim/skill.hpp"

#include "support/error.hpp"

namespace provaud::sim {

void SkillRegistry::register_skill(Skill skill) {
    for (const auto& existing : skills_)
        if (existing.skill_id == skill.skill_id)
            fail(ErrorCode::InvalidArgument, "skill already registered: " + skill.skill_id);
    for (const auto& rule : skill.rules) {
        if (rule.required_keywords.empty())
            fail(ErrorCode::InvalidArgument,
                 "intent rule " + skill.skill_id + "/" + rule.intent_name +
                     " has no required keywords");
        for (const auto& kw : rule.required_keywords)
            if (rule.optional_keywords.count(kw))
                fail(ErrorCode::InvalidArgument,
                     "keyword '" + kw + "' is both required and optional in " +
                         skill.skill_id + "/" + rule.intent_name);
        rules_.push_back(rule);
    }
    skills_.push_back(std::move(skill));
}

const Skill* SkillRegistry::find(const std::string& skill_id) const {
    for (const auto& skill : skills_)
        if (skill.skill_id == skill_id) return &skill;
    return nullptr;
}

} // namespace provaud::sim

#include "tmpl/catalogue.hpp"

#include "support/error.hpp"

namespace provaud::tmpl {

namespace {

// Captures the intent inferred from an utterance: the matching activity
// consumes the utterance entity and produces the intent entity on behalf of
// the built-in intent service.
const std::string kIntentMatching = R"(document
  prefix core <http://provaud.example/ns/core#>
  prefix var <http://openprovenance.org/var#>

  agent(core:intent-service)
  entity(var:intent)
  activity(var:matching)
  agent(var:user)
  entity(var:utterance)
  used(var:matching, var:utterance, -)
  wasGeneratedBy(var:intent, var:matching, -)
  wasAssociatedWith(var:matching, core:intent-service)
  wasAttributedTo(var:utterance, var:user)
endDocument
)";

// Captures an external call made by a skill: which intent triggered it,
// which user datapoint was sent, the request that carried it, the service
// that answered, and the response derived from the request.
const std::string kSkillInvocation = R"(document
  prefix sais <http://provaud.example/ns/sais#>
  prefix var <http://openprovenance.org/var#>

  entity(var:intent)
  activity(var:invocation)
  entity(var:request)
  entity(var:response, [prov:type='sais:APIResponse'])
  agent(var:service)
  agent(var:skill)
  entity(var:user_datapoint, [prov:type='sais:UserData'])
  used(var:invocation, var:intent, -)
  used(var:invocation, var:user_datapoint, -)
  wasGeneratedBy(var:request, var:invocation, -)
  wasGeneratedBy(var:response, var:invocation, -)
  wasAssociatedWith(var:invocation, var:skill)
  wasAttributedTo(var:request, var:service)
  wasDerivedFrom(var:response, var:request)
endDocument
)";

// Captures how a matched turn was answered: the handling activity consumes
// the intent and the skill's action or external response, and produces the
// voice response that was played back.
const std::string kSaResponse = R"(document
  prefix var <http://openprovenance.org/var#>

  activity(var:handling)
  entity(var:intent)
  entity(var:response)
  agent(var:skill)
  entity(var:voice_response)
  used(var:handling, var:intent, -)
  used(var:handling, var:response, -)
  wasGeneratedBy(var:voice_response, var:handling, -)
  wasAssociatedWith(var:handling, var:skill)
endDocument
)";

// Describes one piece of personal data (type and value) and who it belongs
// to. Emitted once per datapoint, the first time a skill touches it.
const std::string kUserDatapoint = R"(document
  prefix sais <http://provaud.example/ns/sais#>
  prefix var <http://openprovenance.org/var#>

  agent(var:user)
  entity(var:user_datapoint, [sais:data_type='var:data_type', sais:data_value='var:data_value'])
  wasAttributedTo(var:user_datapoint, var:user)
endDocument
)";

// Extra annotation attached to a response entity when the external call
// failed (HTTP status >= 400). Merges onto the skill_invocation expansion.
const std::string kApiError = R"(document
  prefix sais <http://provaud.example/ns/sais#>
  prefix var <http://openprovenance.org/var#>

  entity(var:response, [prov:type='sais:Error', sais:status='var:status'])
endDocument
)";

} // namespace

const std::vector<std::string>& core_template_ids() {
    static const std::vector<std::string> ids = {"intent_matching", "skill_invocation",
                                                 "sa_response", "user_datapoint"};
    return ids;
}

const std::string& builtin_template_text(const std::string& id) {
    if (id == "intent_matching") return kIntentMatching;
    if (id == "skill_invocation") return kSkillInvocation;
    if (id == "sa_response") return kSaResponse;
    if (id == "user_datapoint") return kUserDatapoint;
    if (id == "api_error") return kApiError;
    fail(ErrorCode::InvalidArgument, "no built-in template named '" + id + "'");
}

TemplateCatalogue standard_catalogue() {
    TemplateCatalogue cat;
    for (const auto& id : core_template_ids())
        cat.register_template(load_template(id, builtin_template_text(id)));
    cat.register_template(load_template("api_error", builtin_template_text("api_error")));
    return cat;
}

} // namespace provaud::tmpl

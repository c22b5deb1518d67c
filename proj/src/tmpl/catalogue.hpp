#pragma once

#include <string>
#include <vector>

#include "tmpl/template.hpp"

namespace provaud::tmpl {

/// Ids of the four core pipeline templates (intent_matching,
/// skill_invocation, sa_response, user_datapoint).
const std::vector<std::string>& core_template_ids();

/// Canonical text of a built-in template (core ones plus the api_error
/// extra). Raises InvalidArgument for an unknown id. The texts are fixed
/// points of the serializer, and the files shipped under templates/ must be
/// byte-identical to them.
const std::string& builtin_template_text(const std::string& id);

/// Catalogue holding the four core templates plus the api_error extra,
/// which describes failed external calls (status >= 400).
TemplateCatalogue standard_catalogue();

} // namespace provaud::tmpl

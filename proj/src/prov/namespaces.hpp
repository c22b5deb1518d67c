#pragma once

#include <string>

namespace provaud::prov {

/// URI for a well-known prefix (prov, xsd, var, sais, core, mycroft, svc,
/// trace, user, ex). Unknown prefixes get a stable fallback of the form
/// "urn:provaud:ns:<prefix>" so generated documents always declare every
/// prefix they mention.
std::string namespace_uri(const std::string& prefix);

} // namespace provaud::prov

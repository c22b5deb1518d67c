#pragma once

#include <string>
#include <string_view>

#include "prov/document.hpp"

namespace provaud::prov {

/// Renders the document in canonical PROV-N text form: prefixes sorted by
/// name, nodes sorted by id, relations in canonical order, attributes sorted
/// within each statement. Byte-identical for equal documents.
std::string serialize_provn(const ProvDocument& doc);

/// Parses the PROV-N subset emitted by serialize_provn (plus flexible
/// whitespace). Raises SyntaxError with line/column on malformed input,
/// UnknownPrefix for a qualified name whose prefix is neither declared nor
/// one of the implicit `prov`/`xsd`, and DanglingEndpoint/KindMismatch when
/// a relation references an undeclared or wrongly typed node.
ProvDocument parse_provn(std::string_view text);

/// Escapes a string for a double-quoted PROV-N literal.
std::string escape_string(std::string_view raw);

/// Renders one attribute value (string/int/decimal/timestamp/qname) in
/// PROV-N attribute-position syntax.
std::string literal_to_provn(const Literal& v);

} // namespace provaud::prov

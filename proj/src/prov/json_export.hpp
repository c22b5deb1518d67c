#pragma once

#include <string>

#include "prov/document.hpp"

namespace provaud::prov {

/// Diagnostic JSON rendering of a document: one object per statement under
/// "statements", plus the namespace table. Deterministic key and statement
/// order. Not a PROV-JSON implementation; intended for debugging and the
/// report command only.
std::string document_to_json(const ProvDocument& doc, int indent = 2);

} // namespace provaud::prov

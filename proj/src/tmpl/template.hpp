#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "prov/document.hpp"
#include "tmpl/binding.hpp"

namespace provaud::tmpl {

/// A provenance template: a document whose `var:`-prefixed qualified names
/// are placeholders. Variables in identifier position (node ids, relation
/// endpoints) may only be bound to qualified names; variables in attribute
/// value position accept any literal.
struct Template {
    std::string id;
    prov::ProvDocument body;
    std::vector<std::string> variables;      // sorted, unique
    std::set<std::string> identifier_vars;   // subset of variables
};

/// Parses template text and extracts its variables. Raises SyntaxError for
/// malformed text and MissingVarNamespace when `var:` names are used without
/// declaring the var prefix.
Template load_template(const std::string& id, std::string_view provn_text);

/// Instantiates the template with one row. Every template variable must be
/// bound (UnboundVariable); identifier-position variables must be bound to
/// qualified names (TypeMismatch); bindings that would collapse two distinct
/// body ids into one are rejected (IdConflict). Activities with no explicit
/// times in the body are stamped with the row timestamp when it is set.
/// The output carries no `var:` names and declares every prefix it uses.
prov::ProvDocument expand(const Template& tmpl, const BindingRow& row);

class TemplateCatalogue {
public:
    /// Ids are unique; re-registering an id raises IdConflict.
    void register_template(Template tmpl);

    const Template* find(const std::string& id) const;
    const std::map<std::string, Template>& all() const { return templates_; }

private:
    std::map<std::string, Template> templates_;
};

/// Expands every row against its catalogued template and merges the results
/// into one document, processing rows in (timestamp, trace_id, seq) order.
/// Errors are re-raised with the offending row position(s) in the message.
prov::ProvDocument expand_all(const TemplateCatalogue& catalogue,
                              const std::vector<BindingRow>& rows);

} // namespace provaud::tmpl

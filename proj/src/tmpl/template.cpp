#include "tmpl/template.hpp"

#include <algorithm>

#include "prov/namespaces.hpp"
#include "prov/provn.hpp"
#include "support/error.hpp"

namespace provaud::tmpl {

using prov::Attribute;
using prov::Literal;
using prov::ProvDocument;
using prov::ProvNode;
using prov::ProvRelation;
using prov::QualifiedName;
using prov::Timestamp;

namespace {

bool is_var(const QualifiedName& qn) { return qn.prefix == "var"; }

void note_variable(Template& t, const QualifiedName& qn, bool identifier_position) {
    if (!is_var(qn)) return;
    if (!std::binary_search(t.variables.begin(), t.variables.end(), qn.local)) {
        t.variables.insert(
            std::upper_bound(t.variables.begin(), t.variables.end(), qn.local), qn.local);
    }
    if (identifier_position) t.identifier_vars.insert(qn.local);
}

void scan_attrs(Template& t, const std::vector<Attribute>& attrs) {
    for (const auto& a : attrs) {
        if (is_var(a.key))
            fail(ErrorCode::SyntaxError,
                 "template " + t.id + " uses a variable as attribute key: " + a.key.str());
        if (const auto* qn = std::get_if<QualifiedName>(&a.value))
            note_variable(t, *qn, false);
    }
}

} // namespace

Template load_template(const std::string& id, std::string_view provn_text) {
    Template t;
    t.id = id;
    try {
        t.body = prov::parse_provn(provn_text);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UnknownPrefix &&
            std::string_view(e.what()).find("'var'") != std::string_view::npos)
            fail(ErrorCode::MissingVarNamespace,
                 "template " + id + " uses var: names without declaring the var prefix",
                 e.line(), e.column());
        throw;
    }
    for (const auto& [node_id, node] : t.body.nodes()) {
        note_variable(t, node_id, true);
        scan_attrs(t, node.attrs);
    }
    for (const auto& rel : t.body.relations()) {
        note_variable(t, rel.source, true);
        note_variable(t, rel.target, true);
        scan_attrs(t, rel.attrs);
    }
    return t;
}

namespace {

/// Resolved substitutions for one expansion: identifier map plus value map.
struct Substitution {
    std::map<std::string, QualifiedName> ids;  // identifier vars
    std::map<std::string, Literal> values;     // all vars, for attribute use
};

Substitution resolve(const Template& tmpl, const BindingRow& row) {
    Substitution sub;
    for (const auto& name : tmpl.variables) {
        auto it = row.values.find(name);
        if (it == row.values.end())
            fail(ErrorCode::UnboundVariable,
                 "row for template " + tmpl.id + " leaves variable '" + name + "' unbound");
        sub.values.emplace(name, it->second);
        if (tmpl.identifier_vars.count(name)) {
            const auto* qn = std::get_if<QualifiedName>(&it->second);
            if (!qn)
                fail(ErrorCode::TypeMismatch,
                     "variable '" + name + "' of template " + tmpl.id +
                         " is used as an identifier and must be bound to a qualified name, got " +
                         prov::literal_repr(it->second));
            if (qn->prefix == "var")
                fail(ErrorCode::TypeMismatch, "variable '" + name +
                                                  "' must not be bound to a var: name: " +
                                                  qn->str());
            sub.ids.emplace(name, *qn);
        }
    }
    // Two variables collapsing onto one id, or a variable colliding with a
    // constant id in the body, would change the statement count; reject.
    std::map<QualifiedName, std::string> seen;
    for (const auto& [name, qn] : sub.ids) {
        auto [it, inserted] = seen.emplace(qn, name);
        if (!inserted)
            fail(ErrorCode::IdConflict, "variables '" + it->second + "' and '" + name +
                                            "' of template " + tmpl.id +
                                            " are both bound to " + qn.str());
        if (tmpl.body.find_node(qn))
            fail(ErrorCode::IdConflict, "variable '" + name + "' of template " + tmpl.id +
                                            " is bound to " + qn.str() +
                                            ", which the template already names");
    }
    return sub;
}

QualifiedName substitute_id(const QualifiedName& qn, const Substitution& sub) {
    if (qn.prefix != "var") return qn;
    return sub.ids.at(qn.local);
}

Literal substitute_value(const Literal& v, const Substitution& sub) {
    if (const auto* qn = std::get_if<QualifiedName>(&v); qn && qn->prefix == "var")
        return sub.values.at(qn->local);
    return v;
}

std::vector<Attribute> substitute_attrs(const std::vector<Attribute>& attrs,
                                        const Substitution& sub) {
    std::vector<Attribute> out;
    out.reserve(attrs.size());
    for (const auto& a : attrs) out.push_back({a.key, substitute_value(a.value, sub)});
    return out;
}

void note_prefix(std::set<std::string>& prefixes, const QualifiedName& qn) {
    if (qn.prefix != "prov" && qn.prefix != "xsd") prefixes.insert(qn.prefix);
}

} // namespace

prov::ProvDocument expand(const Template& tmpl, const BindingRow& row) {
    if (!row.template_id.empty() && row.template_id != tmpl.id)
        fail(ErrorCode::InvalidArgument, "row for template " + row.template_id +
                                             " cannot expand template " + tmpl.id);
    Substitution sub = resolve(tmpl, row);

    ProvDocument out;
    std::set<std::string> prefixes;
    for (const auto& [node_id, node] : tmpl.body.nodes()) {
        ProvNode n;
        n.kind = node.kind;
        n.id = substitute_id(node_id, sub);
        n.attrs = substitute_attrs(node.attrs, sub);
        n.start_time = node.start_time;
        n.end_time = node.end_time;
        if (n.kind == prov::NodeKind::Activity && !n.start_time && !n.end_time &&
            !row.timestamp.empty()) {
            n.start_time = Timestamp{row.timestamp};
            n.end_time = Timestamp{row.timestamp};
        }
        note_prefix(prefixes, n.id);
        for (const auto& a : n.attrs) {
            note_prefix(prefixes, a.key);
            if (const auto* qn = std::get_if<QualifiedName>(&a.value)) note_prefix(prefixes, *qn);
        }
        out.add_node(std::move(n));
    }
    for (const auto& rel : tmpl.body.relations()) {
        ProvRelation r;
        r.kind = rel.kind;
        r.source = substitute_id(rel.source, sub);
        r.target = substitute_id(rel.target, sub);
        r.time = rel.time;
        r.attrs = substitute_attrs(rel.attrs, sub);
        note_prefix(prefixes, r.source);
        note_prefix(prefixes, r.target);
        for (const auto& a : r.attrs) {
            note_prefix(prefixes, a.key);
            if (const auto* qn = std::get_if<QualifiedName>(&a.value)) note_prefix(prefixes, *qn);
        }
        out.add_relation(std::move(r));
    }
    for (const auto& p : prefixes) {
        auto it = tmpl.body.namespaces().find(p);
        out.declare_namespace(p, it != tmpl.body.namespaces().end() ? it->second
                                                                    : prov::namespace_uri(p));
    }
    return out;
}

void TemplateCatalogue::register_template(Template tmpl) {
    auto id = tmpl.id;
    auto [it, inserted] = templates_.emplace(std::move(id), std::move(tmpl));
    if (!inserted)
        fail(ErrorCode::IdConflict, "template id already registered: " + it->first);
}

const Template* TemplateCatalogue::find(const std::string& id) const {
    auto it = templates_.find(id);
    return it == templates_.end() ? nullptr : &it->second;
}

prov::ProvDocument expand_all(const TemplateCatalogue& catalogue,
                              const std::vector<BindingRow>& rows) {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const BindingRow& ra = rows[a];
        const BindingRow& rb = rows[b];
        if (ra.timestamp != rb.timestamp) return ra.timestamp < rb.timestamp;
        if (ra.trace_id != rb.trace_id) return ra.trace_id < rb.trace_id;
        return ra.seq < rb.seq;
    });

    auto expand_at = [&](std::size_t idx) {
        const BindingRow& row = rows[idx];
        const Template* tmpl = catalogue.find(row.template_id);
        if (!tmpl)
            fail(ErrorCode::InvalidArgument,
                 "row " + std::to_string(idx) + " references unknown template '" +
                     row.template_id + "'");
        try {
            return expand(*tmpl, row);
        } catch (const Error& e) {
            fail(e.code(), "row " + std::to_string(idx) + ": " + e.what());
        }
    };

    ProvDocument acc;
    std::vector<std::size_t> done; // original indices already merged, in order
    for (std::size_t idx : order) {
        ProvDocument piece = expand_at(idx);
        try {
            acc = prov::merge(acc, piece);
        } catch (const Error& e) {
            // Find the earlier row this one conflicts with so the error names
            // both sides; worth the re-expansion cost on the failure path.
            for (std::size_t prev : done) {
                try {
                    (void)prov::merge(expand_at(prev), piece);
                } catch (const Error&) {
                    fail(e.code(), "rows " + std::to_string(prev) + " and " +
                                       std::to_string(idx) + ": " + e.what());
                }
            }
            fail(e.code(), "row " + std::to_string(idx) + ": " + e.what());
        }
        done.push_back(idx);
    }
    return acc;
}

} // namespace provaud::tmpl

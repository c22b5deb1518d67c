#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prov/literal.hpp"
#include "prov/qualified_name.hpp"

namespace provaud::prov {

enum class NodeKind { Entity, Activity, Agent };

enum class RelationKind {
    Used,              // activity -> entity
    WasGeneratedBy,    // entity -> activity
    WasAssociatedWith, // activity -> agent
    WasAttributedTo,   // entity -> agent
    WasDerivedFrom,    // entity -> entity
    WasInformedBy,     // activity -> activity
};

const char* node_kind_name(NodeKind k);
const char* relation_kind_name(RelationKind k);

/// One key=value pair. prov:type may repeat on a node; every other key is
/// single-valued.
struct Attribute {
    QualifiedName key;
    Literal value;

    friend bool operator==(const Attribute& a, const Attribute& b) {
        return a.key == b.key && a.value == b.value;
    }
    friend bool operator<(const Attribute& a, const Attribute& b) {
        if (a.key != b.key) return a.key < b.key;
        return literal_less(a.value, b.value);
    }
};

struct ProvNode {
    NodeKind kind = NodeKind::Entity;
    QualifiedName id;
    std::vector<Attribute> attrs; // kept sorted and de-duplicated
    // Activities only; both optional and independent.
    std::optional<Timestamp> start_time;
    std::optional<Timestamp> end_time;

    friend bool operator==(const ProvNode&, const ProvNode&) = default;
};

struct ProvRelation {
    RelationKind kind = RelationKind::Used;
    QualifiedName source;
    QualifiedName target;
    std::optional<Timestamp> time; // Used / WasGeneratedBy only
    std::vector<Attribute> attrs;  // kept sorted and de-duplicated

    friend bool operator==(const ProvRelation&, const ProvRelation&) = default;
};

/// Total order for canonical relation storage: kind rank, then source,
/// target, time, attributes.
bool relation_less(const ProvRelation& a, const ProvRelation& b);

/// Expected endpoint kinds for each relation kind.
NodeKind relation_source_kind(RelationKind k);
NodeKind relation_target_kind(RelationKind k);

/// A provenance document: declared namespaces, nodes keyed by id, and a
/// multiset of relations. All accessors iterate deterministically (nodes by
/// id, relations in canonical order, prefixes sorted).
class ProvDocument {
public:
    /// Registers prefix -> uri. Re-registering the same pair is a no-op;
    /// a conflicting uri for an existing prefix raises IdConflict.
    void declare_namespace(const std::string& prefix, const std::string& uri);

    /// True when the prefix is declared here or is one of the implicit
    /// `prov`/`xsd` prefixes.
    bool knows_prefix(const std::string& prefix) const;

    /// Adds a node, or merges attributes into an existing node of the same
    /// kind (set union; conflicting single-valued keys or a kind mismatch
    /// raise IdConflict). Start/end times merge when absent on one side and
    /// conflict otherwise.
    void add_node(ProvNode node);

    /// Appends a relation. Relations form a multiset, so an exact duplicate
    /// is stored again. Endpoints need not exist yet; validate() checks that.
    void add_relation(ProvRelation rel);

    const ProvNode* find_node(const QualifiedName& id) const;

    const std::map<std::string, std::string>& namespaces() const { return namespaces_; }
    const std::map<QualifiedName, ProvNode>& nodes() const { return nodes_; }
    const std::vector<ProvRelation>& relations() const { return relations_; } // canonical order

    std::size_t statement_count() const { return nodes_.size() + relations_.size(); }
    bool empty() const { return nodes_.empty() && relations_.empty(); }

    friend bool operator==(const ProvDocument&, const ProvDocument&) = default;

private:
    std::map<std::string, std::string> namespaces_;
    std::map<QualifiedName, ProvNode> nodes_;
    std::vector<ProvRelation> relations_; // kept sorted via relation_less
};

/// Checks referential integrity: every relation endpoint resolves to a
/// declared node of the kind its slot requires. Raises DanglingEndpoint or
/// KindMismatch on the first offending relation.
void validate(const ProvDocument& doc);

/// Union of two documents. Nodes merge by id (attribute union), relation
/// multiplicities take the per-relation maximum of the two sides, namespace
/// tables union (conflicting uris raise IdConflict). Identity: merging with
/// an empty document returns a copy. Idempotent, commutative, associative.
ProvDocument merge(const ProvDocument& a, const ProvDocument& b);

/// Inserts the attribute into a canonically sorted list. prov:type values
/// accumulate; for any other key a second distinct value raises IdConflict
/// (context names the node/relation for the error message).
void insert_attribute(std::vector<Attribute>& attrs, Attribute attr, const std::string& context);

} // namespace provaud::prov

#include "prov/document.hpp"

#include <algorithm>

#include "support/error.hpp"

namespace provaud::prov {

namespace {

int relation_rank(RelationKind k) { return static_cast<int>(k); }

bool is_prov_type(const QualifiedName& key) {
    return key.prefix == "prov" && key.local == "type";
}

} // namespace

const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Entity: return "entity";
        case NodeKind::Activity: return "activity";
        case NodeKind::Agent: return "agent";
    }
    return "?";
}

const char* relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::Used: return "used";
        case RelationKind::WasGeneratedBy: return "wasGeneratedBy";
        case RelationKind::WasAssociatedWith: return "wasAssociatedWith";
        case RelationKind::WasAttributedTo: return "wasAttributedTo";
        case RelationKind::WasDerivedFrom: return "wasDerivedFrom";
        case RelationKind::WasInformedBy: return "wasInformedBy";
    }
    return "?";
}

NodeKind relation_source_kind(RelationKind k) {
    switch (k) {
        case RelationKind::Used: return NodeKind::Activity;
        case RelationKind::WasGeneratedBy: return NodeKind::Entity;
        case RelationKind::WasAssociatedWith: return NodeKind::Activity;
        case RelationKind::WasAttributedTo: return NodeKind::Entity;
        case RelationKind::WasDerivedFrom: return NodeKind::Entity;
        case RelationKind::WasInformedBy: return NodeKind::Activity;
    }
    return NodeKind::Entity;
}

NodeKind relation_target_kind(RelationKind k) {
    switch (k) {
        case RelationKind::Used: return NodeKind::Entity;
        case RelationKind::WasGeneratedBy: return NodeKind::Activity;
        case RelationKind::WasAssociatedWith: return NodeKind::Agent;
        case RelationKind::WasAttributedTo: return NodeKind::Agent;
        case RelationKind::WasDerivedFrom: return NodeKind::Entity;
        case RelationKind::WasInformedBy: return NodeKind::Activity;
    }
    return NodeKind::Entity;
}

bool relation_less(const ProvRelation& a, const ProvRelation& b) {
    if (a.kind != b.kind) return relation_rank(a.kind) < relation_rank(b.kind);
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    if (a.time != b.time) {
        if (!a.time) return true;
        if (!b.time) return false;
        return a.time->iso < b.time->iso;
    }
    return std::lexicographical_compare(a.attrs.begin(), a.attrs.end(), b.attrs.begin(),
                                        b.attrs.end());
}

void insert_attribute(std::vector<Attribute>& attrs, Attribute attr, const std::string& context) {
    auto pos = std::lower_bound(attrs.begin(), attrs.end(), attr);
    if (pos != attrs.end() && *pos == attr) return; // exact duplicate, set semantics
    if (!is_prov_type(attr.key)) {
        for (const auto& existing : attrs) {
            if (existing.key == attr.key && !(existing.value == attr.value)) {
                fail(ErrorCode::IdConflict, "conflicting values for attribute " + attr.key.str() +
                                                " on " + context + ": " +
                                                literal_repr(existing.value) + " vs " +
                                                literal_repr(attr.value));
            }
        }
    }
    attrs.insert(pos, std::move(attr));
}

void ProvDocument::declare_namespace(const std::string& prefix, const std::string& uri) {
    auto it = namespaces_.find(prefix);
    if (it != namespaces_.end()) {
        if (it->second != uri)
            fail(ErrorCode::IdConflict, "prefix " + prefix + " already bound to " + it->second +
                                            ", cannot rebind to " + uri);
        return;
    }
    namespaces_.emplace(prefix, uri);
}

bool ProvDocument::knows_prefix(const std::string& prefix) const {
    if (prefix == "prov" || prefix == "xsd") return true;
    return namespaces_.count(prefix) > 0;
}

void ProvDocument::add_node(ProvNode node) {
    auto it = nodes_.find(node.id);
    if (it == nodes_.end()) {
        // Normalize attrs to sorted-unique even if the caller built them by hand.
        std::vector<Attribute> raw;
        raw.swap(node.attrs);
        for (auto& a : raw) insert_attribute(node.attrs, std::move(a), node.id.str());
        auto id = node.id;
        nodes_.emplace(std::move(id), std::move(node));
        return;
    }
    ProvNode& existing = it->second;
    if (existing.kind != node.kind)
        fail(ErrorCode::IdConflict, node.id.str() + " declared as both " +
                                        node_kind_name(existing.kind) + " and " +
                                        node_kind_name(node.kind));
    for (auto& a : node.attrs) insert_attribute(existing.attrs, std::move(a), node.id.str());
    auto merge_time = [&](std::optional<Timestamp>& dst, const std::optional<Timestamp>& src,
                          const char* which) {
        if (!src) return;
        if (!dst) {
            dst = src;
            return;
        }
        if (!(*dst == *src))
            fail(ErrorCode::IdConflict, node.id.str() + " has conflicting " + which + " times " +
                                            dst->iso + " vs " + src->iso);
    };
    merge_time(existing.start_time, node.start_time, "start");
    merge_time(existing.end_time, node.end_time, "end");
}

void ProvDocument::add_relation(ProvRelation rel) {
    std::vector<Attribute> raw;
    raw.swap(rel.attrs);
    std::string context = std::string(relation_kind_name(rel.kind)) + "(" + rel.source.str() +
                          ", " + rel.target.str() + ")";
    for (auto& a : raw) insert_attribute(rel.attrs, std::move(a), context);
    auto pos = std::lower_bound(relations_.begin(), relations_.end(), rel, relation_less);
    relations_.insert(pos, std::move(rel));
}

const ProvNode* ProvDocument::find_node(const QualifiedName& id) const {
    auto it = nodes_.find(id);
    return it == nodes_.end() ? nullptr : &it->second;
}

void validate(const ProvDocument& doc) {
    for (const auto& rel : doc.relations()) {
        auto check = [&](const QualifiedName& id, NodeKind want, const char* slot) {
            const ProvNode* n = doc.find_node(id);
            if (!n)
                fail(ErrorCode::DanglingEndpoint,
                     std::string(relation_kind_name(rel.kind)) + " " + slot + " " + id.str() +
                         " is not declared in the document");
            if (n->kind != want)
                fail(ErrorCode::KindMismatch, std::string(relation_kind_name(rel.kind)) + " " +
                                                  slot + " " + id.str() + " must be " +
                                                  node_kind_name(want) + " but is " +
                                                  node_kind_name(n->kind));
        };
        check(rel.source, relation_source_kind(rel.kind), "source");
        check(rel.target, relation_target_kind(rel.kind), "target");
    }
}

ProvDocument merge(const ProvDocument& a, const ProvDocument& b) {
    ProvDocument out;
    for (const auto& [prefix, uri] : a.namespaces()) out.declare_namespace(prefix, uri);
    for (const auto& [prefix, uri] : b.namespaces()) out.declare_namespace(prefix, uri);
    for (const auto& [id, node] : a.nodes()) out.add_node(node);
    for (const auto& [id, node] : b.nodes()) out.add_node(node);
    // Relations are a multiset; the merged multiplicity of each distinct
    // relation is the max of the two sides, so merge(x, x) == x.
    auto count_runs = [](const std::vector<ProvRelation>& rels) {
        std::vector<std::pair<ProvRelation, std::size_t>> runs;
        for (const auto& r : rels) {
            if (!runs.empty() && runs.back().first == r)
                ++runs.back().second;
            else
                runs.emplace_back(r, 1);
        }
        return runs;
    };
    auto ra = count_runs(a.relations());
    auto rb = count_runs(b.relations());
    std::size_t i = 0, j = 0;
    auto emit = [&](const ProvRelation& r, std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) out.add_relation(r);
    };
    while (i < ra.size() && j < rb.size()) {
        if (ra[i].first == rb[j].first) {
            emit(ra[i].first, std::max(ra[i].second, rb[j].second));
            ++i;
            ++j;
        } else if (relation_less(ra[i].first, rb[j].first)) {
            emit(ra[i].first, ra[i].second);
            ++i;
        } else {
            emit(rb[j].first, rb[j].second);
            ++j;
        }
    }
    for (; i < ra.size(); ++i) emit(ra[i].first, ra[i].second);
    for (; j < rb.size(); ++j) emit(rb[j].first, rb[j].second);
    return out;
}

} // namespace provaud::prov

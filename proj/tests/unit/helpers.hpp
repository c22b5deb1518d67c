#pragma once

#include <cstdlib>
#include <filesystem>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "audit/ingest.hpp"
#include "audit/log.hpp"
#include "audit/trail.hpp"
#include "prov/document.hpp"
#include "sim/demo.hpp"
#include "sim/runtime.hpp"
#include "support/timeutil.hpp"
#include "tmpl/catalogue.hpp"

namespace testgen {

using provaud::prov::Attribute;
using provaud::prov::Decimal;
using provaud::prov::Literal;
using provaud::prov::NodeKind;
using provaud::prov::ProvDocument;
using provaud::prov::ProvNode;
using provaud::prov::ProvRelation;
using provaud::prov::QualifiedName;
using provaud::prov::RelationKind;
using provaud::prov::Timestamp;

inline QualifiedName qn(const std::string& prefix, const std::string& local) {
    return QualifiedName{prefix, local};
}

inline int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string random_local(std::mt19937& rng) {
    static const char* pool = "abcdefghijklmnopqrstuvwxyz0123456789";
    std::string s;
    int n = pick(rng, 1, 8);
    for (int i = 0; i < n; ++i) s += pool[pick(rng, 0, 35)];
    return s;
}

inline Literal random_literal(std::mt19937& rng) {
    switch (pick(rng, 0, 4)) {
        case 0: {
            // Strings exercise the escapable characters too.
            std::string s = random_local(rng);
            if (pick(rng, 0, 3) == 0) s += "\"\\\n\t";
            return s;
        }
        case 1: return static_cast<std::int64_t>(pick(rng, -1000, 1000));
        case 2: return Decimal{std::to_string(pick(rng, -99, 99)) + "." +
                               std::to_string(pick(rng, 0, 9))};
        case 3: return Timestamp{provaud::timeutil::format_iso_utc(
                    1700000000 + static_cast<std::int64_t>(pick(rng, 0, 1000000)))};
        default: return qn("ex", random_local(rng));
    }
}

/// A random well-formed document: declared namespace, a handful of nodes of
/// mixed kinds with non-conflicting attributes, and relations whose
/// endpoints respect the kind constraints. Occasionally duplicates a
/// relation to exercise multiset semantics.
inline ProvDocument random_document(std::mt19937& rng, int max_nodes = 10, int max_rels = 12) {
    ProvDocument doc;
    doc.declare_namespace("ex", "http://example.org/");
    std::vector<QualifiedName> by_kind[3];
    int n_nodes = pick(rng, 0, max_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        ProvNode node;
        node.kind = static_cast<NodeKind>(pick(rng, 0, 2));
        node.id = qn("ex", "n" + std::to_string(i));
        int n_attrs = pick(rng, 0, 3);
        for (int a = 0; a < n_attrs; ++a) {
            // Distinct keys per node keep single-valued attributes conflict-free.
            Attribute attr{qn("ex", "k" + std::to_string(a)), random_literal(rng)};
            node.attrs.push_back(std::move(attr));
        }
        if (pick(rng, 0, 2) == 0)
            node.attrs.push_back(Attribute{qn("prov", "type"), qn("ex", random_local(rng))});
        if (node.kind == NodeKind::Activity && pick(rng, 0, 1) == 0) {
            std::int64_t t = 1700000000 + pick(rng, 0, 100000);
            node.start_time = Timestamp{provaud::timeutil::format_iso_utc(t)};
            if (pick(rng, 0, 1) == 0)
                node.end_time = Timestamp{provaud::timeutil::format_iso_utc(t + pick(rng, 0, 3600))};
        }
        by_kind[static_cast<int>(node.kind)].push_back(node.id);
        doc.add_node(std::move(node));
    }
    auto pick_id = [&](NodeKind k, QualifiedName& out) {
        auto& v = by_kind[static_cast<int>(k)];
        if (v.empty()) return false;
        out = v[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(v.size()) - 1))];
        return true;
    };
    int n_rels = pick(rng, 0, max_rels);
    for (int i = 0; i < n_rels; ++i) {
        ProvRelation rel;
        rel.kind = static_cast<RelationKind>(pick(rng, 0, 5));
        if (!pick_id(provaud::prov::relation_source_kind(rel.kind), rel.source)) continue;
        if (!pick_id(provaud::prov::relation_target_kind(rel.kind), rel.target)) continue;
        bool timed = rel.kind == RelationKind::Used || rel.kind == RelationKind::WasGeneratedBy;
        if (timed && pick(rng, 0, 1) == 0)
            rel.time = Timestamp{provaud::timeutil::format_iso_utc(1700000000 + pick(rng, 0, 9999))};
        if (pick(rng, 0, 3) == 0)
            rel.attrs.push_back(Attribute{qn("ex", "note"), random_literal(rng)});
        doc.add_relation(rel);
        if (pick(rng, 0, 4) == 0) doc.add_relation(rel); // duplicate on purpose
    }
    return doc;
}

/// Self-deleting scratch directory for storage tests.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        std::string tmpl =
            (std::filesystem::temp_directory_path() / "provaud-test-XXXXXX").string();
        path = mkdtemp(tmpl.data());
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path / name).string(); }
};

/// True when every node can reach every other, treating relations as
/// undirected edges.
inline bool is_connected(const ProvDocument& doc) {
    if (doc.nodes().empty()) return true;
    std::map<QualifiedName, std::vector<QualifiedName>> adj;
    for (const auto& [id, node] : doc.nodes()) adj[id];
    for (const auto& rel : doc.relations()) {
        adj[rel.source].push_back(rel.target);
        adj[rel.target].push_back(rel.source);
    }
    std::set<QualifiedName> seen;
    std::queue<QualifiedName> todo;
    todo.push(doc.nodes().begin()->first);
    seen.insert(doc.nodes().begin()->first);
    while (!todo.empty()) {
        QualifiedName cur = todo.front();
        todo.pop();
        for (const auto& next : adj[cur])
            if (seen.insert(next).second) todo.push(next);
    }
    return seen.size() == doc.nodes().size();
}

inline std::size_t degree(const ProvDocument& doc, const QualifiedName& id) {
    std::size_t n = 0;
    for (const auto& rel : doc.relations())
        n += (rel.source == id) + (rel.target == id);
    return n;
}

/// A random sub-document of `universe`: a subset of its nodes plus the
/// relations whose endpoints survive. Sub-documents of one universe never
/// conflict with each other, which is what the merge-law properties need.
inline ProvDocument random_subdocument(const ProvDocument& universe, std::mt19937& rng) {
    ProvDocument out;
    for (const auto& [prefix, uri] : universe.namespaces()) out.declare_namespace(prefix, uri);
    for (const auto& [id, node] : universe.nodes())
        if (pick(rng, 0, 2) != 0) out.add_node(node);
    for (const auto& rel : universe.relations())
        if (out.find_node(rel.source) && out.find_node(rel.target) && pick(rng, 0, 2) != 0)
            out.add_relation(rel);
    return out;
}

/// The bundled demo assistant with an auditor listening, everything written
/// into the given scratch directory.
struct DemoRig {
    explicit DemoRig(TempDir& dir,
                     std::map<std::string, provaud::sim::UserProfile> initial_profiles =
                         {{"owner", provaud::sim::demo_owner_profile()}})
        : log(dir.file("bindings.log"), dir.file("dead_letter.log")),
          catalogue(provaud::tmpl::standard_catalogue()),
          profiles(std::move(initial_profiles)),
          runtime(provaud::sim::demo_skills(), provaud::sim::demo_services(), profiles),
          auditor(log, catalogue, profiles) {
        auditor.attach(runtime.bus());
    }

    /// Everything logged so far, expanded into one validated document.
    ProvDocument trail() {
        return provaud::audit::build_audit_trail(catalogue, log.load().rows,
                                                 provaud::audit::TrailFilter{});
    }

    provaud::audit::BindingLog log;
    provaud::tmpl::TemplateCatalogue catalogue;
    std::map<std::string, provaud::sim::UserProfile> profiles;
    provaud::sim::Runtime runtime;
    provaud::audit::Auditor auditor;
};

} // namespace testgen

#include "prov/json_export.hpp"

#include <json.hpp>

namespace provaud::prov {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json literal_to_json(const Literal& v) {
    return std::visit(
        [](const auto& x) -> ordered_json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) return ordered_json{{"s", x}};
            else if constexpr (std::is_same_v<T, std::int64_t>) return ordered_json{{"i", x}};
            else if constexpr (std::is_same_v<T, Decimal>) return ordered_json{{"d", x.text}};
            else if constexpr (std::is_same_v<T, Timestamp>) return ordered_json{{"t", x.iso}};
            else return ordered_json{{"qn", x.str()}};
        },
        v);
}

ordered_json attrs_to_json(const std::vector<Attribute>& attrs) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : attrs) {
        ordered_json pair;
        pair["key"] = a.key.str();
        pair["value"] = literal_to_json(a.value);
        arr.push_back(std::move(pair));
    }
    return arr;
}

} // namespace

std::string document_to_json(const ProvDocument& doc, int indent) {
    ordered_json out;
    ordered_json ns = ordered_json::object();
    for (const auto& [prefix, uri] : doc.namespaces()) ns[prefix] = uri;
    out["namespaces"] = std::move(ns);
    ordered_json stmts = ordered_json::array();
    for (const auto& [id, node] : doc.nodes()) {
        ordered_json s;
        s["statement"] = node_kind_name(node.kind);
        s["id"] = id.str();
        if (node.start_time) s["start_time"] = node.start_time->iso;
        if (node.end_time) s["end_time"] = node.end_time->iso;
        if (!node.attrs.empty()) s["attrs"] = attrs_to_json(node.attrs);
        stmts.push_back(std::move(s));
    }
    for (const auto& rel : doc.relations()) {
        ordered_json s;
        s["statement"] = relation_kind_name(rel.kind);
        s["source"] = rel.source.str();
        s["target"] = rel.target.str();
        if (rel.time) s["time"] = rel.time->iso;
        if (!rel.attrs.empty()) s["attrs"] = attrs_to_json(rel.attrs);
        stmts.push_back(std::move(s));
    }
    out["statements"] = std::move(stmts);
    return out.dump(indent) + "\n";
}

} // namespace provaud::prov

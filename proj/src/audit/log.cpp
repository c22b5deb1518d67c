#include "audit/log.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support/error.hpp"

namespace provaud::audit {

using json = nlohmann::ordered_json;
using prov::Decimal;
using prov::Literal;
using prov::QualifiedName;
using prov::Timestamp;
using tmpl::BindingRow;

namespace {

json literal_to_json(const Literal& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) return json{{"s", x}};
            else if constexpr (std::is_same_v<T, std::int64_t>) return json{{"i", x}};
            else if constexpr (std::is_same_v<T, Decimal>) return json{{"d", x.text}};
            else if constexpr (std::is_same_v<T, Timestamp>) return json{{"t", x.iso}};
            else return json{{"qn", x.str()}};
        },
        v);
}

std::optional<Literal> literal_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) return std::nullopt;
    const auto& [key, value] = *j.items().begin();
    if (key == "s" && value.is_string()) return Literal{value.get<std::string>()};
    if (key == "i" && value.is_number_integer()) return Literal{value.get<std::int64_t>()};
    if (key == "d" && value.is_string()) return Literal{Decimal{value.get<std::string>()}};
    if (key == "t" && value.is_string()) return Literal{Timestamp{value.get<std::string>()}};
    if (key == "qn" && value.is_string()) {
        QualifiedName qn;
        if (!prov::split_qualified_name(value.get<std::string>(), qn) ||
            !prov::is_valid_qualified_name(qn))
            return std::nullopt;
        return Literal{qn};
    }
    return std::nullopt;
}

void append_line(const std::string& path, const std::string& line) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out.good()) fail(ErrorCode::StorageError, "cannot open for append: " + path);
    out << line << '\n';
    out.flush();
    if (!out.good()) fail(ErrorCode::StorageError, "write failed: " + path);
}

} // namespace

std::string BindingLog::encode_row(const BindingRow& row) {
    json j;
    j["template_id"] = row.template_id;
    j["trace_id"] = row.trace_id;
    j["timestamp"] = row.timestamp;
    j["seq"] = row.seq;
    json values = json::object();
    for (const auto& [name, value] : row.values) values[name] = literal_to_json(value);
    j["values"] = std::move(values);
    return j.dump();
}

std::optional<BindingRow> BindingLog::decode_row(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("template_id") || !j["template_id"].is_string()) return std::nullopt;
    if (!j.contains("trace_id") || !j["trace_id"].is_string()) return std::nullopt;
    if (!j.contains("timestamp") || !j["timestamp"].is_string()) return std::nullopt;
    if (!j.contains("seq") || !j["seq"].is_number_integer()) return std::nullopt;
    if (!j.contains("values") || !j["values"].is_object()) return std::nullopt;
    BindingRow row;
    row.template_id = j["template_id"].get<std::string>();
    row.trace_id = j["trace_id"].get<std::string>();
    row.timestamp = j["timestamp"].get<std::string>();
    row.seq = j["seq"].get<std::int64_t>();
    for (const auto& [name, value] : j["values"].items()) {
        auto lit = literal_from_json(value);
        if (!lit) return std::nullopt;
        row.values.emplace(name, std::move(*lit));
    }
    return row;
}

void BindingLog::append(const BindingRow& row) { append_line(log_path_, encode_row(row)); }

void BindingLog::append_dead(const std::string& reason, const sim::BusMessage& msg) {
    json j;
    j["reason"] = reason;
    j["topic"] = msg.topic;
    j["trace_id"] = msg.trace_id;
    j["timestamp"] = msg.sim_time;
    json payload = json::object();
    for (const auto& [key, value] : msg.payload) payload[key] = literal_to_json(value);
    j["payload"] = std::move(payload);
    append_line(dead_path_, j.dump());
}

bool BindingLog::exists() const {
    std::error_code ec;
    return std::filesystem::exists(log_path_, ec);
}

LoadResult BindingLog::load() const {
    std::ifstream in(log_path_, std::ios::binary);
    if (!in.good()) fail(ErrorCode::StorageError, "cannot read binding log: " + log_path_);
    LoadResult result;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto row = decode_row(line);
        if (row)
            result.rows.push_back(std::move(*row));
        else
            ++result.corrupt_lines;
    }
    return result;
}

} // namespace provaud::audit

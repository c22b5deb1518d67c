#include "prov/provn.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "support/error.hpp"
#include "support/timeutil.hpp"

namespace provaud::prov {

namespace {

std::string time_slot(const std::optional<Timestamp>& t) {
    return t ? t->iso : std::string("-");
}

void append_attrs(std::string& out, const std::vector<Attribute>& attrs) {
    if (attrs.empty()) return;
    out += ", [";
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out += ", ";
        out += attrs[i].key.str();
        out += "=";
        out += literal_to_provn(attrs[i].value);
    }
    out += "]";
}

} // namespace

std::string escape_string(std::string_view raw) {
    std::string out;
    out.reserve(raw.size() + 2);
    for (char c : raw) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string literal_to_provn(const Literal& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>)
                return "\"" + escape_string(x) + "\"";
            else if constexpr (std::is_same_v<T, std::int64_t>)
                return std::to_string(x);
            else if constexpr (std::is_same_v<T, Decimal>)
                return "\"" + x.text + "\" %% xsd:decimal";
            else if constexpr (std::is_same_v<T, Timestamp>)
                return "\"" + x.iso + "\" %% xsd:dateTime";
            else
                return "'" + x.str() + "'";
        },
        v);
}

std::string serialize_provn(const ProvDocument& doc) {
    std::string out = "document\n";
    for (const auto& [prefix, uri] : doc.namespaces())
        out += "  prefix " + prefix + " <" + uri + ">\n";
    if (!doc.namespaces().empty() && !doc.empty()) out += "\n";
    for (const auto& [id, node] : doc.nodes()) {
        out += "  ";
        out += node_kind_name(node.kind);
        out += "(" + id.str();
        if (node.kind == NodeKind::Activity && (node.start_time || node.end_time)) {
            out += ", " + time_slot(node.start_time) + ", " + time_slot(node.end_time);
        }
        append_attrs(out, node.attrs);
        out += ")\n";
    }
    for (const auto& rel : doc.relations()) {
        out += "  ";
        out += relation_kind_name(rel.kind);
        out += "(" + rel.source.str() + ", " + rel.target.str();
        if (rel.kind == RelationKind::Used || rel.kind == RelationKind::WasGeneratedBy)
            out += ", " + time_slot(rel.time);
        append_attrs(out, rel.attrs);
        out += ")\n";
    }
    out += "endDocument\n";
    return out;
}

namespace {

/// Character scanner with line/column tracking; the statement grammar sits
/// on top of this in Parser.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }

    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                get();
            else
                break;
        }
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '/' || c == '-' ||
           c == '_' || c == '.' || c == '#';
}

class Parser {
public:
    explicit Parser(std::string_view text) : sc_(text) {}

    ProvDocument parse() {
        sc_.skip_ws();
        expect_word("document");
        sc_.skip_ws();
        // Prefix declarations come first.
        while (peek_word() == "prefix") {
            read_word();
            sc_.skip_ws();
            std::string prefix = read_word();
            if (prefix.empty()) err("expected prefix name");
            sc_.skip_ws();
            expect_char('<');
            std::string uri;
            while (!sc_.eof() && sc_.peek() != '>') uri += sc_.get();
            expect_char('>');
            doc_.declare_namespace(prefix, uri);
            sc_.skip_ws();
        }
        // Statements: collect relations, apply after all nodes are in.
        std::vector<ProvRelation> pending;
        for (;;) {
            std::string word = peek_word();
            if (word == "endDocument") {
                read_word();
                break;
            }
            if (word.empty()) err("expected statement or endDocument");
            read_word();
            if (word == "entity")
                parse_node(NodeKind::Entity);
            else if (word == "activity")
                parse_node(NodeKind::Activity);
            else if (word == "agent")
                parse_node(NodeKind::Agent);
            else if (auto kind = relation_kind_from_name(word))
                pending.push_back(parse_relation(*kind));
            else
                err("unknown statement '" + word + "'");
            sc_.skip_ws();
        }
        sc_.skip_ws();
        if (!sc_.eof()) err("trailing content after endDocument");
        for (auto& rel : pending) doc_.add_relation(std::move(rel));
        validate(doc_);
        return std::move(doc_);
    }

private:
    Scanner sc_;
    ProvDocument doc_;

    [[noreturn]] void err(const std::string& msg) {
        throw Error(ErrorCode::SyntaxError, msg, sc_.line(), sc_.col());
    }

    static std::optional<RelationKind> relation_kind_from_name(const std::string& w) {
        if (w == "used") return RelationKind::Used;
        if (w == "wasGeneratedBy") return RelationKind::WasGeneratedBy;
        if (w == "wasAssociatedWith") return RelationKind::WasAssociatedWith;
        if (w == "wasAttributedTo") return RelationKind::WasAttributedTo;
        if (w == "wasDerivedFrom") return RelationKind::WasDerivedFrom;
        if (w == "wasInformedBy") return RelationKind::WasInformedBy;
        return std::nullopt;
    }

    std::string peek_word() {
        sc_.skip_ws();
        Scanner probe = sc_; // cheap copy, scanner holds only a view + counters
        std::string w;
        while (!probe.eof() && is_word_char(probe.peek())) w += probe.get();
        return w;
    }

    std::string read_word() {
        sc_.skip_ws();
        std::string w;
        while (!sc_.eof() && is_word_char(sc_.peek())) w += sc_.get();
        return w;
    }

    void expect_word(const std::string& want) {
        std::string got = read_word();
        if (got != want) err("expected '" + want + "', got '" + got + "'");
    }

    void expect_char(char want) {
        sc_.skip_ws();
        if (sc_.eof() || sc_.peek() != want)
            err(std::string("expected '") + want + "'");
        sc_.get();
    }

    bool try_char(char want) {
        sc_.skip_ws();
        if (!sc_.eof() && sc_.peek() == want) {
            sc_.get();
            return true;
        }
        return false;
    }

    QualifiedName read_qname() {
        int line = sc_.line(), col = sc_.col();
        std::string w = read_word();
        QualifiedName qn;
        if (!split_qualified_name(w, qn) || !is_valid_qualified_name(qn))
            throw Error(ErrorCode::SyntaxError, "expected qualified name, got '" + w + "'", line,
                        col);
        if (!doc_.knows_prefix(qn.prefix))
            throw Error(ErrorCode::UnknownPrefix, "undeclared prefix '" + qn.prefix + "' in '" +
                                                      w + "'",
                        line, col);
        return qn;
    }

    std::string read_quoted_string() {
        expect_char('"');
        std::string out;
        for (;;) {
            if (sc_.eof()) err("unterminated string literal");
            char c = sc_.get();
            if (c == '"') break;
            if (c == '\\') {
                if (sc_.eof()) err("unterminated escape");
                char e = sc_.get();
                switch (e) {
                    case '\\': out += '\\'; break;
                    case '"': out += '"'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    case 'r': out += '\r'; break;
                    default: err(std::string("unsupported escape '\\") + e + "'");
                }
            } else {
                out += c;
            }
        }
        return out;
    }

    Literal read_literal() {
        sc_.skip_ws();
        char c = sc_.peek();
        if (c == '\'') {
            sc_.get();
            QualifiedName qn = read_qname();
            expect_char('\'');
            return qn;
        }
        if (c == '"') {
            std::string s = read_quoted_string();
            // Optional datatype: "lexical" %% xsd:decimal / xsd:dateTime
            Scanner probe = sc_;
            probe.skip_ws();
            if (!probe.eof() && probe.peek() == '%') {
                sc_.skip_ws();
                expect_char('%');
                expect_char('%');
                int line = sc_.line(), col = sc_.col();
                QualifiedName dt = read_qname();
                if (dt.prefix == "xsd" && dt.local == "decimal") {
                    if (!looks_like_decimal(s))
                        throw Error(ErrorCode::SyntaxError,
                                    "malformed xsd:decimal literal \"" + s + "\"", line, col);
                    return Decimal{s};
                }
                if (dt.prefix == "xsd" && dt.local == "dateTime") {
                    if (!timeutil::parse_iso_utc(s))
                        throw Error(ErrorCode::SyntaxError,
                                    "malformed xsd:dateTime literal \"" + s + "\"", line, col);
                    return Timestamp{s};
                }
                throw Error(ErrorCode::SyntaxError, "unsupported datatype " + dt.str(), line,
                            col);
            }
            return s;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            // '-' is a word character, so read_word picks up the sign too.
            return parse_int_token(read_word());
        }
        err("expected literal value");
    }

    std::int64_t parse_int_token(const std::string& w) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(w, &used);
            if (used != w.size()) err("malformed integer '" + w + "'");
            return static_cast<std::int64_t>(v);
        } catch (const std::exception&) {
            err("malformed integer '" + w + "'");
        }
    }

    static bool looks_like_decimal(const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool digits = false, dot = false;
        for (; i < s.size(); ++i) {
            if (std::isdigit(static_cast<unsigned char>(s[i])))
                digits = true;
            else if (s[i] == '.' && !dot)
                dot = true;
            else
                return false;
        }
        return digits;
    }

    std::vector<Attribute> read_attr_list() {
        std::vector<Attribute> attrs;
        expect_char('[');
        sc_.skip_ws();
        if (try_char(']')) return attrs;
        for (;;) {
            QualifiedName key = read_qname();
            expect_char('=');
            Literal value = read_literal();
            attrs.push_back(Attribute{std::move(key), std::move(value)});
            if (try_char(']')) break;
            expect_char(',');
        }
        return attrs;
    }

    /// Reads either `-` or a bare ISO timestamp in a time slot.
    std::optional<Timestamp> read_time_slot() {
        sc_.skip_ws();
        if (try_char('-')) {
            // Guard against "-" glued to a following word, e.g. "-x".
            if (!sc_.eof() && is_word_char(sc_.peek())) err("expected '-' or timestamp");
            return std::nullopt;
        }
        int line = sc_.line(), col = sc_.col();
        std::string w = read_word();
        if (!timeutil::parse_iso_utc(w))
            throw Error(ErrorCode::SyntaxError, "expected '-' or timestamp, got '" + w + "'",
                        line, col);
        return Timestamp{w};
    }

    void parse_node(NodeKind kind) {
        expect_char('(');
        ProvNode node;
        node.kind = kind;
        node.id = read_qname();
        if (try_char(',')) {
            sc_.skip_ws();
            if (kind == NodeKind::Activity && sc_.peek() != '[') {
                node.start_time = read_time_slot();
                expect_char(',');
                node.end_time = read_time_slot();
                if (try_char(',')) node.attrs = read_attr_list();
            } else {
                node.attrs = read_attr_list();
            }
        }
        expect_char(')');
        doc_.add_node(std::move(node));
    }

    ProvRelation parse_relation(RelationKind kind) {
        expect_char('(');
        ProvRelation rel;
        rel.kind = kind;
        rel.source = read_qname();
        expect_char(',');
        rel.target = read_qname();
        bool timed = kind == RelationKind::Used || kind == RelationKind::WasGeneratedBy;
        if (try_char(',')) {
            sc_.skip_ws();
            if (timed && sc_.peek() != '[') {
                rel.time = read_time_slot();
                if (try_char(',')) rel.attrs = read_attr_list();
            } else {
                rel.attrs = read_attr_list();
            }
        }
        expect_char(')');
        return rel;
    }
};

} // namespace

ProvDocument parse_provn(std::string_view text) { return Parser(text).parse(); }

} // namespace provaud::prov

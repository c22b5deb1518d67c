#include "prov/literal.hpp"

namespace provaud::prov {

bool split_qualified_name(std::string_view text, QualifiedName& out) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size())
        return false;
    out.prefix.assign(text.substr(0, colon));
    out.local.assign(text.substr(colon + 1));
    return true;
}

bool is_valid_qualified_name(const QualifiedName& qn) {
    if (qn.prefix.empty() || qn.local.empty()) return false;
    for (char c : qn.prefix)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ':') return false;
    for (char c : qn.local)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    return true;
}

bool literal_less(const Literal& a, const Literal& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return std::visit(
        [&](const auto& va) {
            using T = std::decay_t<decltype(va)>;
            const auto& vb = std::get<T>(b);
            return va < vb;
        },
        a);
}

std::string literal_repr(const Literal& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::string>) return "s:" + x;
            else if constexpr (std::is_same_v<T, std::int64_t>) return "i:" + std::to_string(x);
            else if constexpr (std::is_same_v<T, Decimal>) return "d:" + x.text;
            else if constexpr (std::is_same_v<T, Timestamp>) return "t:" + x.iso;
            else return "q:" + x.str();
        },
        v);
}

} // namespace provaud::prov

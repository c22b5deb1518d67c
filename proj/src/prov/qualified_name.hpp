#pragma once

#include <string>
#include <string_view>
#include <tuple>

namespace provaud::prov {

/// A prefixed identifier such as `sais:UserData` or `trace:t0001/intent`.
/// The prefix must be registered in the owning document's namespace table
/// (or be one of the implicit `prov`/`xsd` prefixes) before serialization.
struct QualifiedName {
    std::string prefix;
    std::string local;

    QualifiedName() = default;
    QualifiedName(std::string prefix_, std::string local_)
        : prefix(std::move(prefix_)), local(std::move(local_)) {}

    std::string str() const { return prefix + ":" + local; }

    friend bool operator==(const QualifiedName& a, const QualifiedName& b) {
        return a.prefix == b.prefix && a.local == b.local;
    }
    friend bool operator!=(const QualifiedName& a, const QualifiedName& b) { return !(a == b); }
    friend bool operator<(const QualifiedName& a, const QualifiedName& b) {
        return std::tie(a.prefix, a.local) < std::tie(b.prefix, b.local);
    }
};

/// Splits "prefix:local" at the first colon. Returns false when there is no
/// colon or either side is empty.
bool split_qualified_name(std::string_view text, QualifiedName& out);

/// True when the name is well formed: non-empty prefix and local, and the
/// local part contains no whitespace.
bool is_valid_qualified_name(const QualifiedName& qn);

} // namespace provaud::prov

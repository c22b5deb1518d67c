#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "prov/qualified_name.hpp"

namespace provaud::prov {

/// Fixed-point decimal carried as its canonical textual form ("1.5", "-0.25").
/// We never do arithmetic on these; they exist so attribute values such as
/// coordinates survive serialization byte for byte.
struct Decimal {
    std::string text;

    friend bool operator==(const Decimal& a, const Decimal& b) { return a.text == b.text; }
    friend bool operator<(const Decimal& a, const Decimal& b) { return a.text < b.text; }
};

/// UTC timestamp carried as its canonical "YYYY-MM-DDTHH:MM:SSZ" form.
struct Timestamp {
    std::string iso;

    friend bool operator==(const Timestamp& a, const Timestamp& b) { return a.iso == b.iso; }
    friend bool operator<(const Timestamp& a, const Timestamp& b) { return a.iso < b.iso; }
};

/// Attribute value: plain string, integer, decimal, timestamp, or a
/// qualified name (for values like prov:type='sais:UserData').
using Literal = std::variant<std::string, std::int64_t, Decimal, Timestamp, QualifiedName>;

/// Stable ordering across the variant alternatives, used to keep attribute
/// lists canonically sorted. Orders by alternative index first, then value.
bool literal_less(const Literal& a, const Literal& b);

/// Unambiguous debug/sort representation, e.g. `s:hello`, `i:42`, `d:1.5`,
/// `t:2024-03-12T08:13:00Z`, `q:sais:UserData`.
std::string literal_repr(const Literal& v);

} // namespace provaud::prov

#include "prov/namespaces.hpp"

#include <array>
#include <utility>

namespace provaud::prov {

std::string namespace_uri(const std::string& prefix) {
    static constexpr std::array<std::pair<const char*, const char*>, 10> known = {{
        {"prov", "http://www.w3.org/ns/prov#"},
        {"xsd", "http://www.w3.org/2001/XMLSchema#"},
        {"var", "http://openprovenance.org/var#"},
        {"sais", "http://provaud.example/ns/sais#"},
        {"core", "http://provaud.example/ns/core#"},
        {"mycroft", "http://provaud.example/ns/skill#"},
        {"svc", "http://provaud.example/ns/service#"},
        {"trace", "http://provaud.example/ns/trace#"},
        {"user", "http://provaud.example/ns/user#"},
        {"ex", "http://example.org/"},
    }};
    for (const auto& [p, uri] : known)
        if (prefix == p) return uri;
    return "urn:provaud:ns:" + prefix;
}

} // namespace provaud::prov

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "prov/literal.hpp"

namespace provaud::tmpl {

/// One recorded instantiation of a template: variable name -> bound value.
/// `timestamp` is the simulated turn time ("YYYY-MM-DDTHH:MM:SSZ", empty for
/// timeless rows); `seq` is the per-log sequence number that keeps rows with
/// equal timestamps in a stable order.
struct BindingRow {
    std::string template_id;
    std::string trace_id;
    std::string timestamp;
    std::int64_t seq = 0;
    std::map<std::string, prov::Literal> values;

    friend bool operator==(const BindingRow&, const BindingRow&) = default;
};

} // namespace provaud::tmpl

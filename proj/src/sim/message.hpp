#pragma once

#include <map>
#include <string>

#include "prov/literal.hpp"

namespace provaud::sim {

/// One message on the simulated assistant's bus. `sim_time` is the turn's
/// scenario timestamp; every message descended from one utterance shares the
/// utterance's trace_id and time.
struct BusMessage {
    std::string topic;
    std::string trace_id;
    std::string sim_time;
    std::map<std::string, prov::Literal> payload;

    friend bool operator==(const BusMessage&, const BusMessage&) = default;
};

} // namespace provaud::sim

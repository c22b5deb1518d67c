#pragma once

#include <map>
#include <set>
#include <string>

#include "audit/log.hpp"
#include "sim/bus.hpp"
#include "sim/profile.hpp"
#include "tmpl/template.hpp"

namespace provaud::audit {

/// Listens to prov.* messages and turns them into persisted binding rows.
/// Each message maps to the template named by its topic suffix; a payload
/// missing one of that template's variables is rejected to the dead-letter
/// file instead of being silently dropped. Two kinds of rows are synthesized
/// on top of the incoming ones: a user_datapoint row the first time a
/// datapoint is referenced, and an api_error row when an external call
/// reports a status of 400 or higher.
class Auditor {
public:
    Auditor(BindingLog& log, const tmpl::TemplateCatalogue& catalogue,
            const std::map<std::string, sim::UserProfile>& profiles);

    /// Subscribes to "prov.*" on the bus; handle() runs synchronously for
    /// every matching publish from then on.
    void attach(sim::MessageBus& bus);

    /// Converts one message to its binding row (no persistence, no
    /// synthesis). Raises SchemaViolation for an unmapped topic or a payload
    /// that does not cover the template's variables.
    tmpl::BindingRow ingest(const sim::BusMessage& msg) const;

    /// Full path: synthesis + ingest + append, dead-lettering rejected
    /// messages. Storage failures propagate.
    void handle(const sim::BusMessage& msg);

    /// Continuation support: seed sequence numbering and datapoint
    /// de-duplication from rows already in the log.
    void seed_from(const std::vector<tmpl::BindingRow>& existing);

    int rows_written() const { return rows_written_; }
    int rows_rejected() const { return rows_rejected_; }

private:
    void append_row(tmpl::BindingRow row);
    void synthesize_datapoint(const sim::BusMessage& msg);
    void synthesize_api_error(const sim::BusMessage& msg);

    BindingLog& log_;
    const tmpl::TemplateCatalogue& catalogue_;
    const std::map<std::string, sim::UserProfile>& profiles_;
    std::set<std::string> datapoints_seen_; // "<user_id>/<data_type>"
    std::int64_t next_seq_ = 0;
    int rows_written_ = 0;
    int rows_rejected_ = 0;
};

} // namespace provaud::audit

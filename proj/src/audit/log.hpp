#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sim/message.hpp"
#include "tmpl/binding.hpp"

namespace provaud::audit {

struct LoadResult {
    std::vector<tmpl::BindingRow> rows;
    int corrupt_lines = 0;
};

/// Append-only binding storage: one JSON object per line in the log file,
/// rejected messages as JSON lines in the dead-letter file. Rows are written
/// as complete lines and flushed, so a torn write can only ever produce a
/// trailing fragment that load() skips and counts as corrupt.
class BindingLog {
public:
    BindingLog(std::string log_path, std::string dead_path)
        : log_path_(std::move(log_path)), dead_path_(std::move(dead_path)) {}

    const std::string& log_path() const { return log_path_; }
    const std::string& dead_path() const { return dead_path_; }

    /// Appends one row as a single line. StorageError when the file cannot
    /// be opened or written.
    void append(const tmpl::BindingRow& row);

    /// Records a rejected message with the reason it was rejected.
    void append_dead(const std::string& reason, const sim::BusMessage& msg);

    /// Reads every parseable row in file order. Unparseable lines are
    /// skipped and counted. StorageError when the file does not exist or
    /// cannot be read.
    LoadResult load() const;

    bool exists() const;

    static std::string encode_row(const tmpl::BindingRow& row);
    static std::optional<tmpl::BindingRow> decode_row(const std::string& line);

private:
    std::string log_path_;
    std::string dead_path_;
};

} // namespace provaud::audit

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "audit/trail.hpp"
#include "norms/norms.hpp"
#include "query/narrate.hpp"
#include "sim/runtime.hpp"

namespace provaud::engine {

/// File layout of one audit workspace. Everything an engine instance does
/// happens under a single output directory.
struct Workspace {
    std::string out_dir;

    std::string bindings_path() const;
    std::string dead_path() const;
    std::string norms_path() const;
    std::string display_names_path() const;
};

struct QueryOptions {
    std::string question;     // "data-recipients" or "usage-count"
    audit::TrailFilter filter;
    bool generalize = true;   // snap narrated times to the half hour
    bool include_rows = false; // append one tab-separated line per flow row
};

/// What one evaluated line of an interactive session produced.
struct ReplTurn {
    std::string reply;
    bool quit = false;
};

/// All commands of the audit tool, shared by the command line and the
/// library bindings. An engine is scoped to one output directory; it creates
/// the directory on construction and resolves display names from
/// display_names.txt there, falling back to the built-in table.
class Engine {
public:
    explicit Engine(std::string out_dir);
    ~Engine();

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const Workspace& workspace() const { return ws_; }

    /// Replays a scenario file through the simulated assistant with the
    /// auditor attached, replacing any previous log files, and returns the
    /// turn-by-turn transcript. InvalidArgument when the scenario file does
    /// not exist, ScenarioParseError when it does not parse, StorageError
    /// when the workspace is not writable.
    std::string run_scenario(const std::string& scenario_path);

    /// Answers one audit question from the recorded log. UnknownQuestion
    /// lists the supported ids; a missing log or malformed filter is
    /// InvalidArgument; "usage-count" requires filter.skill_id.
    std::string query(const QueryOptions& opts);

    /// Writes the (filtered) audit trail as canonical PROV-N and returns a
    /// one-line summary. A missing log is InvalidArgument; an empty log
    /// still produces a valid empty document.
    std::string export_provn(const std::string& provn_path, const audit::TrailFilter& filter);

    /// Renders the trail as PROV-N without touching disk (empty filter =
    /// whole log).
    std::string trail_provn(const audit::TrailFilter& filter);

    /// Mines routine norms from the logged door intervals, writes them one
    /// JSON object per line to norms_path (empty = the workspace default),
    /// and returns one summary line per norm.
    std::string norms_mine(const std::string& norms_path, const norms::NormConfig& config);

    /// Checks logged door intervals against previously mined norms and
    /// returns one line per violation (empty string when everything
    /// conforms). Open-ended intervals are judged as of the newest row
    /// timestamp in the log.
    std::string norms_check(const std::string& norms_path, const norms::NormConfig& config);

    /// Quick digest of the workspace: row counts, trace count, and the
    /// data-recipient narrative. Tolerates a missing log (reports zeros).
    std::string report();

    /// Evaluates one interactive line. Audit questions are answered from the
    /// log and do not advance time; ":quit" ends the session; anything else
    /// is handed to the assistant as an utterance and its rows append to the
    /// live log.
    ReplTurn repl_eval(const std::string& line);

    /// Parses a norms config JSON file: an object with any of bin_width_min,
    /// min_support, window_pad_min, duration_factor. Unknown keys are
    /// rejected so typos do not silently fall back to defaults.
    static norms::NormConfig load_norm_config(const std::string& path);

    static query::DisplayNames default_display_names();

private:
    struct ReplState;

    std::vector<tmpl::BindingRow> load_rows() const;
    std::vector<tmpl::BindingRow> require_rows() const;
    prov::ProvDocument trail_of(const std::vector<tmpl::BindingRow>& rows,
                                const audit::TrailFilter& filter) const;
    query::DisplayNames display_names() const;
    ReplState& repl();
    std::string answer_data_recipients(const QueryOptions& opts) const;
    std::string answer_usage_count(const QueryOptions& opts) const;

    Workspace ws_;
    tmpl::TemplateCatalogue catalogue_;
    std::unique_ptr<ReplState> repl_;
};

} // namespace provaud::engine

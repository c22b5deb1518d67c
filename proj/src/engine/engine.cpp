#include "engine/engine.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "audit/ingest.hpp"
#include "audit/log.hpp"
#include "engine/messages.hpp"
#include "prov/provn.hpp"
#include "query/dataflow.hpp"
#include "sim/demo.hpp"
#include "support/error.hpp"
#include "support/timeutil.hpp"
#include "tmpl/catalogue.hpp"

namespace provaud::engine {

namespace fs = std::filesystem;

namespace {

constexpr const char* kQuestionDataRecipients = "data-recipients";
constexpr const char* kQuestionUsageCount = "usage-count";

// Interactive sessions start at this simulated moment and advance one minute
// per utterance; audit questions do not consume time.
constexpr const char* kReplEpochIso = "2024-03-12T08:13:00Z";
constexpr std::int64_t kReplStepSeconds = 60;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::StorageError, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::StorageError, "cannot write " + path);
    out << text;
    out.flush();
    if (!out) fail(ErrorCode::StorageError, "cannot write " + path);
}

std::string trim_copy(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

int count_nonempty_lines(const std::string& text) {
    int n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!trim_copy(line).empty()) ++n;
    }
    return n;
}

prov::QualifiedName parse_skill_id(const std::string& text) {
    prov::QualifiedName qn;
    if (!prov::split_qualified_name(text, qn) || !prov::is_valid_qualified_name(qn))
        fail(ErrorCode::InvalidArgument, "not a qualified skill id: '" + text + "'");
    return qn;
}

// Questions the interactive session answers from the log instead of handing
// to the assistant. Matched with the same keyword matcher the skills use.
std::vector<sim::IntentRule> audit_rules() {
    std::vector<sim::IntentRule> rules;
    rules.push_back({"audit:data-recipients",
                     "data_recipients",
                     {"services", "data"},
                     {"which", "got", "personal"},
                     {}});
    rules.push_back({"audit:usage-count",
                     "usage_count",
                     {"often"},
                     {"how", "did"},
                     {{"skill", "use"}}});
    return rules;
}

// "the weather skill" -> "weather"; filler words around a skill mention.
std::string strip_skill_filler(const std::string& slot_value) {
    static const std::set<std::string> filler = {"the", "skill", "app"};
    std::string out;
    for (const auto& token : sim::normalize_utterance(slot_value)) {
        if (filler.count(token)) continue;
        if (!out.empty()) out += ' ';
        out += token;
    }
    return out;
}

// Name under which users may refer to a skill: its display label, its id,
// its id's local part, with or without the trailing "-skill".
std::optional<prov::QualifiedName> resolve_skill_name(const std::string& candidate,
                                                      const query::DisplayNames& names) {
    static const char* kSkillIds[] = {sim::kWeatherSkillId, sim::kGarageSkillId,
                                      sim::kJokeSkillId};
    std::map<std::string, prov::QualifiedName> keys;
    for (const char* id : kSkillIds) {
        prov::QualifiedName qn;
        if (!prov::split_qualified_name(id, qn)) continue;
        keys[id] = qn;
        keys[qn.local] = qn;
        const std::string suffix = "-skill";
        if (qn.local.size() > suffix.size() &&
            qn.local.compare(qn.local.size() - suffix.size(), suffix.size(), suffix) == 0) {
            std::string bare = qn.local.substr(0, qn.local.size() - suffix.size());
            std::replace(bare.begin(), bare.end(), '-', ' ');
            keys[bare] = qn;
        }
        std::string label = names.display(qn);
        std::transform(label.begin(), label.end(), label.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        keys[label] = qn;
    }
    auto it = keys.find(candidate);
    if (it == keys.end()) return std::nullopt;
    return it->second;
}

std::vector<norms::Norm> load_norms_file(const std::string& path) {
    std::string text = read_text_file(path);
    std::vector<norms::Norm> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim_copy(line).empty()) continue;
        auto norm = norms::decode_norm(line);
        if (!norm)
            fail(ErrorCode::InvalidArgument,
                 "bad norm on line " + std::to_string(lineno) + " of " + path, lineno);
        out.push_back(std::move(*norm));
    }
    return out;
}

} // namespace

std::string Workspace::bindings_path() const { return (fs::path(out_dir) / "bindings.log").string(); }
std::string Workspace::dead_path() const { return (fs::path(out_dir) / "bindings.dead").string(); }
std::string Workspace::norms_path() const { return (fs::path(out_dir) / "norms.jsonl").string(); }
std::string Workspace::display_names_path() const {
    return (fs::path(out_dir) / "display_names.txt").string();
}

// Interactive session state, created lazily on the first repl_eval call. The
// member order matters: the auditor keeps references to the log and the
// profile map, so those must be constructed first.
struct Engine::ReplState {
    ReplState(const Workspace& ws, const tmpl::TemplateCatalogue& catalogue)
        : log(ws.bindings_path(), ws.dead_path()),
          profiles{{"owner", sim::demo_owner_profile()}},
          runtime(sim::demo_skills(), sim::demo_services(), profiles),
          auditor(log, catalogue, profiles),
          clock(*timeutil::parse_iso_utc(kReplEpochIso)) {
        auditor.attach(runtime.bus());
        if (log.exists()) {
            auto existing = log.load().rows;
            auditor.seed_from(existing);
            int max_trace = 0;
            std::int64_t last_ts = 0;
            bool have_ts = false;
            for (const auto& row : existing) {
                if (row.trace_id.size() > 1 && row.trace_id[0] == 't' &&
                    row.trace_id.find_first_not_of("0123456789", 1) == std::string::npos) {
                    max_trace = std::max(max_trace, std::stoi(row.trace_id.substr(1)));
                }
                if (auto ts = timeutil::parse_iso_utc(row.timestamp)) {
                    last_ts = std::max(last_ts, *ts);
                    have_ts = true;
                }
            }
            runtime.set_next_trace_number(max_trace + 1);
            if (have_ts) clock = std::max(clock, last_ts + kReplStepSeconds);
        }
    }

    audit::BindingLog log;
    std::map<std::string, sim::UserProfile> profiles;
    sim::Runtime runtime;
    audit::Auditor auditor;
    std::int64_t clock;
};

Engine::Engine(std::string out_dir)
    : ws_{out_dir.empty() ? std::string(".") : std::move(out_dir)},
      catalogue_(tmpl::standard_catalogue()) {
    std::error_code ec;
    fs::create_directories(ws_.out_dir, ec);
    if (ec && !fs::is_directory(ws_.out_dir))
        fail(ErrorCode::StorageError, "cannot create output directory " + ws_.out_dir);
}

Engine::~Engine() = default;

std::vector<tmpl::BindingRow> Engine::load_rows() const {
    audit::BindingLog log(ws_.bindings_path(), ws_.dead_path());
    if (!log.exists()) return {};
    return log.load().rows;
}

std::vector<tmpl::BindingRow> Engine::require_rows() const {
    audit::BindingLog log(ws_.bindings_path(), ws_.dead_path());
    if (!log.exists())
        fail(ErrorCode::InvalidArgument,
             "no bindings.log under " + ws_.out_dir + "; run a scenario first");
    return log.load().rows;
}

prov::ProvDocument Engine::trail_of(const std::vector<tmpl::BindingRow>& rows,
                                    const audit::TrailFilter& filter) const {
    return audit::build_audit_trail(catalogue_, rows, filter);
}

query::DisplayNames Engine::display_names() const {
    const std::string path = ws_.display_names_path();
    if (fs::exists(path)) return query::parse_display_names(read_text_file(path));
    return default_display_names();
}

query::DisplayNames Engine::default_display_names() {
    return query::parse_display_names(msg::kDefaultDisplayNames);
}

std::string Engine::run_scenario(const std::string& scenario_path) {
    if (!fs::exists(scenario_path))
        fail(ErrorCode::InvalidArgument, "scenario file not found: " + scenario_path);
    sim::ScenarioFile scenario = sim::load_scenario_file(scenario_path);

    // A run replaces the recorded history: fresh log, no stale dead letters.
    write_text_file(ws_.bindings_path(), "");
    std::error_code ec;
    fs::remove(ws_.dead_path(), ec);
    if (fs::exists(ws_.dead_path()))
        fail(ErrorCode::StorageError, "cannot remove " + ws_.dead_path());

    // Same per-datapoint merge the runtime applies, so the auditor (which
    // synthesizes datapoint rows from this map) sees what the skills see.
    std::map<std::string, sim::UserProfile> profiles{{"owner", sim::demo_owner_profile()}};
    for (const auto& [user_id, profile] : scenario.profiles) {
        sim::UserProfile& merged = profiles[user_id];
        merged.user_id = user_id;
        for (const auto& [type, value] : profile.datapoints) merged.datapoints[type] = value;
    }

    audit::BindingLog log(ws_.bindings_path(), ws_.dead_path());
    sim::Runtime runtime(sim::demo_skills(), sim::demo_services(), profiles);
    audit::Auditor auditor(log, catalogue_, profiles);
    auditor.attach(runtime.bus());

    sim::SimulationLog simlog = runtime.run(scenario);

    std::ostringstream out;
    for (const auto& turn : simlog.turns) {
        out << "[" << turn.trace_id << " " << turn.time_iso << "] " << turn.user_id << ": "
            << turn.utterance << "\n";
        out << "[" << turn.trace_id << " " << turn.time_iso << "] assistant: " << turn.speech
            << "\n";
    }
    out << "logged " << auditor.rows_written() << " rows (" << auditor.rows_rejected()
        << " rejected)";
    return out.str();
}

std::string Engine::answer_data_recipients(const QueryOptions& opts) const {
    auto rows = require_rows();
    auto trail = trail_of(rows, opts.filter);
    auto flows = query::data_recipients(trail);
    std::string answer = query::narrate_recipients(flows, display_names(), opts.generalize);
    if (opts.include_rows) {
        for (const auto& flow : flows) {
            answer += "\n" + flow.datapoint_id.str() + "\t" + flow.data_type + "\t" +
                      flow.service_id.str() + "\t" + flow.skill_id.str() + "\t" +
                      (flow.time_iso.empty() ? "-" : flow.time_iso);
        }
    }
    return answer;
}

std::string Engine::answer_usage_count(const QueryOptions& opts) const {
    if (!opts.filter.skill_id)
        fail(ErrorCode::InvalidArgument, "usage-count needs --skill");
    prov::QualifiedName skill = parse_skill_id(*opts.filter.skill_id);
    auto rows = require_rows();
    auto trail = trail_of(rows, opts.filter);
    int count = query::usage_count(trail, skill, opts.filter.from_iso, opts.filter.to_iso);
    return std::to_string(count);
}

std::string Engine::query(const QueryOptions& opts) {
    if (opts.question == kQuestionDataRecipients) return answer_data_recipients(opts);
    if (opts.question == kQuestionUsageCount) return answer_usage_count(opts);
    fail(ErrorCode::UnknownQuestion, "unknown question '" + opts.question +
                                         "'; supported: data-recipients, usage-count");
}

std::string Engine::trail_provn(const audit::TrailFilter& filter) {
    return prov::serialize_provn(trail_of(require_rows(), filter));
}

std::string Engine::export_provn(const std::string& provn_path, const audit::TrailFilter& filter) {
    auto trail = trail_of(require_rows(), filter);
    write_text_file(provn_path, prov::serialize_provn(trail));
    std::ostringstream out;
    out << "wrote " << provn_path << ": " << trail.nodes().size() << " nodes, "
        << trail.relations().size() << " relations";
    return out.str();
}

std::string Engine::norms_mine(const std::string& norms_path, const norms::NormConfig& config) {
    auto trail = trail_of(require_rows(), audit::TrailFilter{});
    auto events = norms::extract_events(trail, norms::door_interval_spec());
    auto mined = norms::mine_norms(events, config);

    const std::string path = norms_path.empty() ? ws_.norms_path() : norms_path;
    std::string file_text;
    std::string summary;
    for (const auto& norm : mined) {
        file_text += norms::encode_norm(norm) + "\n";
        if (!summary.empty()) summary += "\n";
        summary += norms::summarize_norm(norm);
    }
    write_text_file(path, file_text);
    return summary;
}

std::string Engine::norms_check(const std::string& norms_path, const norms::NormConfig& config) {
    const std::string path = norms_path.empty() ? ws_.norms_path() : norms_path;
    if (!fs::exists(path))
        fail(ErrorCode::InvalidArgument, "no norms file at " + path + "; run norms-mine first");
    auto learned = load_norms_file(path);

    auto rows = require_rows();
    auto trail = trail_of(rows, audit::TrailFilter{});
    auto events = norms::extract_events(trail, norms::door_interval_spec());

    // Judge still-open intervals as of the end of recorded history.
    std::optional<std::int64_t> as_of;
    for (const auto& row : rows) {
        if (auto ts = timeutil::parse_iso_utc(row.timestamp)) {
            as_of = as_of ? std::max(*as_of, *ts) : *ts;
        }
    }

    std::string out;
    for (const auto& event : events) {
        if (auto violation = norms::check_violation(event, learned, config, as_of)) {
            if (!out.empty()) out += "\n";
            out += norms::describe_violation(*violation);
        }
    }
    return out;
}

std::string Engine::report() {
    std::vector<tmpl::BindingRow> rows = load_rows();
    audit::BindingLog log(ws_.bindings_path(), ws_.dead_path());
    int corrupt = log.exists() ? log.load().corrupt_lines : 0;
    int rejected = fs::exists(ws_.dead_path())
                       ? count_nonempty_lines(read_text_file(ws_.dead_path()))
                       : 0;
    std::set<std::string> traces;
    for (const auto& row : rows) traces.insert(row.trace_id);

    auto trail = trail_of(rows, audit::TrailFilter{});
    std::string narrative =
        query::narrate_recipients(query::data_recipients(trail), display_names(), true);

    std::ostringstream out;
    out << "rows: " << rows.size() << " (" << rejected << " rejected, " << corrupt
        << " corrupt)\n";
    out << "traces: " << traces.size() << "\n";
    out << narrative;
    return out.str();
}

Engine::ReplState& Engine::repl() {
    if (!repl_) repl_ = std::make_unique<ReplState>(ws_, catalogue_);
    return *repl_;
}

ReplTurn Engine::repl_eval(const std::string& line) {
    ReplTurn out;
    const std::string text = trim_copy(line);
    if (text.empty()) return out;
    if (text == ":quit") {
        out.quit = true;
        return out;
    }

    auto& st = repl();
    if (auto match = sim::match_intent(audit_rules(), text)) {
        auto rows = st.log.exists() ? st.log.load().rows : std::vector<tmpl::BindingRow>{};
        auto trail = trail_of(rows, audit::TrailFilter{});
        if (match->intent_name == "data_recipients") {
            out.reply =
                query::narrate_recipients(query::data_recipients(trail), display_names(), true);
            return out;
        }
        auto slot = match->slots.find("skill");
        std::string candidate = slot == match->slots.end() ? "" : strip_skill_filler(slot->second);
        if (candidate.empty()) {
            out.reply = msg::kWhichSkill;
            return out;
        }
        auto names = display_names();
        auto skill = resolve_skill_name(candidate, names);
        if (!skill) {
            out.reply = msg::kUnknownSkillPrefix + candidate + msg::kUnknownSkillSuffix;
            return out;
        }
        int count = query::usage_count(trail, *skill, std::nullopt, std::nullopt);
        out.reply = msg::kUsedPrefix + names.display(*skill) + msg::kUsedInfix +
                    std::to_string(count) + (count == 1 ? msg::kUsedOnce : msg::kUsedMany);
        return out;
    }

    auto turn = st.runtime.process_utterance(timeutil::format_iso_utc(st.clock), "owner", text);
    st.clock += kReplStepSeconds;
    out.reply = turn.speech;
    return out;
}

norms::NormConfig Engine::load_norm_config(const std::string& path) {
    if (!fs::exists(path))
        fail(ErrorCode::InvalidArgument, "config file not found: " + path);
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidArgument, "bad config file " + path + ": " + e.what());
    }
    if (!parsed.is_object())
        fail(ErrorCode::InvalidArgument, "bad config file " + path + ": not a JSON object");

    norms::NormConfig config;
    for (const auto& [key, value] : parsed.items()) {
        if (key == "bin_width_min" && value.is_number_integer())
            config.bin_width_min = value.get<int>();
        else if (key == "min_support" && value.is_number_integer())
            config.min_support = value.get<int>();
        else if (key == "window_pad_min" && value.is_number_integer())
            config.window_pad_min = value.get<int>();
        else if (key == "duration_factor" && value.is_number())
            config.duration_factor = value.get<double>();
        else
            fail(ErrorCode::InvalidArgument,
                 "bad config file " + path + ": unexpected '" + key + "'");
    }
    return config;
}

} // namespace provaud::engine

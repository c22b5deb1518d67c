// Command line front end. Talks to the engine exclusively through the C API
// so it doubles as a living example of embedding the library.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "provaud.h"

namespace {

struct EngineCloser {
    void operator()(pa_engine* e) const { pa_engine_close(e); }
};
using EnginePtr = std::unique_ptr<pa_engine, EngineCloser>;

struct StringFreer {
    void operator()(char* s) const { pa_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFreer>;

int report_failure(pa_status status) {
    std::cerr << "provaud: " << pa_last_error() << "\n";
    return static_cast<int>(status);
}

// Prints a result when there is one; empty output stays silent so scripts
// can test for "nothing to say".
void print_text(const char* text) {
    if (text != nullptr && *text != '\0') std::cout << text << "\n";
}

int open_engine(const std::string& out_dir, EnginePtr& engine) {
    pa_engine* raw = nullptr;
    pa_status status = pa_engine_open(out_dir.c_str(), &raw);
    if (status != PA_OK) return report_failure(status);
    engine.reset(raw);
    return 0;
}

const char* field_or_null(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

int run_repl(pa_engine* engine) {
    const bool interactive = isatty(fileno(stdin)) != 0;
    std::string line;
    while (true) {
        if (interactive) std::cout << "provaud> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        char* raw_reply = nullptr;
        int quit = 0;
        pa_status status = pa_repl_eval(engine, line.c_str(), &raw_reply, &quit);
        if (status != PA_OK) return report_failure(status);
        OwnedString reply(raw_reply);
        print_text(reply.get());
        if (quit) break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"audit what a simulated voice assistant does with personal data"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir = ".";
    app.add_option("--out", out_dir, "workspace directory (default: PROVAUD_OUT or .)")
        ->envname("PROVAUD_OUT");

    std::string scenario_path;
    auto* cmd_run = app.add_subcommand("run", "replay a scenario file through the assistant");
    cmd_run->add_option("--scenario", scenario_path, "scenario file to replay")->required();

    std::string question;
    std::string from_iso, to_iso, user_id, skill_id, trace_id;
    std::string generalize = "on";
    bool include_rows = false;
    auto* cmd_query = app.add_subcommand("query", "answer an audit question from the log");
    cmd_query->add_option("--question", question, "data-recipients or usage-count")->required();
    cmd_query->add_option("--from", from_iso, "inclusive lower time bound (ISO-8601 UTC)");
    cmd_query->add_option("--to", to_iso, "inclusive upper time bound (ISO-8601 UTC)");
    cmd_query->add_option("--user", user_id, "restrict to traces touching this user");
    cmd_query->add_option("--skill", skill_id, "restrict to traces touching this skill");
    cmd_query->add_option("--trace", trace_id, "restrict to one trace id");
    cmd_query->add_option("--generalize", generalize, "round narrated times/places (default on)")
        ->check(CLI::IsMember({"on", "off"}));
    cmd_query->add_flag("--rows", include_rows, "also print one line per data flow");

    auto* cmd_repl = app.add_subcommand("repl", "interactive session against the live log");

    std::string provn_path;
    auto* cmd_export = app.add_subcommand("export", "write the audit trail as PROV-N");
    cmd_export->add_option("--file", provn_path, "output path (default: <out>/trail.provn)");
    cmd_export->add_option("--from", from_iso, "inclusive lower time bound (ISO-8601 UTC)");
    cmd_export->add_option("--to", to_iso, "inclusive upper time bound (ISO-8601 UTC)");
    cmd_export->add_option("--user", user_id, "restrict to traces touching this user");
    cmd_export->add_option("--skill", skill_id, "restrict to traces touching this skill");
    cmd_export->add_option("--trace", trace_id, "restrict to one trace id");

    std::string norms_path;
    std::string config_path;
    auto* cmd_mine = app.add_subcommand("norms-mine", "learn routine norms from the log");
    cmd_mine->add_option("--norms", norms_path, "norms file (default: <out>/norms.jsonl)");
    cmd_mine->add_option("--config", config_path, "mining config JSON file");
    auto* cmd_check = app.add_subcommand("norms-check", "flag log events that break the norms");
    cmd_check->add_option("--norms", norms_path, "norms file (default: <out>/norms.jsonl)");
    cmd_check->add_option("--config", config_path, "mining config JSON file");

    auto* cmd_report = app.add_subcommand("report", "summarize the workspace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    EnginePtr engine;
    if (int rc = open_engine(out_dir, engine); rc != 0) return rc;

    pa_filter filter{};
    filter.from_iso = field_or_null(from_iso);
    filter.to_iso = field_or_null(to_iso);
    filter.user_id = field_or_null(user_id);
    filter.skill_id = field_or_null(skill_id);
    filter.trace_id = field_or_null(trace_id);

    pa_norm_config norm_config{};
    pa_norm_config* norm_config_ptr = nullptr;
    if (!config_path.empty()) {
        pa_status status = pa_norms_config_load(config_path.c_str(), &norm_config);
        if (status != PA_OK) return report_failure(status);
        norm_config_ptr = &norm_config;
    }

    if (*cmd_run) {
        char* transcript = nullptr;
        pa_status status = pa_run_scenario(engine.get(), scenario_path.c_str(), &transcript);
        if (status != PA_OK) return report_failure(status);
        OwnedString owned(transcript);
        print_text(owned.get());
        return 0;
    }

    if (*cmd_query) {
        char* answer = nullptr;
        pa_status status = pa_query(engine.get(), question.c_str(), &filter,
                                    generalize == "on" ? 1 : 0, include_rows ? 1 : 0, &answer);
        if (status != PA_OK) return report_failure(status);
        OwnedString owned(answer);
        print_text(owned.get());
        return 0;
    }

    if (*cmd_repl) return run_repl(engine.get());

    if (*cmd_export) {
        std::string path = provn_path.empty() ? out_dir + "/trail.provn" : provn_path;
        char* summary = nullptr;
        pa_status status = pa_export_provn(engine.get(), path.c_str(), &filter, &summary);
        if (status != PA_OK) return report_failure(status);
        OwnedString owned(summary);
        print_text(owned.get());
        return 0;
    }

    if (*cmd_mine) {
        char* summary = nullptr;
        pa_status status = pa_norms_mine(engine.get(), field_or_null(norms_path),
                                         norm_config_ptr, &summary);
        if (status != PA_OK) return report_failure(status);
        OwnedString owned(summary);
        print_text(owned.get());
        return 0;
    }

    if (*cmd_check) {
        char* findings = nullptr;
        pa_status status = pa_norms_check(engine.get(), field_or_null(norms_path),
                                          norm_config_ptr, &findings);
        if (status != PA_OK) return report_failure(status);
        OwnedString owned(findings);
        print_text(owned.get());
        return 0;
    }

    if (*cmd_report) {
        char* text = nullptr;
        pa_status status = pa_report(engine.get(), &text);
        if (status != PA_OK) return report_failure(status);
        OwnedString owned(text);
        print_text(owned.get());
        return 0;
    }

    return 2;
}

#include "provaud.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "engine/engine.hpp"
#include "query/generalize.hpp"
#include "support/error.hpp"

namespace {

thread_local std::string g_last_error;

// Strings cross the C boundary as malloc'd copies so pa_string_free can be
// plain free() no matter how the library itself allocates.
char* dup_for_caller(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pa_status status_of(const provaud::Error& e) {
    return e.code() == provaud::ErrorCode::StorageError ? PA_STORAGE : PA_BAD_INPUT;
}

template <typename Fn>
pa_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return PA_OK;
    } catch (const provaud::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PA_ERROR;
    } catch (...) {
        g_last_error = "unknown error";
        return PA_ERROR;
    }
}

pa_status bad_input(const char* message) {
    g_last_error = message;
    return PA_BAD_INPUT;
}

std::optional<std::string> opt_of(const char* s) {
    if (s == nullptr || *s == '\0') return std::nullopt;
    return std::string(s);
}

provaud::audit::TrailFilter filter_of(const pa_filter* filter) {
    provaud::audit::TrailFilter out;
    if (filter == nullptr) return out;
    out.from_iso = opt_of(filter->from_iso);
    out.to_iso = opt_of(filter->to_iso);
    out.user_id = opt_of(filter->user_id);
    out.skill_id = opt_of(filter->skill_id);
    out.trace_id = opt_of(filter->trace_id);
    return out;
}

provaud::norms::NormConfig config_of(const pa_norm_config* config) {
    provaud::norms::NormConfig out;
    if (config == nullptr) return out;
    if (config->bin_width_min > 0) out.bin_width_min = config->bin_width_min;
    if (config->min_support > 0) out.min_support = config->min_support;
    if (config->window_pad_min >= 0) out.window_pad_min = config->window_pad_min;
    if (config->duration_factor > 0) out.duration_factor = config->duration_factor;
    return out;
}

pa_status hand_out(char** slot, const std::string& value) {
    char* copy = dup_for_caller(value);
    if (copy == nullptr) {
        g_last_error = "out of memory";
        return PA_ERROR;
    }
    *slot = copy;
    return PA_OK;
}

} // namespace

struct pa_engine {
    explicit pa_engine(const char* out_dir)
        : impl(out_dir == nullptr ? std::string() : std::string(out_dir)) {}

    provaud::engine::Engine impl;
};

extern "C" {

const char* pa_version(void) { return "0.1.0"; }

const char* pa_last_error(void) { return g_last_error.c_str(); }

void pa_string_free(char* s) { std::free(s); }

pa_status pa_engine_open(const char* out_dir, pa_engine** out) {
    if (out == nullptr) return bad_input("pa_engine_open: out is NULL");
    pa_engine* created = nullptr;
    pa_status status = guarded([&] { created = new pa_engine(out_dir); });
    if (status == PA_OK) *out = created;
    return status;
}

void pa_engine_close(pa_engine* engine) { delete engine; }

pa_status pa_run_scenario(pa_engine* engine, const char* scenario_path, char** transcript) {
    if (engine == nullptr) return bad_input("pa_run_scenario: engine is NULL");
    if (scenario_path == nullptr) return bad_input("pa_run_scenario: scenario_path is NULL");
    if (transcript == nullptr) return bad_input("pa_run_scenario: transcript is NULL");
    std::string text;
    pa_status status = guarded([&] { text = engine->impl.run_scenario(scenario_path); });
    if (status != PA_OK) return status;
    return hand_out(transcript, text);
}

pa_status pa_query(pa_engine* engine, const char* question_id, const pa_filter* filter,
                   int generalize, int include_rows, char** answer) {
    if (engine == nullptr) return bad_input("pa_query: engine is NULL");
    if (question_id == nullptr) return bad_input("pa_query: question_id is NULL");
    if (answer == nullptr) return bad_input("pa_query: answer is NULL");
    provaud::engine::QueryOptions opts;
    opts.question = question_id;
    opts.filter = filter_of(filter);
    opts.generalize = generalize != 0;
    opts.include_rows = include_rows != 0;
    std::string text;
    pa_status status = guarded([&] { text = engine->impl.query(opts); });
    if (status != PA_OK) return status;
    return hand_out(answer, text);
}

pa_status pa_trail_provn(pa_engine* engine, const pa_filter* filter, char** provn) {
    if (engine == nullptr) return bad_input("pa_trail_provn: engine is NULL");
    if (provn == nullptr) return bad_input("pa_trail_provn: provn is NULL");
    std::string text;
    pa_status status = guarded([&] { text = engine->impl.trail_provn(filter_of(filter)); });
    if (status != PA_OK) return status;
    return hand_out(provn, text);
}

pa_status pa_export_provn(pa_engine* engine, const char* provn_path, const pa_filter* filter,
                          char** summary) {
    if (engine == nullptr) return bad_input("pa_export_provn: engine is NULL");
    if (provn_path == nullptr) return bad_input("pa_export_provn: provn_path is NULL");
    if (summary == nullptr) return bad_input("pa_export_provn: summary is NULL");
    std::string text;
    pa_status status =
        guarded([&] { text = engine->impl.export_provn(provn_path, filter_of(filter)); });
    if (status != PA_OK) return status;
    return hand_out(summary, text);
}

pa_status pa_norms_config_load(const char* path, pa_norm_config* out) {
    if (path == nullptr) return bad_input("pa_norms_config_load: path is NULL");
    if (out == nullptr) return bad_input("pa_norms_config_load: out is NULL");
    provaud::norms::NormConfig parsed;
    pa_status status =
        guarded([&] { parsed = provaud::engine::Engine::load_norm_config(path); });
    if (status != PA_OK) return status;
    out->bin_width_min = parsed.bin_width_min;
    out->min_support = parsed.min_support;
    out->window_pad_min = parsed.window_pad_min;
    out->duration_factor = parsed.duration_factor;
    return PA_OK;
}

pa_status pa_norms_mine(pa_engine* engine, const char* norms_path, const pa_norm_config* config,
                        char** summary) {
    if (engine == nullptr) return bad_input("pa_norms_mine: engine is NULL");
    if (summary == nullptr) return bad_input("pa_norms_mine: summary is NULL");
    std::string text;
    pa_status status = guarded([&] {
        text = engine->impl.norms_mine(norms_path == nullptr ? "" : norms_path,
                                       config_of(config));
    });
    if (status != PA_OK) return status;
    return hand_out(summary, text);
}

pa_status pa_norms_check(pa_engine* engine, const char* norms_path, const pa_norm_config* config,
                         char** findings) {
    if (engine == nullptr) return bad_input("pa_norms_check: engine is NULL");
    if (findings == nullptr) return bad_input("pa_norms_check: findings is NULL");
    std::string text;
    pa_status status = guarded([&] {
        text = engine->impl.norms_check(norms_path == nullptr ? "" : norms_path,
                                        config_of(config));
    });
    if (status != PA_OK) return status;
    return hand_out(findings, text);
}

pa_status pa_report(pa_engine* engine, char** text) {
    if (engine == nullptr) return bad_input("pa_report: engine is NULL");
    if (text == nullptr) return bad_input("pa_report: text is NULL");
    std::string digest;
    pa_status status = guarded([&] { digest = engine->impl.report(); });
    if (status != PA_OK) return status;
    return hand_out(text, digest);
}

pa_status pa_repl_eval(pa_engine* engine, const char* line, char** reply, int* quit) {
    if (engine == nullptr) return bad_input("pa_repl_eval: engine is NULL");
    if (line == nullptr) return bad_input("pa_repl_eval: line is NULL");
    if (reply == nullptr) return bad_input("pa_repl_eval: reply is NULL");
    if (quit == nullptr) return bad_input("pa_repl_eval: quit is NULL");
    provaud::engine::ReplTurn turn;
    pa_status status = guarded([&] { turn = engine->impl.repl_eval(line); });
    if (status != PA_OK) return status;
    status = hand_out(reply, turn.reply);
    if (status != PA_OK) return status;
    *quit = turn.quit ? 1 : 0;
    return PA_OK;
}

pa_status pa_generalize_time(const char* iso, char** out) {
    if (iso == nullptr) return bad_input("pa_generalize_time: iso is NULL");
    if (out == nullptr) return bad_input("pa_generalize_time: out is NULL");
    std::string text;
    pa_status status = guarded([&] { text = provaud::query::generalize_time_iso(iso); });
    if (status != PA_OK) return status;
    return hand_out(out, text);
}

pa_status pa_generalize_location(double lat, double lon, double* out_lat, double* out_lon) {
    if (out_lat == nullptr || out_lon == nullptr)
        return bad_input("pa_generalize_location: output is NULL");
    std::pair<double, double> rounded;
    pa_status status = guarded([&] { rounded = provaud::query::generalize_location(lat, lon); });
    if (status != PA_OK) return status;
    *out_lat = rounded.first;
    *out_lon = rounded.second;
    return PA_OK;
}

} // extern "C"

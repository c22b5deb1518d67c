/*
 * provaud: C API of the provenance auditing engine.
 *
 * Usage pattern:
 *
 *   pa_engine* eng = NULL;
 *   if (pa_engine_open("out", &eng) != PA_OK) { puts(pa_last_error()); ... }
 *   char* transcript = NULL;
 *   if (pa_run_scenario(eng, "scenarios/weather-demo.scn", &transcript) == PA_OK) {
 *       puts(transcript);
 *       pa_string_free(transcript);
 *   }
 *   pa_engine_close(eng);
 *
 * Every function that can fail returns a pa_status; on failure the output
 * parameters are untouched and pa_last_error() holds a message for the
 * calling thread. Strings returned through char** are heap copies owned by
 * the caller and must be released with pa_string_free().
 */

#ifndef PROVAUD_H
#define PROVAUD_H

#ifndef PA_API
#if defined(_WIN32)
#define PA_API
#else
#define PA_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pa_status {
    PA_OK = 0,        /* success */
    PA_ERROR = 1,     /* unexpected internal failure */
    PA_BAD_INPUT = 2, /* unusable arguments, files, or questions */
    PA_STORAGE = 3    /* the filesystem refused a read or write */
} pa_status;

/* One engine instance per output directory; not thread-safe. */
typedef struct pa_engine pa_engine;

/* Row selection for queries and exports. NULL fields are unrestricted.
 * from/to are inclusive "YYYY-MM-DDTHH:MM:SSZ" bounds, user is a bare id
 * like "owner", skill and trace are ids like "mycroft:weather-skill" and
 * "t0001". */
typedef struct pa_filter {
    const char* from_iso;
    const char* to_iso;
    const char* user_id;
    const char* skill_id;
    const char* trace_id;
} pa_filter;

/* Routine-mining knobs. Zero or negative fields mean "use the default"
 * (30-minute bins, support 3, 30-minute pad, factor 2.0). */
typedef struct pa_norm_config {
    int bin_width_min;
    int min_support;
    int window_pad_min;
    double duration_factor;
} pa_norm_config;

PA_API const char* pa_version(void);

/* Message of the most recent failure on this thread; never NULL. */
PA_API const char* pa_last_error(void);

PA_API void pa_string_free(char* s);

/* Opens (creating if needed) the workspace under out_dir. NULL or "" means
 * the current directory. */
PA_API pa_status pa_engine_open(const char* out_dir, pa_engine** out);
PA_API void pa_engine_close(pa_engine* engine);

/* Replays a scenario file, replacing the workspace log, and returns the
 * turn-by-turn transcript. */
PA_API pa_status pa_run_scenario(pa_engine* engine, const char* scenario_path,
                                 char** transcript);

/* Answers "data-recipients" or "usage-count" (the latter needs
 * filter->skill_id). generalize != 0 rounds narrated times to the half hour;
 * include_rows != 0 appends one tab-separated line per data flow. */
PA_API pa_status pa_query(pa_engine* engine, const char* question_id, const pa_filter* filter,
                          int generalize, int include_rows, char** answer);

/* Renders the (filtered) audit trail as canonical PROV-N text. */
PA_API pa_status pa_trail_provn(pa_engine* engine, const pa_filter* filter, char** provn);

/* Writes the trail to provn_path and returns a one-line summary. */
PA_API pa_status pa_export_provn(pa_engine* engine, const char* provn_path,
                                 const pa_filter* filter, char** summary);

/* Parses a mining-config JSON file into *out. The file is an object with
 * any of: bin_width_min, min_support, window_pad_min, duration_factor.
 * Unknown keys are PA_BAD_INPUT. */
PA_API pa_status pa_norms_config_load(const char* path, pa_norm_config* out);

/* Mines routine norms from the log into norms_path (NULL or "" = the
 * workspace default norms.jsonl) and returns one summary line per norm. */
PA_API pa_status pa_norms_mine(pa_engine* engine, const char* norms_path,
                               const pa_norm_config* config, char** summary);

/* Checks the log against mined norms; returns one line per violation, the
 * empty string when everything conforms. */
PA_API pa_status pa_norms_check(pa_engine* engine, const char* norms_path,
                                const pa_norm_config* config, char** findings);

/* Digest of the workspace: row counts, traces, data-recipient narrative. */
PA_API pa_status pa_report(pa_engine* engine, char** text);

/* Evaluates one interactive line against the live workspace log. *quit is
 * set when the line ends the session (":quit"). *reply may be set to the
 * empty string, which still must be freed. */
PA_API pa_status pa_repl_eval(pa_engine* engine, const char* line, char** reply, int* quit);

/* Rounds "YYYY-MM-DDTHH:MM:SSZ" to the nearest half hour (ties round down). */
PA_API pa_status pa_generalize_time(const char* iso, char** out);

/* Rounds coordinates to one decimal place. PA_BAD_INPUT outside the valid
 * latitude/longitude ranges. */
PA_API pa_status pa_generalize_location(double lat, double lon, double* out_lat,
                                        double* out_lon);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROVAUD_H */

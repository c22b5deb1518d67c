// Drives the installed-style command line binary end to end through a shell,
// checking exit codes, stdout/stderr text, and the files left behind.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "unit/helpers.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    return quoted + "'";
}

/// Runs `provaud <args>` under sh with the given text on stdin. Environment
/// assignments can be smuggled in through `env_prefix` ("FOO=bar").
CliResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
    std::string cmd;
    if (!stdin_text.empty()) cmd += "printf %s " + shell_quote(stdin_text) + " | ";
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += shell_quote(PROVAUD_CLI_PATH) + " " + args;
    if (stdin_text.empty()) cmd += " < /dev/null";
    cmd += " 2>&1";

    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    int raw = pclose(pipe);
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << text;
}

std::string repo_file(const std::string& rel) { return std::string(PROVAUD_REPO_DIR) + "/" + rel; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const char* kWeatherSentence =
    "Your geo-location was sent to OpenWeather by the Weather skill on 2024-03-12 at 08:00.";

const char* kGarageNormSummary =
    "door_open_interval: weekdays 04:30-06:00, 150-170 s, support 3\n"
    "door_open_interval: weekdays 05:30-07:00, 150-170 s, support 3\n"
    "door_open_interval: weekdays 07:30-09:00, 2-5 min, support 20\n"
    "door_open_interval: weekdays 17:30-19:00, 2-5 min, support 20\n"
    "door_open_interval: weekends 08:30-10:00, 61-89 min, support 8\n"
    "door_open_interval: weekends 13:30-15:00, 45-70 min, support 8\n"
    "door_open_interval: weekends 21:00-22:30, 20-30 min, support 8";

/// `--out <ws> run --scenario scenarios/weather-demo.scn`, asserted green.
void run_weather(const std::string& ws) {
    CliResult run = run_cli("--out " + shell_quote(ws) + " run --scenario " +
                            shell_quote(repo_file("scenarios/weather-demo.scn")));
    REQUIRE(run.exit_code == 0);
}

} // namespace

TEST_CASE("help and usage errors use conventional exit codes") {
    CliResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.output, "audit what a simulated voice assistant"));

    CHECK(run_cli("").exit_code == 2);                       // subcommand required
    CHECK(run_cli("run").exit_code == 2);                    // --scenario required
    CHECK(run_cli("query").exit_code == 2);                  // --question required
    CliResult bad_flag = run_cli("query --question data-recipients --generalize maybe");
    CHECK(bad_flag.exit_code == 2);
    CHECK(contains(bad_flag.output, "--generalize"));
}

TEST_CASE("replaying a scenario prints the conversation and leaves a log") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");
    CliResult run = run_cli("--out " + shell_quote(ws) + " run --scenario " +
                            shell_quote(repo_file("scenarios/weather-demo.scn")));
    CHECK(run.exit_code == 0);
    CHECK(contains(run.output, "[t0001 2024-03-12T08:13:00Z] owner: What is the weather today"));
    CHECK(contains(run.output,
                   "assistant: The forecast for today is sunny with a high of 21 degrees."));
    CHECK(contains(run.output, "logged 4 rows (0 rejected)"));
    CHECK(std::filesystem::exists(ws + "/bindings.log"));
}

TEST_CASE("audit questions are answered from the workspace") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");
    run_weather(ws);

    CliResult ask =
        run_cli("--out " + shell_quote(ws) + " query --question data-recipients");
    CHECK(ask.exit_code == 0);
    CHECK(ask.output == std::string(kWeatherSentence) + "\n");

    CliResult exact = run_cli("--out " + shell_quote(ws) +
                              " query --question data-recipients --generalize off");
    CHECK(exact.exit_code == 0);
    CHECK(contains(exact.output, "at 08:13."));

    CliResult rows =
        run_cli("--out " + shell_quote(ws) + " query --question data-recipients --rows");
    CHECK(rows.exit_code == 0);
    CHECK(rows.output ==
          std::string(kWeatherSentence) +
              "\nuser:geo-location\tgeo-location\tsvc:openweather\tmycroft:weather-skill\t"
              "2024-03-12T08:13:00Z\n");

    CliResult count = run_cli("--out " + shell_quote(ws) +
                              " query --question usage-count --skill mycroft:weather-skill");
    CHECK(count.exit_code == 0);
    CHECK(count.output == "1\n");
}

TEST_CASE("failures land on stderr with distinct exit codes") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");

    CliResult early = run_cli("--out " + shell_quote(ws) + " query --question data-recipients");
    CHECK(early.exit_code == 2);
    CHECK(contains(early.output, "provaud: no bindings.log"));
    CHECK(contains(early.output, "run a scenario first"));

    run_weather(ws);
    CliResult unknown = run_cli("--out " + shell_quote(ws) + " query --question who-called");
    CHECK(unknown.exit_code == 2);
    CHECK(contains(unknown.output,
                   "provaud: unknown question 'who-called'; supported: data-recipients, "
                   "usage-count"));

    CliResult absent = run_cli("--out " + shell_quote(ws) + " run --scenario " +
                               shell_quote(dir.file("missing.scn")));
    CHECK(absent.exit_code == 2);
    CHECK(contains(absent.output, dir.file("missing.scn")));

    std::string blocked = dir.file("blocked");
    std::filesystem::create_directories(blocked + "/bindings.log");
    CliResult storage = run_cli("--out " + shell_quote(blocked) + " run --scenario " +
                                shell_quote(repo_file("scenarios/weather-demo.scn")));
    CHECK(storage.exit_code == 3);
    CHECK(contains(storage.output, "provaud: "));
}

TEST_CASE("the interactive session matches a scripted replay byte for byte") {
    testgen::TempDir dir;
    std::string scripted = dir.file("scripted");
    std::string interactive = dir.file("interactive");
    run_weather(scripted);

    CliResult repl = run_cli("--out " + shell_quote(interactive) + " repl",
                             "What is the weather today\n"
                             "How often did I use the weather skill\n"
                             ":quit\n");
    CHECK(repl.exit_code == 0);
    // Piped stdin means no prompt, just the assistant's replies.
    CHECK(repl.output ==
          "The forecast for today is sunny with a high of 21 degrees.\n"
          "You used the Weather skill 1 time.\n");

    CHECK(slurp(scripted + "/bindings.log") == slurp(interactive + "/bindings.log"));
}

TEST_CASE("the trail exports to a file") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");

    CHECK(run_cli("--out " + shell_quote(ws) + " export").exit_code == 2); // nothing logged yet

    run_weather(ws);
    CliResult exported = run_cli("--out " + shell_quote(ws) + " export");
    CHECK(exported.exit_code == 0);
    CHECK(exported.output == "wrote " + ws + "/trail.provn: 13 nodes, 16 relations\n");
    CHECK(slurp(ws + "/trail.provn").rfind("document\n", 0) == 0);

    CliResult custom = run_cli("--out " + shell_quote(ws) + " export --file " +
                               shell_quote(dir.file("custom.provn")) +
                               " --skill mycroft:garage-door-skill");
    CHECK(custom.exit_code == 0);
    CHECK(slurp(dir.file("custom.provn")) == "document\nendDocument\n");
}

TEST_CASE("the workspace can come from the environment") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");
    run_weather(ws);

    CliResult ask = run_cli("query --question data-recipients", "",
                            "PROVAUD_OUT=" + shell_quote(ws));
    CHECK(ask.exit_code == 0);
    CHECK(ask.output == std::string(kWeatherSentence) + "\n");
}

TEST_CASE("the report digests rows, traces, and recipients") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");
    run_weather(ws);

    CliResult report = run_cli("--out " + shell_quote(ws) + " report");
    CHECK(report.exit_code == 0);
    CHECK(report.output ==
          "rows: 4 (0 rejected, 0 corrupt)\ntraces: 1\n" + std::string(kWeatherSentence) + "\n");
}

TEST_CASE("norms are mined from a month of door logs and enforced") {
    testgen::TempDir dir;
    std::string ws = dir.file("ws");
    CliResult run = run_cli("--out " + shell_quote(ws) + " run --scenario " +
                            shell_quote(repo_file("scenarios/garage-4week.scn")));
    REQUIRE(run.exit_code == 0);

    CliResult premature = run_cli("--out " + shell_quote(ws) + " norms-check");
    CHECK(premature.exit_code == 2);
    CHECK(contains(premature.output, "run norms-mine first"));

    CliResult mined = run_cli("--out " + shell_quote(ws) + " norms-mine");
    CHECK(mined.exit_code == 0);
    CHECK(mined.output == std::string(kGarageNormSummary) + "\n");

    // The training data violates none of its own norms: silence, exit 0.
    CliResult clean = run_cli("--out " + shell_quote(ws) + " norms-check");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.empty());

    // A stricter support threshold prunes everything but the daily commute.
    spit(dir.file("strict.json"), "{\"min_support\": 9}\n");
    CliResult strict = run_cli("--out " + shell_quote(ws) + " norms-mine --config " +
                               shell_quote(dir.file("strict.json")));
    CHECK(strict.exit_code == 0);
    CHECK(strict.output ==
          "door_open_interval: weekdays 07:30-09:00, 2-5 min, support 20\n"
          "door_open_interval: weekdays 17:30-19:00, 2-5 min, support 20\n");

    spit(dir.file("typo.json"), "{\"support\": 9}\n");
    CliResult typo = run_cli("--out " + shell_quote(ws) + " norms-mine --config " +
                             shell_quote(dir.file("typo.json")));
    CHECK(typo.exit_code == 2);
    CHECK(contains(typo.output, "unexpected 'support'"));
}

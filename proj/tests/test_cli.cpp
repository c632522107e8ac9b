#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef GENUSGAUGE_BIN_PATH
#error "GENUSGAUGE_BIN_PATH must point at the CLI binary"
#endif
#ifndef GENUSGAUGE_FIXTURES_PATH
#error "GENUSGAUGE_FIXTURES_PATH must point at the shipped fixture file"
#endif

using json = nlohmann::ordered_json;

namespace {

std::string bin() {
    if (const char* env = std::getenv("GENUSGAUGE_BIN")) return env;
    return GENUSGAUGE_BIN_PATH;
}

struct RunResult {
    std::string out;
    int rc = -1;
};

// Runs the CLI through the shell and captures stdout; stderr is dropped
// unless merge_stderr is set.
RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = "\"" + bin() + "\" " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << content;
}

} // namespace

TEST_CASE("eval prints exact values") {
    CHECK(run("eval G --k 1 --q 1").out == "1/2\n");
    CHECK(run("eval N --k 1 --q 1").out == "1\n");
    CHECK(run("eval I --k 1 --q 1").out == "0\n");
    CHECK(run("eval g --k 2 --q 1 --i 0").out == "1\n");
    CHECK(run("eval P --k 2 --q 1 --i 0").out == "2\n");
    CHECK(run("eval d2k1 --k 2 --s 0").out == "-3/4\n");
    CHECK(run("eval delta --k 6 --q 5").out == "1\n");
    CHECK(run("eval qd --h 2 --e 0 --label t0 --which top").out == "1/2\n");
    CHECK(run("eval theta --k 1 --q 1").out == "-1/2\n");
    CHECK(run("eval h1q --h 2 --e 1").out == "Z x Z/4\n");
    CHECK(run("eval rhoq --h 2 --e 4").out == "-2\n");
    CHECK(run("eval G --k 1 --q 1").rc == 0);
}

TEST_CASE("eval JSON output carries the fixed schema in order") {
    RunResult r = run("eval G --k 1 --q 1 --json");
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "eval");
    CHECK(j["inputs"]["function"] == "G");
    CHECK(j["inputs"]["k"] == 1);
    CHECK(j["inputs"]["q"] == 1);
    CHECK(j["result"]["value"] == "1/2");
    CHECK(j["violated"].empty());
    CHECK(j["certificate"].is_null());
    CHECK(j["exact"] == true);

    auto pos = [&](const char* key) { return r.out.find(std::string("\"") + key + "\""); };
    CHECK(pos("command") < pos("inputs"));
    CHECK(pos("inputs") < pos("result"));
    CHECK(pos("result") < pos("violated"));
    CHECK(pos("violated") < pos("certificate"));
    CHECK(pos("certificate") < pos("exact"));
}

TEST_CASE("eval usage errors exit 2") {
    CHECK(run("eval g --k 2 --q 1").rc == 2);        // missing --i
    CHECK(run("eval bogus --k 1 --q 1").rc == 2);    // unknown function
    CHECK(run("eval").rc == 2);                      // missing function
    CHECK(run("eval G --k 1 --q 1 --zzz 3").rc == 2);
    CHECK(run("").rc == 2);                          // subcommand required
    CHECK(run("nosuchcommand").rc == 2);
    CHECK(run("-h").rc == 2);                        // -h is not help here
    CHECK(run("--help").rc == 0);
    CHECK(run("eval --help").rc == 0);
    CHECK(run("feasible --help").rc == 0);
}

TEST_CASE("eval overflow exits 4") {
    RunResult r = run("eval d2k1 --k 2000000000000000000 --s 0", true);
    CHECK(r.rc == 4);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("feasible text output and exit codes") {
    RunResult r = run("feasible --lens 4,1 --h 2 --e 0");
    CHECK(r.rc == 0);
    CHECK(r.out == "feasible\ncertificate: base_genus=2 rp2_plus=0 rp2_minus=0\n");

    r = run("feasible --lens 4,1 --h 1 --e 0");
    CHECK(r.rc == 3);
    CHECK(r.out ==
          "infeasible\n"
          "violated: h >= N\n"
          "violated: |e| <= 2(h-N)\n"
          "violated: e == 2(h-N) mod 4\n");

    CHECK(run("feasible --sphere --h 1 --e 2").out == "feasible\n");
    CHECK(run("feasible --sphere --h 1 --e 2").rc == 0);
    CHECK(run("feasible --sphere --h 1 --e 0").rc == 3);
    CHECK(run("feasible --delta 1/2 --h 1 --e 0").rc == 0);
    CHECK(run("feasible --delta 1/2 --phi-restriction trivial --h 1 --e 0").rc == 3);
    CHECK(run("feasible --definite --b 0 --l 0 --h 1 --e 2").rc == 0);

    r = run("feasible --spin --sigma 0 --bplus 1 --bminus 1 --h 1 --e 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "feasible\ncertificate: k=1 sigma_Z=0 b2_Z=2\n");
}

TEST_CASE("feasible usage errors exit 2") {
    CHECK(run("feasible --h 1 --e 0").rc == 2);                    // no context
    CHECK(run("feasible --sphere --delta 1/2 --h 1 --e 0").rc == 2); // two contexts
    CHECK(run("feasible --definite --b 1 --h 1 --e 0").rc == 2);   // missing --l
    CHECK(run("feasible --spin --sigma 0 --bplus 1 --h 1 --e 0").rc == 2);
    CHECK(run("feasible --lens 5,1 --h 1 --e 0").rc == 2);         // odd order
    CHECK(run("feasible --lens 4 --h 1 --e 0").rc == 2);           // missing comma
    CHECK(run("feasible --delta 1/4 --h 1 --e 0").rc == 2);        // quarter-integral
    CHECK(run("feasible --sphere --e 0").rc == 2);                 // --h required
}

TEST_CASE("feasible JSON carries verdict, violations, certificate") {
    RunResult r = run("feasible --lens 4,1 --h 3 --e 2 --json");
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "feasible");
    CHECK(j["inputs"]["context"] == "lens");
    CHECK(j["inputs"]["p"] == 4);
    CHECK(j["inputs"]["q"] == 1);
    CHECK(j["inputs"]["h"] == 3);
    CHECK(j["inputs"]["e"] == 2);
    CHECK(j["result"]["feasible"] == true);
    CHECK(j["violated"].empty());
    CHECK(j["certificate"]["base_genus"] == "2");
    CHECK(j["certificate"]["rp2_plus"] == "1");
    CHECK(j["certificate"]["rp2_minus"] == "0");
    CHECK(j["exact"] == true);

    r = run("feasible --lens 4,1 --h 1 --e 0 --json");
    CHECK(r.rc == 3);
    j = json::parse(r.out);
    CHECK(j["result"]["feasible"] == false);
    CHECK(j["violated"].size() == 3);
    CHECK(j["certificate"].is_null());

    // Round trip: rebuild the command from the reported inputs and get the
    // identical report back.
    std::string again = "feasible --lens " + std::to_string(j["inputs"]["p"].get<int>()) +
                        "," + std::to_string(j["inputs"]["q"].get<int>()) + " --h " +
                        std::to_string(j["inputs"]["h"].get<int>()) + " --e " +
                        std::to_string(j["inputs"]["e"].get<int>()) + " --json";
    RunResult r2 = run(again);
    CHECK(r2.rc == 3);
    CHECK(json::parse(r2.out) == j);
}

TEST_CASE("region CSV output") {
    RunResult r = run("region --lens 2,1 --h-max 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "h,e,exact\n1,0,1\n2,-2,1\n2,2,1\n");

    r = run("region --lens 4,1 --h-max 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "h,e,exact\n2,0,1\n");

    r = run("region --sphere --h-max 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "h,e,exact\n1,-2,0\n1,2,0\n2,-4,0\n2,0,0\n2,4,0\n");

    r = run("region --delta 1 --h-max 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "h,e,exact\n2,0,0\n");

    CHECK(run("region --definite --b 1 --l 1 --h-max 1").out ==
          "h,e,exact\n1,-1,0\n1,3,0\n");
}

TEST_CASE("region guards") {
    CHECK(run("region --definite --b 1 --l 0 --h-max 2").rc == 2); // unbounded
    CHECK(run("region --delta 1/4 --h-max 2").rc == 2);
    CHECK(run("region --sphere --h-max 0").rc == 2);
    CHECK(run("region --h-max 2").rc == 2);                        // no context
    RunResult r = run("region --definite --b 1 --l 0 --h-max 2", true);
    CHECK(r.out.find("unbounded") != std::string::npos);
}

TEST_CASE("region JSON rows") {
    RunResult r = run("region --lens 4,1 --h-max 3 --json");
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "region");
    CHECK(j["inputs"]["context"] == "lens");
    CHECK(j["inputs"]["h_max"] == 3);
    json rows = j["result"]["rows"];
    CHECK(rows.size() == 3);
    CHECK(rows[0] == json({{"h", 2}, {"e", 0}, {"exact", true}}));
    CHECK(rows[1] == json({{"h", 3}, {"e", -2}, {"exact", true}}));
    CHECK(rows[2] == json({{"h", 3}, {"e", 2}, {"exact", true}}));
    CHECK(j["exact"] == true);

    r = run("region --sphere --h-max 1 --json");
    j = json::parse(r.out);
    CHECK(j["result"]["rows"].size() == 2);
    CHECK(j["exact"] == false);
}

TEST_CASE("scan runs families and reports counts") {
    RunResult r = run("scan two_g_equals_n --max-p 40 --brute-max 40");
    CHECK(r.rc == 0);
    CHECK(r.out.rfind("checked ", 0) == 0);
    CHECK(r.out.find(", failures 0\n") != std::string::npos);

    CHECK(run("scan carlitz --max 10").rc == 0);
    CHECK(run("scan tdbundle_consistency --max-h 6 --max-e 10").rc == 0);
    CHECK(run("scan congruence_coherence --max-p 60").rc == 0);

    // Same counts and text for any worker split.
    RunResult w1 = run("scan appendix_identities --max 12 --workers 1");
    RunResult w4 = run("scan appendix_identities --max 12 --workers 4");
    CHECK(w1.rc == 0);
    CHECK(w1.out == w4.out);

    CHECK(run("scan nosuch").rc == 2);
    CHECK(run("scan carlitz --max 0").rc == 2);
    CHECK(run("scan").rc == 2);
}

TEST_CASE("scan JSON result") {
    RunResult r = run("scan carlitz --max 10 --json");
    CHECK(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "scan");
    CHECK(j["inputs"]["family"] == "carlitz");
    CHECK(j["inputs"]["max"] == 10);
    CHECK(j["result"]["checked"].get<std::int64_t>() > 0);
    CHECK(j["result"]["failures"] == 0);
    CHECK(j["result"]["first_counterexample"].is_null());
}

TEST_CASE("fixtures replay the shipped corpus clean") {
    RunResult r = run(std::string("fixtures --file \"") + GENUSGAUGE_FIXTURES_PATH + "\"");
    CHECK(r.rc == 0);
    CHECK(r.out.find("replay ") != std::string::npos);
    CHECK(r.out.find(": pass\n") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(r.out.find(" fixtures, 0 mismatches\n") != std::string::npos);

    RunResult j = run(std::string("fixtures --json --file \"") + GENUSGAUGE_FIXTURES_PATH + "\"");
    CHECK(j.rc == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["result"]["mismatches"] == 0);
    CHECK(parsed["result"]["replayed"].get<std::int64_t>() > 0);
    CHECK(parsed["result"]["failures"].empty());
}

TEST_CASE("fixtures failure modes exit 5") {
    CHECK(run("fixtures --file /nonexistent/zzz.txt").rc == 5);

    write_file("cli_fixture_corrupt.txt", "bad line with | only | three fields\n");
    CHECK(run("fixtures --file cli_fixture_corrupt.txt").rc == 5);

    write_file("cli_fixture_badprov.txt", "x | N | k=1 q=1 | 1 | GUESS something\n");
    CHECK(run("fixtures --file cli_fixture_badprov.txt").rc == 5);

    write_file("cli_fixture_badop.txt", "x | nosuchop | k=1 | 1 | TRIVIAL direct\n");
    CHECK(run("fixtures --file cli_fixture_badop.txt").rc == 5);

    write_file("cli_fixture_mismatch.txt",
               "good | N | k=1 q=1 | 1 | TRIVIAL base case\n"
               "bad | N | k=1 q=1 | 7 | TRIVIAL wrong on purpose\n");
    RunResult r = run("fixtures --file cli_fixture_mismatch.txt");
    CHECK(r.rc == 5);
    CHECK(r.out.find("replay good: pass\n") != std::string::npos);
    CHECK(r.out.find("replay bad: MISMATCH expected '7' got '1'\n") != std::string::npos);
    CHECK(r.out.find("replayed 2 fixtures, 1 mismatches\n") != std::string::npos);

    RunResult j = run("fixtures --file cli_fixture_mismatch.txt --json");
    CHECK(j.rc == 5);
    json parsed = json::parse(j.out);
    CHECK(parsed["result"]["replayed"] == 2);
    CHECK(parsed["result"]["mismatches"] == 1);
    CHECK(parsed["result"]["failures"][0]["name"] == "bad");
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string output; // stdout and stderr interleaved
};

// Run the command-line binary named by STARPI_CLI with the given arguments.
RunResult runCli(const std::string& args) {
    const char* bin = std::getenv("STARPI_CLI");
    if (!bin) FAIL("STARPI_CLI is not set; run through ctest or export the binary path");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("check decides single polynomials with documented exit codes", "[cli]") {
    RunResult even = runCli("check --poly \"z1*z2\" --involution star --field F5 --property central");
    CHECK(even.exitCode == 0);
    CHECK(contains(even.output, "central holds for z1*z2"));

    RunResult odd =
        runCli("check --poly \"z1*z2*z3\" --involution star --field F5 --property central");
    CHECK(odd.exitCode == 1);
    CHECK(contains(odd.output, "central fails for z1*z2*z3"));
    CHECK(contains(odd.output, "witness:"));

    RunResult syntax = runCli("check --poly \"y1*(\" --involution star --field F5");
    CHECK(syntax.exitCode == 2);

    RunResult identity = runCli("check --poly \"y1*y2-y2*y1\" --involution s --field F3");
    CHECK(identity.exitCode == 0);
    CHECK(contains(identity.output, "identity holds"));

    CHECK(runCli("check --poly \"y1\" --involution star").exitCode == 2); // missing field
    CHECK(runCli("check --poly \"y1\" --involution star --field F4").exitCode == 2);
    CHECK(runCli("check --poly \"y1\" --involution q --field F3").exitCode == 2);
    CHECK(runCli("check --poly \"y1\" --involution star --field F3 --mode generic-char0")
              .exitCode == 2);
}

TEST_CASE("check emits a json verdict with the parsed polynomial", "[cli]") {
    RunResult r = runCli(
        "check --poly \"z1*z2*z3\" --involution star --field F5 --property central --output json");
    CHECK(r.exitCode == 1);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["command"] == "check");
    CHECK(j["field"] == "F5");
    CHECK(j["mode"] == "finite-exhaustive");
    CHECK(j["involution"] == "star");
    CHECK(j["property"] == "central");
    CHECK(j["poly"] == "z1*z2*z3");
    CHECK(j["holds"] == false);
    CHECK(j.contains("witness"));
}

TEST_CASE("verify-theorem runs suites and maps outcomes to exit codes", "[cli]") {
    RunResult good = runCli("verify-theorem IdSFinite --field F3 --max-degree 3");
    CHECK(good.exitCode == 0);
    CHECK(contains(good.output, "IdSFinite over F3 (finite-exhaustive)"));
    CHECK(contains(good.output, "verified:"));
    CHECK(contains(good.output, "0 failed"));

    RunResult refuted = runCli("verify-theorem BasisStarFinite --field F3");
    CHECK(refuted.exitCode == 1);
    CHECK(contains(refuted.output, "REFUTED"));
    CHECK(contains(refuted.output, "slice z1:3"));

    CHECK(runCli("verify-theorem Nope --field F3").exitCode == 2);
    CHECK(runCli("verify-theorem CentralStarChar0 --field F3").exitCode == 2);
    CHECK(runCli("verify-theorem IdStarFinite --field Q").exitCode == 2);
}

TEST_CASE("verify-theorem json reports are identical across runs", "[cli]") {
    const std::string args = "verify-theorem IdSInfinite --field Q --max-degree 2 --output json";
    RunResult a = runCli(args);
    RunResult b = runCli(args);
    REQUIRE(a.exitCode == 0);
    REQUIRE(b.exitCode == 0);
    nlohmann::json ja = nlohmann::json::parse(a.output);
    nlohmann::json jb = nlohmann::json::parse(b.output);
    CHECK(ja.contains("elapsed_ms"));
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja.dump() == jb.dump());
    CHECK(ja["theorem"] == "IdSInfinite");
    CHECK(ja["mode"] == "generic-char0");
    CHECK(ja["verified"] == true);
    CHECK(ja["checks"].is_array());
}

TEST_CASE("central-space tabulates subspace dimensions by slice", "[cli]") {
    RunResult star =
        runCli("central-space --field F3 --involution star --max-degree 2 --output json");
    REQUIRE(star.exitCode == 0);
    nlohmann::json j = nlohmann::json::parse(star.output);
    CHECK(j["command"] == "central-space");
    REQUIRE(j["slices"].is_array());
    REQUIRE(j["slices"].size() == 8); // constants + 7 shapes of total degree <= 2

    CHECK(j["slices"][0]["slice"] == "(empty)");
    CHECK(j["slices"][0]["central_dim"] == 1);
    CHECK(j["slices"][0]["identity_dim"] == 0);

    bool sawZZ = false;
    for (auto& row : j["slices"])
        if (row["slice"] == "z1:1 z2:1") {
            sawZZ = true;
            CHECK(row["dim"] == 2);
            CHECK(row["identity_dim"] == 1);
            CHECK(row["central_dim"] == 2);
            CHECK(row["quotient_dim"] == 1);
            CHECK(row["basis_words"] == 1);
        }
    CHECK(sawZZ);

    RunResult s = runCli("central-space --field F3 --involution s --max-degree 1 --output json");
    REQUIRE(s.exitCode == 0);
    nlohmann::json js = nlohmann::json::parse(s.output);
    for (auto& row : js["slices"]) {
        CHECK(!row.contains("basis_words")); // no catalogued family for s
        if (row["slice"] == "y1:1") CHECK(row["central_dim"] == 1);
        if (row["slice"] == "z1:1") CHECK(row["central_dim"] == 0);
    }

    RunResult constantsOnly =
        runCli("central-space --field F3 --involution star --max-degree 0 --output json");
    REQUIRE(constantsOnly.exitCode == 0);
    nlohmann::json jc = nlohmann::json::parse(constantsOnly.output);
    REQUIRE(jc["slices"].size() == 1);
    CHECK(jc["slices"][0]["central_dim"] == 1);
}

TEST_CASE("catalog-dump lists every statement with its generators", "[cli]") {
    RunResult text = runCli("catalog-dump");
    REQUIRE(text.exitCode == 0);
    for (const char* name :
         {"IdStarInfinite", "IdStarFinite", "IdSInfinite", "IdSFinite", "CentralStarChar0",
          "CentralStarInfCharP", "CentralStarFinite", "CentralS", "BasisStarInfinite",
          "BasisStarFinite", "CommutationLemma", "EvenZLemma", "PowerPQLemma", "WrapIdentity"})
        CHECK(contains(text.output, name));
    CHECK(contains(text.output, "{q}")); // parameters stay symbolic without a field

    RunResult expanded = runCli("catalog-dump --field F3");
    REQUIRE(expanded.exitCode == 0);
    CHECK(contains(expanded.output, "z1^3-z1")); // q expands to the field size

    RunResult json = runCli("catalog-dump --output json");
    REQUIRE(json.exitCode == 0);
    nlohmann::json j = nlohmann::json::parse(json.output);
    REQUIRE(j.is_array());
    CHECK(j.size() == 14);
    CHECK(j[0].contains("statement"));
    CHECK(j[0].contains("generators"));
}

TEST_CASE("usage errors exit with code 2 and help exits clean", "[cli]") {
    CHECK(runCli("").exitCode == 2);                 // a subcommand is required
    CHECK(runCli("frobnicate").exitCode == 2);       // unknown subcommand
    CHECK(runCli("check --poly \"y1\"").exitCode == 2); // missing required flags
    CHECK(runCli("--help").exitCode == 0);
    CHECK(runCli("check --help").exitCode == 0);
}

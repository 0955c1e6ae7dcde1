#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "starpi/suites.hpp"

using namespace starpi;

namespace {

const FieldDescriptor* Q = FieldDescriptor::rational();
const FieldDescriptor* F3 = FieldDescriptor::finite(3);
const FieldDescriptor* F5 = FieldDescriptor::finite(5);
const FieldDescriptor* F7 = FieldDescriptor::finite(7);

SuiteOptions over(const FieldDescriptor* f) {
    SuiteOptions o;
    o.field = f;
    return o;
}

std::vector<std::string> namesWithStatus(const VerificationReport& r, CheckStatus s) {
    std::vector<std::string> out;
    for (auto& c : r.checks)
        if (c.status == s) out.push_back(c.name);
    return out;
}

} // namespace

TEST_CASE("canonical slices list one representative per exponent shape", "[suites]") {
    std::vector<MultiDegree> slices = canonicalSlicesUpTo(4);
    CHECK(slices.size() == 37);

    std::map<unsigned, int> byTotal;
    for (auto& md : slices) ++byTotal[md.total()];
    CHECK(byTotal[1] == 2);
    CHECK(byTotal[2] == 5);
    CHECK(byTotal[3] == 10);
    CHECK(byTotal[4] == 20);

    CHECK(slices[0].str() == "z1:1");
    CHECK(slices[1].str() == "y1:1");
    CHECK(slices[2].str() == "z1:2");
    CHECK(slices[3].str() == "z1:1 z2:1");
    CHECK(slices[4].str() == "y1:1 z1:1");
    CHECK(slices[5].str() == "y1:2");
    CHECK(slices[6].str() == "y1:1 y2:1");

    for (auto& md : slices) {
        unsigned prev = ~0u;
        std::uint32_t expect = 1;
        for (auto& [idx, exp] : md.y) {
            CHECK(idx == expect++);
            CHECK(exp >= 1);
            CHECK(exp <= prev);
            prev = exp;
        }
        prev = ~0u;
        expect = 1;
        for (auto& [idx, exp] : md.z) {
            CHECK(idx == expect++);
            CHECK(exp >= 1);
            CHECK(exp <= prev);
            prev = exp;
        }
    }

    // The enumeration is deterministic.
    std::vector<MultiDegree> again = canonicalSlicesUpTo(4);
    REQUIRE(again.size() == slices.size());
    for (std::size_t i = 0; i < slices.size(); ++i) CHECK(again[i].str() == slices[i].str());

    CHECK(canonicalSlicesUpTo(2).size() == 7);
}

TEST_CASE("suites refuse fields and modes that cannot decide the statement", "[suites]") {
    CHECK_THROWS_AS(buildSuiteReport(TheoremId::IdStarInfinite, SuiteOptions{}),
                    MissingParameterError);

    // A statement about finite coefficient fields has no exhaustive check
    // over the rationals.
    CHECK_THROWS_AS(buildSuiteReport(TheoremId::IdStarFinite, over(Q)), ModeFieldMismatchError);

    // Over F3 the natural mode is finite-exhaustive, which says nothing
    // about characteristic-zero or infinite coefficient fields.
    CHECK_THROWS_AS(buildSuiteReport(TheoremId::CentralStarChar0, over(F3)),
                    ModeFieldMismatchError);
    CHECK_THROWS_AS(buildSuiteReport(TheoremId::CentralStarInfCharP, over(F3)),
                    ModeFieldMismatchError);
    CHECK_THROWS_AS(buildSuiteReport(TheoremId::IdStarInfinite, over(F3)),
                    ModeFieldMismatchError);

    // The generic positive-characteristic mode does decide those statements
    // with finite scalars.
    SuiteOptions generic = over(F3);
    generic.mode = EvalMode::GenericCharP;
    generic.maxTotalDegree = 2;
    CHECK(buildSuiteReport(TheoremId::CentralStarInfCharP, generic).verified());
    CHECK(buildSuiteReport(TheoremId::IdStarInfinite, generic).verified());

    CHECK(modeDecidesRegime(EvalMode::FiniteExhaustive, FieldRegime::Any));
    CHECK(modeDecidesRegime(EvalMode::GenericCharP, FieldRegime::Infinite));
    CHECK(!modeDecidesRegime(EvalMode::GenericCharP, FieldRegime::Char0));
    CHECK(!modeDecidesRegime(EvalMode::FiniteExhaustive, FieldRegime::Infinite));
}

TEST_CASE("report text and json serialize with a fixed layout", "[suites][report]") {
    VerificationReport r;
    r.theorem = "Demo";
    r.field = "F3";
    r.mode = "finite-exhaustive";
    r.checks.push_back({"first", CheckStatus::Pass, "", ""});
    r.checks.push_back({"second", CheckStatus::Warn, "nearly there", ""});
    r.checks.push_back({"third", CheckStatus::Fail, "dims 2 vs 3", "bad point"});
    r.elapsedMs = 7;

    CHECK(!r.verified());
    CHECK(r.countOf(CheckStatus::Pass) == 1);
    CHECK(r.countOf(CheckStatus::Warn) == 1);
    CHECK(r.countOf(CheckStatus::Fail) == 1);
    CHECK(r.countOf(CheckStatus::Skip) == 0);

    CHECK(r.textReport() ==
          "Demo over F3 (finite-exhaustive)\n"
          "  [pass] first\n"
          "  [warn] second\n"
          "         nearly there\n"
          "  [fail] third\n"
          "         dims 2 vs 3\n"
          "         witness: bad point\n"
          "REFUTED: 1 passed, 1 warned, 1 failed, 0 skipped (7 ms)\n");

    nlohmann::ordered_json j = r.toJson();
    CHECK(j["theorem"] == "Demo");
    CHECK(j["verified"] == false);
    CHECK(j["checks"].size() == 3);
    CHECK(j["checks"][0]["name"] == "first");
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(!j["checks"][0].contains("detail"));
    CHECK(j["checks"][2]["witness"] == "bad point");
    CHECK(j["elapsed_ms"] == 7);
    CHECK(!r.toJson(false).contains("elapsed_ms"));
    CHECK(j.dump() ==
          R"({"theorem":"Demo","field":"F3","mode":"finite-exhaustive","verified":false,)"
          R"("checks":[{"name":"first","status":"pass"},)"
          R"({"name":"second","status":"warn","detail":"nearly there"},)"
          R"({"name":"third","status":"fail","detail":"dims 2 vs 3","witness":"bad point"}],)"
          R"("elapsed_ms":7})");

    r.checks.pop_back();
    CHECK(r.verified());
    CHECK(r.textReport().find("verified: 1 passed, 1 warned") != std::string::npos);
}

TEST_CASE("identity suite fills every slice over a small finite field", "[suites]") {
    VerificationReport r = buildSuiteReport(TheoremId::IdSFinite, over(F3));
    CHECK(r.theorem == "IdSFinite");
    CHECK(r.field == "F3");
    CHECK(r.mode == "finite-exhaustive");
    CHECK(r.verified());
    CHECK(r.countOf(CheckStatus::Pass) == r.checks.size());
    CHECK(r.checks.size() == 9 + 37); // one check per generator, one per slice
    CHECK(r.checks.front().name.find("vanishes identically") != std::string::npos);
    CHECK(r.checks.back().name == "slice y1:1 y2:1 y3:1 y4:1: identity subspace is witnessed");
    for (auto& c : r.checks)
        if (c.name.rfind("slice ", 0) == 0) CHECK(c.detail.find("witnessed") != std::string::npos);
}

TEST_CASE("central suites close every slice without shortfall", "[suites]") {
    VerificationReport overQ = buildSuiteReport(TheoremId::CentralStarChar0, over(Q));
    CHECK(overQ.verified());
    CHECK(overQ.countOf(CheckStatus::Warn) == 0);
    CHECK(overQ.checks.size() == 4 + 37); // two checks per generator, one per slice

    VerificationReport sFinite = buildSuiteReport(TheoremId::CentralS, over(F3));
    CHECK(sFinite.verified());
    CHECK(sFinite.countOf(CheckStatus::Warn) == 0);
    CHECK(sFinite.checks.size() == 2 + 37);
    CHECK(sFinite.checks[0].name == "generator 1 (y1) evaluates centrally");
    CHECK(sFinite.checks[1].name == "generator 1 (y1) takes a nonzero value");
}

TEST_CASE("finite basis family fails exactly where an exponent reaches the field size",
          "[suites]") {
    VerificationReport r3 = buildSuiteReport(TheoremId::BasisStarFinite, over(F3));
    CHECK(!r3.verified());
    std::vector<std::string> failed = namesWithStatus(r3, CheckStatus::Fail);
    std::vector<std::string> expected = {
        "slice z1:3: listed words complement the identities",
        "slice z1:4: listed words complement the identities",
        "slice z1:3 z2:1: listed words complement the identities",
        "slice y1:1 z1:3: listed words complement the identities",
        "slice y1:3 z1:1: listed words complement the identities",
    };
    CHECK(failed == expected);
    CHECK(r3.countOf(CheckStatus::Pass) == 32);

    // Below total degree 3 no exponent can reach 3, so every slice passes.
    SuiteOptions low = over(F3);
    low.maxTotalDegree = 2;
    CHECK(buildSuiteReport(TheoremId::BasisStarFinite, low).verified());

    // Over F5 no exponent within total degree 4 reaches 5 either.
    VerificationReport r5 = buildSuiteReport(TheoremId::BasisStarFinite, over(F5));
    CHECK(r5.verified());
    CHECK(r5.countOf(CheckStatus::Pass) == 37);

    CHECK(buildSuiteReport(TheoremId::BasisStarInfinite, over(Q)).verified());
}

TEST_CASE("lemma suites verify their catalogued relations", "[suites]") {
    CHECK(buildSuiteReport(TheoremId::EvenZLemma, over(F3)).verified());
    CHECK(buildSuiteReport(TheoremId::PowerPQLemma, over(F3)).verified());
    CHECK(buildSuiteReport(TheoremId::PowerPQLemma, over(FieldDescriptor::finite(9))).verified());
    CHECK(buildSuiteReport(TheoremId::CommutationLemma, over(F7)).verified());

    VerificationReport wrap = buildSuiteReport(TheoremId::WrapIdentity, over(F3));
    CHECK(wrap.verified());
    CHECK(wrap.countOf(CheckStatus::Pass) == wrap.checks.size());
    bool sawClosure = false;
    for (auto& c : wrap.checks)
        if (c.name.find("two-sided closure") != std::string::npos) sawClosure = true;
    CHECK(sawClosure);
}

TEST_CASE("suite reports are identical across thread counts", "[suites]") {
    SuiteOptions one = over(Q);
    one.maxTotalDegree = 3;
    one.threads = 1;
    SuiteOptions three = one;
    three.threads = 3;
    std::string a = buildSuiteReport(TheoremId::IdSInfinite, one).toJson(false).dump();
    std::string b = buildSuiteReport(TheoremId::IdSInfinite, three).toJson(false).dump();
    CHECK(a == b);
}

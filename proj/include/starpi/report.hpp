#ifndef STARPI_REPORT_HPP
#define STARPI_REPORT_HPP

// Verification reports: a named list of checks with four-valued statuses,
// rendered as indented text or as deterministic JSON.  A report is verified
// when no check failed; warnings mark checks whose bounded search stopped
// short of the full target without contradicting it, and skips mark checks
// that do not apply under the requested parameters.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace starpi {

enum class CheckStatus { Pass, Warn, Fail, Skip };

inline const char* checkStatusName(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Warn: return "warn";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  // dimensions or counts backing the verdict
    std::string witness; // first counterexample, when one exists
};

struct VerificationReport {
    std::string theorem; // statement identifier from the catalog
    std::string field;
    std::string mode;
    std::vector<CheckEntry> checks;
    long long elapsedMs = 0;

    std::size_t countOf(CheckStatus s) const {
        std::size_t n = 0;
        for (auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    bool verified() const { return countOf(CheckStatus::Fail) == 0; }

    std::string textReport() const {
        std::string out = theorem + " over " + field + " (" + mode + ")\n";
        for (auto& c : checks) {
            out += "  [";
            out += checkStatusName(c.status);
            out += "] " + c.name + "\n";
            if (!c.detail.empty()) out += "         " + c.detail + "\n";
            if (!c.witness.empty()) out += "         witness: " + c.witness + "\n";
        }
        out += verified() ? "verified" : "REFUTED";
        out += ": " + std::to_string(countOf(CheckStatus::Pass)) + " passed, " +
               std::to_string(countOf(CheckStatus::Warn)) + " warned, " +
               std::to_string(countOf(CheckStatus::Fail)) + " failed, " +
               std::to_string(countOf(CheckStatus::Skip)) + " skipped (" +
               std::to_string(elapsedMs) + " ms)\n";
        return out;
    }

    // Key order and entry order are fixed, so equal reports serialize to
    // identical bytes; the elapsed time is the only nondeterministic field
    // and can be left out.
    nlohmann::ordered_json toJson(bool withElapsed = true) const {
        nlohmann::ordered_json j;
        j["theorem"] = theorem;
        j["field"] = field;
        j["mode"] = mode;
        j["verified"] = verified();
        j["checks"] = nlohmann::ordered_json::array();
        for (auto& c : checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["status"] = checkStatusName(c.status);
            if (!c.detail.empty()) e["detail"] = c.detail;
            if (!c.witness.empty()) e["witness"] = c.witness;
            j["checks"].push_back(std::move(e));
        }
        if (withElapsed) j["elapsed_ms"] = elapsedMs;
        return j;
    }
};

} // namespace starpi

#endif // STARPI_REPORT_HPP

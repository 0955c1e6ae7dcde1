// Command-line front end: decide identity/centrality of one polynomial, run
// the catalogued verification suites, tabulate per-slice subspace dimensions,
// and dump the statement catalog — as text or JSON.
//
// Exit codes: 0 = the queried property holds / every check passed (warnings
// included), 1 = the property fails or a check was refuted, 2 = usage or
// configuration error (bad syntax, unknown names, field/mode mismatch).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starpi/parser.hpp"
#include "starpi/suites.hpp"

using namespace starpi;

namespace {

InvolutionKind involutionFromName(const std::string& s) {
    if (s == "star") return InvolutionKind::Star;
    if (s == "s") return InvolutionKind::S;
    throw Error("unknown involution: " + s + " (expected star or s)");
}

EvalMode resolveMode(const std::string& name, const FieldDescriptor* F) {
    if (name.empty()) return defaultMode(F);
    std::optional<EvalMode> m = modeByName(name);
    if (!m)
        throw Error("unknown evaluation mode: " + name +
                    " (expected finite-exhaustive, generic-char0 or generic-charp)");
    requireModeField(*m, F);
    return *m;
}

void emitJson(const nlohmann::ordered_json& j) { std::fputs((j.dump(2) + "\n").c_str(), stdout); }

struct CommandConfig {
    std::string field;
    std::string mode;
    std::string output = "text";
    std::string involution;
    std::string property = "identity";
    std::string poly;
    std::string theorem;
    unsigned maxDegree = 4;
    unsigned substDegree = 0; // 0 = keep the built-in default
    unsigned substSupport = 0;
};

int runCheck(const CommandConfig& cfg) {
    const FieldDescriptor* F = FieldDescriptor::byName(cfg.field);
    EvalMode mode = resolveMode(cfg.mode, F);
    InvolutionKind kind = involutionFromName(cfg.involution);
    StarPolynomial f = parsePolynomial(cfg.poly, F);

    CheckResult r = cfg.property == "identity" ? checkIdentity(f, kind, mode)
                                               : checkCentral(f, kind, mode);

    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["command"] = "check";
        j["field"] = F->name();
        j["mode"] = modeName(mode);
        j["involution"] = involutionName(kind);
        j["property"] = cfg.property;
        j["poly"] = f.str();
        j["holds"] = r.holds;
        if (!r.holds && !r.witness.empty()) j["witness"] = r.witness;
        emitJson(j);
    } else {
        std::string line = cfg.property + (r.holds ? " holds for " : " fails for ") + f.str() +
                           " (involution " + involutionName(kind) + ", " + F->name() + ", " +
                           modeName(mode) + ")\n";
        std::fputs(line.c_str(), stdout);
        if (!r.holds && !r.witness.empty())
            std::fputs(("witness: " + r.witness + "\n").c_str(), stdout);
    }
    return r.holds ? 0 : 1;
}

int runVerifyTheorem(const CommandConfig& cfg) {
    std::optional<TheoremId> id = theoremByName(cfg.theorem);
    if (!id) throw Error("unknown statement: " + cfg.theorem);

    SuiteOptions opts;
    opts.field = FieldDescriptor::byName(cfg.field);
    if (!cfg.mode.empty()) {
        std::optional<EvalMode> m = modeByName(cfg.mode);
        if (!m)
            throw Error("unknown evaluation mode: " + cfg.mode +
                        " (expected finite-exhaustive, generic-char0 or generic-charp)");
        opts.mode = *m;
    }
    opts.maxTotalDegree = cfg.maxDegree;
    if (cfg.substDegree > 0) opts.strategy.maxSubstDegree = cfg.substDegree;
    if (cfg.substSupport > 0) opts.strategy.maxSupport = cfg.substSupport;

    VerificationReport rep = buildSuiteReport(*id, opts);
    if (cfg.output == "json")
        emitJson(rep.toJson());
    else
        std::fputs(rep.textReport().c_str(), stdout);
    return rep.verified() ? 0 : 1;
}

int runCentralSpace(const CommandConfig& cfg) {
    const FieldDescriptor* F = FieldDescriptor::byName(cfg.field);
    EvalMode mode = resolveMode(cfg.mode, F);
    InvolutionKind kind = involutionFromName(cfg.involution);

    // The degree-0 slice (the constants) comes first: it always carries the
    // one-dimensional central line of scalars.
    std::vector<MultiDegree> slices;
    slices.emplace_back();
    for (MultiDegree& md : canonicalSlicesUpTo(cfg.maxDegree)) slices.push_back(std::move(md));

    // A catalogued quotient-basis family exists for the diagonal-swap
    // involution only; its word counts accompany the dimension table there.
    std::optional<TheoremId> basisId;
    if (kind == InvolutionKind::Star)
        basisId = mode == EvalMode::FiniteExhaustive ? TheoremId::BasisStarFinite
                                                     : TheoremId::BasisStarInfinite;
    CatalogParams params{F, std::nullopt, std::nullopt};

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    std::string text = "subspace dimensions by slice over " + F->name() + " (" + modeName(mode) +
                       ", involution " + std::string(involutionName(kind)) + ", total degree <= " +
                       std::to_string(cfg.maxDegree) + ")\n";
    for (const MultiDegree& slice : slices) {
        SliceSpace ids = identitySpaceOfSlice(slice, kind, mode, F);
        SliceSpace central = centralSpaceOfSlice(slice, kind, mode, F);
        std::size_t dim = ids.universe.size();
        std::size_t idDim = ids.space.rank();
        std::size_t centralDim = central.space.rank();
        std::optional<std::size_t> basisCount;
        if (basisId) basisCount = basisWordsForSlice(*basisId, slice, params).size();

        nlohmann::ordered_json row;
        row["slice"] = slice.str();
        row["dim"] = dim;
        row["identity_dim"] = idDim;
        row["central_dim"] = centralDim;
        row["quotient_dim"] = dim - idDim;
        if (basisCount) row["basis_words"] = *basisCount;
        rows.push_back(std::move(row));

        text += "  slice " + slice.str() + ": dim " + std::to_string(dim) + ", identity " +
                std::to_string(idDim) + ", central " + std::to_string(centralDim) + ", quotient " +
                std::to_string(dim - idDim);
        if (basisCount) text += ", basis words " + std::to_string(*basisCount);
        text += "\n";
    }

    if (cfg.output == "json") {
        nlohmann::ordered_json j;
        j["command"] = "central-space";
        j["field"] = F->name();
        j["mode"] = modeName(mode);
        j["involution"] = involutionName(kind);
        j["max_degree"] = cfg.maxDegree;
        j["slices"] = std::move(rows);
        emitJson(j);
    } else {
        std::fputs(text.c_str(), stdout);
    }
    return 0;
}

int runCatalogDump(const CommandConfig& cfg) {
    CatalogParams params;
    if (!cfg.field.empty()) params.field = FieldDescriptor::byName(cfg.field);

    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    std::string text;
    for (const CatalogEntry& entry : catalogEntries()) {
        // Parameterised exponents expand once a compatible field fixes q and
        // p; otherwise the raw placeholder templates are shown.
        std::vector<std::string> gens;
        bool expanded = false;
        if (params.field) {
            try {
                gens = generatorTextFor(entry.id, params);
                expanded = true;
            } catch (const Error&) {
            }
        }
        if (!expanded)
            for (const char* t : entry.templates) gens.emplace_back(t);

        nlohmann::ordered_json e;
        e["id"] = theoremName(entry.id);
        e["involution"] = involutionName(entry.kind);
        e["regime"] = regimeName(entry.regime);
        e["property"] = entry.property == CatalogProperty::Identity ? "identity" : "central";
        e["statement"] = entry.statement;
        e["generators"] = gens;
        out.push_back(std::move(e));

        text += std::string(theoremName(entry.id)) + " (" + involutionName(entry.kind) + ", " +
                regimeName(entry.regime) + " coefficients, " +
                (entry.property == CatalogProperty::Identity ? "identity" : "central") +
                " statement)\n";
        text += "  " + std::string(entry.statement) + "\n";
        for (const std::string& g : gens) text += "    " + g + "\n";
    }

    if (cfg.output == "json")
        emitJson(out);
    else
        std::fputs(text.c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CommandConfig cfg;
    CLI::App app{"Exact decision procedures for identities and central polynomials of "
                 "2x2 upper-triangular matrices under their two involutions"};
    app.require_subcommand(1);

    auto addOutput = [&](CLI::App* c) {
        c->add_option("--output", cfg.output, "report format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto addFieldMode = [&](CLI::App* c, bool fieldRequired) {
        auto* f = c->add_option("--field", cfg.field,
                                "coefficient field (Q, F3, F5, F7, F9, F25, F27, F49)");
        if (fieldRequired) f->required();
        c->add_option("--mode", cfg.mode,
                      "evaluation mode: finite-exhaustive, generic-char0 or generic-charp "
                      "(default: the field's natural mode)");
    };

    CLI::App* check = app.add_subcommand(
        "check", "Decide whether one polynomial is an identity or a central polynomial");
    check->add_option("--poly", cfg.poly, "the polynomial, e.g. \"z1*z2 - y1^2\"")->required();
    check->add_option("--involution", cfg.involution, "involution: star or s")
        ->required()
        ->check(CLI::IsMember({"star", "s"}));
    check->add_option("--property", cfg.property, "property to decide (default identity)")
        ->check(CLI::IsMember({"identity", "central"}));
    addFieldMode(check, true);
    addOutput(check);

    CLI::App* verify =
        app.add_subcommand("verify-theorem", "Run the full verification suite of one statement");
    verify->add_option("theorem", cfg.theorem, "statement identifier (see catalog-dump)")
        ->required();
    addFieldMode(verify, true);
    verify->add_option("--max-degree", cfg.maxDegree,
                       "total-degree bound for the slice checks (default 4)");
    verify->add_option("--subst-degree", cfg.substDegree,
                       "override the substitution-image degree cap");
    verify->add_option("--subst-support", cfg.substSupport,
                       "override the substitution-image support cap");
    addOutput(verify);

    CLI::App* central = app.add_subcommand(
        "central-space", "Tabulate identity/central subspace dimensions slice by slice");
    central->add_option("--involution", cfg.involution, "involution: star or s")
        ->required()
        ->check(CLI::IsMember({"star", "s"}));
    addFieldMode(central, true);
    central->add_option("--max-degree", cfg.maxDegree, "total-degree bound (default 4)");
    addOutput(central);

    CLI::App* dump =
        app.add_subcommand("catalog-dump", "Print every catalogued statement and generator list");
    addFieldMode(dump, false);
    addOutput(dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit clean; usage errors exit 2
    }

    try {
        if (app.got_subcommand(check)) return runCheck(cfg);
        if (app.got_subcommand(verify)) return runVerifyTheorem(cfg);
        if (app.got_subcommand(central)) return runCentralSpace(cfg);
        return runCatalogDump(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Acceptance gate: ten exact end-to-end criteria, one [PASS]/[FAIL] line
// each, with indented diagnosis lines where a criterion needs explanation.
// Everything is decided with tolerance zero; the exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "starpi/parser.hpp"
#include "starpi/suites.hpp"

using namespace starpi;

namespace {

const FieldDescriptor* Q = FieldDescriptor::rational();
const FieldDescriptor* F3 = FieldDescriptor::finite(3);
const FieldDescriptor* F5 = FieldDescriptor::finite(5);
const FieldDescriptor* F9 = FieldDescriptor::finite(9);

int failures = 0;
std::vector<std::string> notes;

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int n, bool pass, const std::string& text, double seconds) {
    std::printf("[%s] criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", n, text.c_str(),
                seconds);
    for (const std::string& d : notes) std::printf("        %s\n", d.c_str());
    notes.clear();
    if (!pass) ++failures;
}

// Exhaustively verify that g vanishes at every symmetric/skew assignment.
bool vanishesExhaustively(const StarPolynomial& g, InvolutionKind kind, const FieldDescriptor* F) {
    bool all = true;
    forEachAssignment(g, kind, F, [&](const Assignment<FieldElement>& A) {
        if (!evaluate(g, A).isZero()) {
            all = false;
            return false;
        }
        return true;
    });
    return all;
}

// Evaluate a commutative polynomial at a point.
FieldElement evalComm(const CommPolynomial& p, const std::map<CommVar, FieldElement>& pt,
                      const FieldDescriptor* F) {
    FieldElement acc = F->zero();
    for (auto& [m, c] : p.terms()) {
        FieldElement t = c;
        for (auto& [v, e] : m.exponents()) t = t * pt.at(v).pow(e);
        acc = acc + t;
    }
    return acc;
}

// The parameter point of a concrete assignment, matching the indeterminate
// layout of the generic assignment for the same variables and involution.
std::map<CommVar, FieldElement> pointOf(const Assignment<FieldElement>& A,
                                        const std::set<Variable>& vars, InvolutionKind kind) {
    std::map<CommVar, FieldElement> pt;
    for (const Variable& v : vars) {
        const UT2Matrix<FieldElement>& m = A.at(v);
        if (v.kind == VarKind::Y) {
            pt[commA(v.index)] = m.e11;
            if (kind == InvolutionKind::Star) pt[commB(v.index)] = m.e12;
        } else {
            if (kind == InvolutionKind::Star) {
                pt[commC(v.index)] = m.e11;
            } else {
                pt[commB(v.index)] = m.e11;
                pt[commC(v.index)] = m.e12;
            }
        }
    }
    return pt;
}

void criterion1() {
    auto t0 = Clock::now();
    bool pass = true;
    std::size_t count = 0;
    for (const FieldDescriptor* F : {F3, F5}) {
        std::vector<StarPolynomial> gens =
            generatorsFor(TheoremId::IdStarFinite, {F, std::nullopt, std::nullopt});
        if (gens.size() != 9) {
            pass = false;
            notes.push_back("expected 9 generators over " + F->name() + ", found " +
                            std::to_string(gens.size()));
        }
        count = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!vanishesExhaustively(gens[i], InvolutionKind::Star, F)) {
                pass = false;
                notes.push_back("generator " + std::to_string(i + 1) + " over " + F->name() +
                                " takes a nonzero value");
            }
    }
    line(1, pass,
         "all " + std::to_string(count) +
             " finite-field star-identity generators vanish on every exhaustive "
             "assignment over F3 and over F5",
         secondsSince(t0));
}

void criterion2() {
    auto t0 = Clock::now();
    bool pass = true;
    for (TheoremId id : {TheoremId::IdStarInfinite, TheoremId::IdSInfinite}) {
        InvolutionKind kind = catalogEntry(id).kind;
        std::vector<StarPolynomial> overQ = generatorsFor(id, {Q, std::nullopt, std::nullopt});
        std::vector<StarPolynomial> overF3 = generatorsFor(id, {F3, std::nullopt, std::nullopt});
        if (overQ.size() != 4) {
            pass = false;
            notes.push_back(std::string(theoremName(id)) + ": expected 4 generators, found " +
                            std::to_string(overQ.size()));
        }
        for (std::size_t i = 0; i < overQ.size(); ++i) {
            if (!evaluate(overQ[i], genericAssignment(overQ[i], kind)).isZero()) {
                pass = false;
                notes.push_back(std::string(theoremName(id)) + " generator " +
                                std::to_string(i + 1) + " has a nonzero generic value over Q");
            }
            if (!evaluate(overF3[i], genericAssignment(overF3[i], kind)).isZero()) {
                pass = false;
                notes.push_back(std::string(theoremName(id)) + " generator " +
                                std::to_string(i + 1) +
                                " has a nonzero generic value in characteristic 3");
            }
        }
    }
    line(2, pass,
         "the 4 star-identity and 4 s-identity generators of the infinite regimes "
         "evaluate to the zero matrix generically over Q and in characteristic 3",
         secondsSince(t0));
}

void criterion3() {
    auto t0 = Clock::now();
    bool pass = true;
    std::size_t checks = 0;
    auto central = [&](const char* text, const FieldDescriptor* F, InvolutionKind kind,
                       EvalMode mode) {
        StarPolynomial f = parsePolynomial(text, F);
        ++checks;
        if (!checkCentral(f, kind, mode).holds) {
            pass = false;
            notes.push_back(std::string(text) + " is not central over " + F->name() + " (" +
                            modeName(mode) + ")");
        }
    };

    for (auto [F, mode] :
         std::vector<std::pair<const FieldDescriptor*, EvalMode>>{
             {Q, EvalMode::GenericChar0},
             {F3, EvalMode::GenericCharP},
             {F3, EvalMode::FiniteExhaustive},
             {F5, EvalMode::FiniteExhaustive}}) {
        central("z1*z2", F, InvolutionKind::Star, mode);
        central("y1", F, InvolutionKind::S, mode);
    }
    central("y1^3", F3, InvolutionKind::Star, EvalMode::GenericCharP);
    central("y1^5", F5, InvolutionKind::Star, EvalMode::GenericCharP);
    for (const FieldDescriptor* F : {F3, F5}) {
        std::vector<StarPolynomial> fam =
            generatorsFor(TheoremId::CentralStarFinite, {F, std::nullopt, std::nullopt});
        unsigned long p = F->characteristic();
        if (fam.size() != p + 1) {
            pass = false;
            notes.push_back("expected the l = 1.." + std::to_string(p) +
                            " family plus z1*z2 over " + F->name() + ", found " +
                            std::to_string(fam.size()) + " generators");
        }
        for (std::size_t i = 0; i < fam.size(); ++i) {
            ++checks;
            if (!checkCentral(fam[i], InvolutionKind::Star, EvalMode::FiniteExhaustive).holds) {
                pass = false;
                notes.push_back("family member " + std::to_string(i + 1) + " over " + F->name() +
                                " is not central");
            }
        }
    }
    line(3, pass,
         "all " + std::to_string(checks) +
             " catalogued central polynomials evaluate centrally in their regimes "
             "(z1*z2, y1^p, the finite l-family, and y1 under s)",
         secondsSince(t0));
}

void criterion4() {
    auto t0 = Clock::now();
    bool pass = true;

    // Two evaluations of z1*z2 with different scalar values: were z1*z2 an
    // identity plus a fixed constant, every value would be that constant.
    StarPolynomial zz = parsePolynomial("z1*z2", F3);
    std::set<std::string> scalars;
    std::string sample;
    bool allScalar = true;
    forEachAssignment(zz, InvolutionKind::Star, F3, [&](const Assignment<FieldElement>& A) {
        UT2Matrix<FieldElement> v = evaluate(zz, A);
        if (!v.isCentral()) allScalar = false;
        if (scalars.insert(v.e11.str()).second && scalars.size() <= 2)
            sample += (sample.empty() ? "" : " and ") + A.str() + " gives " + v.str();
        return true;
    });
    if (!allScalar || scalars.size() < 2) {
        pass = false;
        notes.push_back("z1*z2 did not produce two distinct scalar values over F3");
    } else {
        notes.push_back("witness pair: " + sample);
    }

    // y1 is no s-identity: some evaluation is nonzero.
    CheckResult y = checkIdentity(parsePolynomial("y1", F3), InvolutionKind::S,
                                  EvalMode::FiniteExhaustive);
    if (y.holds) {
        pass = false;
        notes.push_back("y1 vanished under every s-assignment over F3");
    } else {
        notes.push_back("y1 under s: " + y.witness);
    }
    line(4, pass,
         "the central polynomials are nontrivial: z1*z2 takes two distinct scalar "
         "values over F3, and y1 is not an s-identity",
         secondsSince(t0));
}

void criterion5() {
    auto t0 = Clock::now();
    bool pass = true;
    std::size_t relations = 0;
    for (const FieldDescriptor* F : {Q, F3}) {
        SuiteOptions opts;
        opts.field = F;
        VerificationReport rep = buildSuiteReport(TheoremId::CommutationLemma, opts);
        relations = rep.checks.size();
        if (!rep.verified() || rep.countOf(CheckStatus::Pass) != rep.checks.size()) {
            pass = false;
            notes.push_back("a commutation relation failed over " + F->name());
            for (auto& c : rep.checks)
                if (c.status != CheckStatus::Pass) notes.push_back("  " + c.name);
        }
    }
    line(5, pass,
         "all " + std::to_string(relations) +
             " z-prefix commutation relations (permuted prefixes of length <= 3, every "
             "commutator insertion point) vanish generically over Q and exhaustively over F3",
         secondsSince(t0));
}

void criterion6() {
    auto t0 = Clock::now();
    SuiteOptions onQ;
    onQ.field = Q;
    VerificationReport inf = buildSuiteReport(TheoremId::BasisStarInfinite, onQ);

    SuiteOptions onF3;
    onF3.field = F3;
    VerificationReport fin = buildSuiteReport(TheoremId::BasisStarFinite, onF3);

    bool pass = inf.verified() && fin.verified();
    if (!inf.verified()) notes.push_back("the infinite family failed over Q");
    if (!fin.verified()) {
        notes.push_back("finite family over F3: " + std::to_string(fin.countOf(CheckStatus::Fail)) +
                        " of 37 slices do not split (every one has a z-exponent >= 3):");
        for (auto& c : fin.checks)
            if (c.status == CheckStatus::Fail) notes.push_back("  " + c.name + " — " + c.detail);
        notes.push_back("the listed family has no word with a z-exponent at or above the field");
        notes.push_back("size; those quotient classes are carried by lower-degree words (for");
        notes.push_back("example z1^3 equals z1 modulo the identities), so degree-homogeneous");
        notes.push_back("slice counts cannot split — see the finite basis suite for details");
    }
    line(6, pass,
         "quotient-basis words complement the identity subspace on every slice of total "
         "degree <= 4 (infinite family over Q; finite family over F3)",
         secondsSince(t0));
}

void criterion7() {
    auto t0 = Clock::now();
    bool pass = true;
    std::size_t warned = 0;
    for (const FieldDescriptor* F : {F3, F5}) {
        SuiteOptions opts;
        opts.field = F;
        VerificationReport rep = buildSuiteReport(TheoremId::CentralStarFinite, opts);
        warned += rep.countOf(CheckStatus::Warn);
        if (!rep.verified()) {
            pass = false; // claimed span escaping the central subspace is unsound
            for (auto& c : rep.checks)
                if (c.status == CheckStatus::Fail)
                    notes.push_back("over " + F->name() + ": " + c.name + " — " + c.witness);
        }
        for (auto& c : rep.checks)
            if (c.status == CheckStatus::Warn)
                notes.push_back("strategy-exhausted over " + F->name() + ": " + c.name + " (" +
                                c.detail + ")");
    }
    if (warned == 0) notes.push_back("no slice needed the strategy-exhausted allowance");
    line(7, pass,
         "on every slice over F3 and F5 the central subspace equals the identity "
         "consequences joined with the central-generator substitution span (" +
             std::to_string(warned) + " strategy-exhausted warnings)",
         secondsSince(t0));
}

void criterion8() {
    auto t0 = Clock::now();
    bool pass = true;
    std::mt19937_64 rng(20250822);
    std::uniform_int_distribution<int> termCount(1, 5), wordLen(0, 4), letter(0, 3),
        coeff(1, 2);
    auto randomPoly = [&]() {
        StarPolynomial f = StarPolynomial::zero(F3);
        int terms = termCount(rng);
        for (int t = 0; t < terms; ++t) {
            std::vector<Variable> letters;
            int len = wordLen(rng);
            for (int i = 0; i < len; ++i) {
                int pick = letter(rng);
                letters.push_back(pick < 2 ? yVar(pick + 1) : zVar(pick - 1));
            }
            f = f + F3->fromInteger(coeff(rng)) *
                        StarPolynomial::fromWord(F3, Word(std::move(letters)));
        }
        return f;
    };

    std::size_t centralCount = 0;
    for (int i = 0; i < 500 && pass; ++i) {
        StarPolynomial f = randomPoly();
        auto [sym, skew] = f.symSkewSplit();
        bool central = checkCentral(f, InvolutionKind::S, EvalMode::FiniteExhaustive).holds;
        bool skewVanishes =
            checkIdentity(skew, InvolutionKind::S, EvalMode::FiniteExhaustive).holds;
        if (central) ++centralCount;
        if (central != skewVanishes) {
            pass = false;
            notes.push_back("sample " + std::to_string(i) + ": " + f.str() +
                            (central ? " is central but its skew part does not vanish"
                                     : " is not central though its skew part vanishes"));
        }
    }
    notes.push_back(std::to_string(centralCount) + " of 500 samples were central");
    line(8, pass,
         "for 500 seeded random polynomials of total degree <= 4 over F3, centrality "
         "under s holds exactly when the skew part is an s-identity",
         secondsSince(t0));
}

void criterion9() {
    auto t0 = Clock::now();
    bool pass = true;

    // Closed power formula against iterated multiplication.
    for (unsigned long ia = 0; ia < 5; ++ia)
        for (unsigned long ib = 0; ib < 5; ++ib) {
            FieldElement a = F5->fromIndex(ia), b = F5->fromIndex(ib);
            UT2Matrix<FieldElement> m{a, b, a};
            for (unsigned i = 0; i <= 6; ++i)
                if (powerFormula(a, b, i) != m.pow(i, F5)) {
                    pass = false;
                    notes.push_back("power formula disagrees at a=" + a.str() + " b=" + b.str() +
                                    " i=" + std::to_string(i));
                }
        }

    // Generic evaluations, specialized at every F3 point, against direct
    // exhaustive evaluation, for every catalogued generator and relation.
    std::size_t polys = 0, points = 0;
    for (TheoremId id :
         {TheoremId::IdStarInfinite, TheoremId::IdStarFinite, TheoremId::IdSInfinite,
          TheoremId::IdSFinite, TheoremId::CentralStarChar0, TheoremId::CentralStarInfCharP,
          TheoremId::CentralStarFinite, TheoremId::CentralS, TheoremId::CommutationLemma,
          TheoremId::EvenZLemma, TheoremId::PowerPQLemma, TheoremId::WrapIdentity}) {
        InvolutionKind kind = catalogEntry(id).kind;
        for (const StarPolynomial& g : generatorsFor(id, {F3, std::nullopt, std::nullopt})) {
            ++polys;
            UT2Matrix<CommPolynomial> generic = evaluate(g, genericAssignment(g, kind));
            std::set<Variable> vars = g.variables();
            forEachAssignmentOver(vars, kind, F3, [&](const Assignment<FieldElement>& A) {
                ++points;
                std::map<CommVar, FieldElement> pt = pointOf(A, vars, kind);
                UT2Matrix<FieldElement> direct = evaluate(g, A);
                if (evalComm(generic.e11, pt, F3) != direct.e11 ||
                    evalComm(generic.e12, pt, F3) != direct.e12 ||
                    evalComm(generic.e22, pt, F3) != direct.e22) {
                    pass = false;
                    notes.push_back("generic and direct evaluation disagree for " + g.str() +
                                    " at " + A.str());
                    return false;
                }
                return true;
            });
        }
    }
    line(9, pass,
         "the closed power formula matches iterated multiplication on all of F5 x F5 "
         "(powers 0..6), and generic evaluations of all " +
             std::to_string(polys) + " catalogued polynomials specialize correctly at " +
             std::to_string(points) + " exhaustive F3 points",
         secondsSince(t0));
}

void criterion10() {
    auto t0 = Clock::now();
    bool pass = true;
    for (const FieldDescriptor* F : {F3, F9}) {
        std::vector<StarPolynomial> gens =
            generatorsFor(TheoremId::PowerPQLemma, {F, std::nullopt, std::nullopt});
        for (const StarPolynomial& g : gens)
            if (!checkIdentity(g, InvolutionKind::Star, EvalMode::FiniteExhaustive).holds) {
                pass = false;
                notes.push_back(g.str() + " is not an identity over " + F->name());
            }
    }
    line(10, pass,
         "y1^(pq) - y1^p is a star-identity over F3 (y1^9 - y1^3) and over the "
         "extension field F9 (y1^27 - y1^3); no skip needed",
         secondsSince(t0));
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%d of 10 criteria passed (%.1f s total)\n", 10 - failures, secondsSince(t0));
    return failures;
}

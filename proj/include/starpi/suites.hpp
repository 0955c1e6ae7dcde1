#ifndef STARPI_SUITES_HPP
#define STARPI_SUITES_HPP

// Verification suites: run every check that substantiates one catalogued
// statement at a given field, evaluation mode and degree bound, and collect
// the outcomes into a VerificationReport.
//
// Suite composition by statement type:
//   identity lists    every generator vanishes identically; then, slice by
//                     slice, the span of bounded two-sided consequences of
//                     the generators is compared against the full identity
//                     subspace of the slice.  Equality passes; a shortfall
//                     warns, because the consequence span is a sound
//                     under-approximation limited by the substitution
//                     strategy; an excess fails, since consequences of true
//                     identities can never leave the identity subspace.
//   central lists     every generator evaluates centrally and takes some
//                     nonzero value; then, slice by slice, the identity
//                     consequences of the companion identity list joined
//                     with the substitution consequences of the central
//                     generators are compared against the full central
//                     subspace, with the same pass/warn/fail reading.
//   basis families    slice by slice, the listed quotient-basis words must
//                     complement the identity subspace exactly: dimensions
//                     must split and the joint rank must fill the slice.
//   lemmas            each catalogued relation or witness is checked
//                     directly against its stated property.
//
// Slices run over one representative per multidegree shape; every subspace
// and span involved is equivariant under permuting variable indices of the
// same kind, so the representative decides the whole renaming orbit.  Slice
// checks are independent and run on a small thread pool (STARPI_THREADS
// overrides the size); reports are assembled in slice order, so the output
// is deterministic for fixed inputs.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "decision.hpp"
#include "errors.hpp"
#include "report.hpp"

namespace starpi {

struct SuiteOptions {
    const FieldDescriptor* field = nullptr;
    std::optional<EvalMode> mode;      // default: the field's natural mode
    unsigned maxTotalDegree = 4;       // total-degree bound for slice checks
    ConsequenceStrategy strategy;      // substitution search parameters
    std::optional<unsigned> threads;   // default: STARPI_THREADS, then hardware
    std::optional<unsigned long> q, p; // statement parameter overrides
};

// Does the evaluation mode decide statements about this class of fields?
inline bool modeDecidesRegime(EvalMode m, FieldRegime r) {
    switch (r) {
        case FieldRegime::Any: return true;
        case FieldRegime::Infinite:
            return m == EvalMode::GenericChar0 || m == EvalMode::GenericCharP;
        case FieldRegime::Char0: return m == EvalMode::GenericChar0;
        case FieldRegime::InfiniteCharP: return m == EvalMode::GenericCharP;
        case FieldRegime::Finite: return m == EvalMode::FiniteExhaustive;
    }
    return false;
}

inline EvalMode resolveSuiteMode(const CatalogEntry& entry, const SuiteOptions& opts) {
    if (!opts.field) throw MissingParameterError("a suite requires a coefficient field");
    EvalMode m = opts.mode.value_or(defaultMode(opts.field));
    requireModeField(m, opts.field);
    if (!modeDecidesRegime(m, entry.regime))
        throw ModeFieldMismatchError(std::string(theoremName(entry.id)) + " concerns " +
                                     regimeName(entry.regime) + " coefficients; evaluation mode " +
                                     modeName(m) + " does not decide it");
    return m;
}

// One representative per multidegree shape up to renaming variables of the
// same kind: exponents weakly decreasing along y1..ya and along z1..zb, all
// positive, total degree between 1 and maxTotal, listed by total degree.
inline std::vector<MultiDegree> canonicalSlicesUpTo(unsigned maxTotal) {
    auto partitions = [](unsigned n) {
        std::vector<std::vector<unsigned>> ps;
        std::vector<unsigned> cur;
        auto rec = [&](auto&& self, unsigned left, unsigned maxPart) -> void {
            if (left == 0) {
                ps.push_back(cur);
                return;
            }
            for (unsigned part = std::min(left, maxPart); part >= 1; --part) {
                cur.push_back(part);
                self(self, left - part, part);
                cur.pop_back();
            }
        };
        rec(rec, n, n == 0 ? 1 : n);
        return ps; // for n = 0: just the empty partition
    };
    std::vector<MultiDegree> out;
    for (unsigned total = 1; total <= maxTotal; ++total)
        for (unsigned ty = 0; ty <= total; ++ty)
            for (auto& py : partitions(ty))
                for (auto& pz : partitions(total - ty)) {
                    MultiDegree md;
                    for (std::size_t i = 0; i < py.size(); ++i)
                        md.y[static_cast<std::uint32_t>(i + 1)] = py[i];
                    for (std::size_t i = 0; i < pz.size(); ++i)
                        md.z[static_cast<std::uint32_t>(i + 1)] = pz[i];
                    out.push_back(std::move(md));
                }
    return out;
}

namespace detail {

inline unsigned suiteThreadCount(const SuiteOptions& opts) {
    if (opts.threads && *opts.threads > 0) return *opts.threads;
    if (const char* env = std::getenv("STARPI_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= 256) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

// Run job(i) for i in [0, n) on up to `threads` workers.  Jobs write their
// results into per-index slots, so the caller's assembly order does not
// depend on scheduling; the first exception is rethrown after the join.
template <typename Job>
inline void forEachIndexParallel(std::size_t n, unsigned threads, Job&& job) {
    unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr firstError;
    std::mutex errLock;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                job(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(errLock);
                if (!firstError) firstError = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (firstError) std::rethrow_exception(firstError);
}

// dim of the intersection of the span with the coordinate subspace spanned
// by the slice's words: rank(S) + dim(slice) - rank(S + slice axes).
inline std::size_t dimWithinSlice(const GeneratedSpace& g, const MultiDegree& slice,
                                  const FieldDescriptor* F) {
    WordUniverse sliceWords = WordUniverse::ofSlice(slice);
    SpanBasis joint(F, g.universe.size());
    for (auto& row : g.span.rows()) joint.insert(row);
    const std::size_t sliceDim = sliceWords.size();
    for (std::size_t i = 0; i < sliceDim; ++i) {
        auto idx = g.universe.indexOf(sliceWords.wordAt(i));
        if (!idx) throw UniverseMismatchError("slice word outside the bounded universe");
        std::vector<FieldElement> unit(g.universe.size(), F->zero());
        unit[*idx] = F->one();
        joint.insert(unit);
    }
    return g.span.rank() + sliceDim - joint.rank();
}

// Per-generator property checks shared by the identity and central suites.
inline void generatorChecks(const std::vector<StarPolynomial>& gens,
                            const std::vector<std::string>& texts, InvolutionKind kind,
                            EvalMode mode, CatalogProperty prop, std::vector<CheckEntry>& out) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CheckEntry e;
        e.name = "generator " + std::to_string(i + 1) + " (" + texts[i] + ") " +
                 (prop == CatalogProperty::Identity ? "vanishes identically"
                                                    : "evaluates centrally");
        CheckResult r = prop == CatalogProperty::Identity ? checkIdentity(gens[i], kind, mode)
                                                          : checkCentral(gens[i], kind, mode);
        if (!r.holds) {
            e.status = CheckStatus::Fail;
            e.witness = r.witness;
        }
        out.push_back(std::move(e));
        if (prop == CatalogProperty::Central) {
            CheckEntry n;
            n.name = "generator " + std::to_string(i + 1) + " (" + texts[i] +
                     ") takes a nonzero value";
            if (checkIdentity(gens[i], kind, mode).holds) {
                n.status = CheckStatus::Fail;
                n.witness = "every evaluation is zero";
            }
            out.push_back(std::move(n));
        }
    }
}

inline std::vector<Variable> sliceAlphabet(const MultiDegree& slice) {
    std::set<Variable> vs = sliceVariables(slice);
    return std::vector<Variable>(vs.begin(), vs.end());
}

// Compare a witnessed span dimension against the full target subspace of the
// slice: equal passes, short warns, excess fails.
inline CheckEntry spanVersusTarget(const MultiDegree& slice, std::size_t sliceDim,
                                   std::size_t target, std::size_t witnessed,
                                   const char* targetLabel) {
    CheckEntry e;
    e.name = "slice " + slice.str() + ": " + targetLabel + " subspace is witnessed";
    e.detail = "slice dim " + std::to_string(sliceDim) + ", " + targetLabel + " dim " +
               std::to_string(target) + ", witnessed " + std::to_string(witnessed);
    if (witnessed == target) {
        e.status = CheckStatus::Pass;
    } else if (witnessed < target) {
        e.status = CheckStatus::Warn;
        e.detail += " (bounded search stopped short)";
    } else {
        e.status = CheckStatus::Fail;
        e.witness = "the consequence span leaves the " + std::string(targetLabel) + " subspace";
    }
    return e;
}

} // namespace detail

// The identity list whose two-sided consequences accompany a central list:
// the central statements describe the central subspace modulo the identity
// ideal of the same involution and field class.
inline TheoremId companionIdentityTheorem(TheoremId id, EvalMode mode) {
    switch (id) {
        case TheoremId::CentralStarChar0:
        case TheoremId::CentralStarInfCharP: return TheoremId::IdStarInfinite;
        case TheoremId::CentralStarFinite: return TheoremId::IdStarFinite;
        case TheoremId::CentralS:
            return mode == EvalMode::FiniteExhaustive ? TheoremId::IdSFinite
                                                      : TheoremId::IdSInfinite;
        default: throw Error(std::string(theoremName(id)) + " has no companion identity list");
    }
}

inline VerificationReport buildSuiteReport(TheoremId id, const SuiteOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    const CatalogEntry& entry = catalogEntry(id);
    EvalMode mode = resolveSuiteMode(entry, opts);
    CatalogParams params{opts.field, opts.q, opts.p};
    const FieldDescriptor* F = opts.field;

    VerificationReport rep;
    rep.theorem = theoremName(id);
    rep.field = F->name();
    rep.mode = modeName(mode);

    const unsigned threads = detail::suiteThreadCount(opts);
    std::vector<MultiDegree> slices = canonicalSlicesUpTo(opts.maxTotalDegree);

    switch (id) {
        case TheoremId::IdStarInfinite:
        case TheoremId::IdStarFinite:
        case TheoremId::IdSInfinite:
        case TheoremId::IdSFinite: {
            std::vector<StarPolynomial> gens = generatorsFor(id, params);
            detail::generatorChecks(gens, generatorTextFor(id, params), entry.kind, mode,
                                    CatalogProperty::Identity, rep.checks);
            std::vector<CheckEntry> perSlice(slices.size());
            detail::forEachIndexParallel(slices.size(), threads, [&](std::size_t i) {
                const MultiDegree& slice = slices[i];
                GeneratedSpace claimed = tIdealConsequencesInBound(
                    gens, detail::sliceAlphabet(slice), slice.total(), mode, opts.strategy);
                SliceSpace ids = identitySpaceOfSlice(slice, entry.kind, mode, F);
                perSlice[i] = detail::spanVersusTarget(slice, ids.universe.size(),
                                                       ids.space.rank(),
                                                       detail::dimWithinSlice(claimed, slice, F),
                                                       "identity");
            });
            for (auto& e : perSlice) rep.checks.push_back(std::move(e));
            break;
        }

        case TheoremId::CentralStarChar0:
        case TheoremId::CentralStarInfCharP:
        case TheoremId::CentralStarFinite:
        case TheoremId::CentralS: {
            std::vector<StarPolynomial> gens = generatorsFor(id, params);
            detail::generatorChecks(gens, generatorTextFor(id, params), entry.kind, mode,
                                    CatalogProperty::Central, rep.checks);
            std::vector<StarPolynomial> idGens =
                generatorsFor(companionIdentityTheorem(id, mode), params);
            // A generator that is linear in each of its variables keeps plain
            // atoms as candidate images, so its substitution search stays
            // cheap even with images as long as the whole slice; deepening
            // the image degree for exactly those generators reaches the
            // instances whose images exceed the default cap.
            std::vector<StarPolynomial> linearGens, generalGens;
            for (const StarPolynomial& g : gens) {
                bool linear = true;
                for (Variable v : g.variables())
                    if (!detail::atMostLinearIn(g, v)) { linear = false; break; }
                (linear ? linearGens : generalGens).push_back(g);
            }
            std::vector<CheckEntry> perSlice(slices.size());
            detail::forEachIndexParallel(slices.size(), threads, [&](std::size_t i) {
                const MultiDegree& slice = slices[i];
                std::vector<Variable> vars = detail::sliceAlphabet(slice);
                GeneratedSpace claimed =
                    tIdealConsequencesInBound(idGens, vars, slice.total(), mode, opts.strategy);
                ConsequenceStrategy deep = opts.strategy;
                deep.maxSubstDegree = std::max(deep.maxSubstDegree, slice.total());
                if (!linearGens.empty()) {
                    GeneratedSpace g = tSpaceConsequencesInBound(linearGens, vars, slice.total(),
                                                                 mode, deep);
                    for (auto& row : g.span.rows()) claimed.span.insert(row);
                }
                if (!generalGens.empty()) {
                    GeneratedSpace g = tSpaceConsequencesInBound(generalGens, vars, slice.total(),
                                                                 mode, opts.strategy);
                    for (auto& row : g.span.rows()) claimed.span.insert(row);
                }
                SliceSpace central = centralSpaceOfSlice(slice, entry.kind, mode, F);
                perSlice[i] = detail::spanVersusTarget(slice, central.universe.size(),
                                                       central.space.rank(),
                                                       detail::dimWithinSlice(claimed, slice, F),
                                                       "central");
            });
            for (auto& e : perSlice) rep.checks.push_back(std::move(e));
            break;
        }

        case TheoremId::BasisStarInfinite:
        case TheoremId::BasisStarFinite: {
            std::vector<CheckEntry> perSlice(slices.size());
            detail::forEachIndexParallel(slices.size(), threads, [&](std::size_t i) {
                const MultiDegree& slice = slices[i];
                SliceSpace ids = identitySpaceOfSlice(slice, entry.kind, mode, F);
                std::vector<StarPolynomial> words = basisWordsForSlice(id, slice, params);
                ComplementCheck c = checkComplementary(ids, words, F);
                CheckEntry e;
                e.name = "slice " + slice.str() + ": listed words complement the identities";
                e.detail = "slice dim " + std::to_string(c.sliceDim) + ", identity dim " +
                           std::to_string(c.identityDim) + ", basis count " +
                           std::to_string(c.basisCount) + ", joint rank " +
                           std::to_string(c.jointRank);
                if (!c.complementary) {
                    e.status = CheckStatus::Fail;
                    e.witness = c.identityDim + c.basisCount != c.sliceDim
                                    ? "identity dimension and word count do not split the slice"
                                    : "the words are dependent modulo the identities";
                }
                perSlice[i] = std::move(e);
            });
            for (auto& e : perSlice) rep.checks.push_back(std::move(e));
            break;
        }

        case TheoremId::CommutationLemma:
        case TheoremId::PowerPQLemma: {
            std::vector<StarPolynomial> gens = generatorsFor(id, params);
            std::vector<std::string> texts = generatorTextFor(id, params);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                CheckEntry e;
                e.name = "relation " + std::to_string(i + 1) + " (" + texts[i] +
                         ") vanishes identically";
                CheckResult r = checkIdentity(gens[i], entry.kind, mode);
                if (!r.holds) {
                    e.status = CheckStatus::Fail;
                    e.witness = r.witness;
                }
                rep.checks.push_back(std::move(e));
            }
            break;
        }

        case TheoremId::EvenZLemma: {
            std::vector<StarPolynomial> gens = generatorsFor(id, params);
            detail::generatorChecks(gens, generatorTextFor(id, params), entry.kind, mode,
                                    CatalogProperty::Central, rep.checks);
            break;
        }

        case TheoremId::WrapIdentity: {
            std::vector<StarPolynomial> wraps = generatorsFor(id, params);
            std::vector<std::string> texts = generatorTextFor(id, params);
            StarPolynomial base = commutator(StarPolynomial::variable(F, yVar(1)),
                                             StarPolynomial::variable(F, yVar(2)));
            for (std::size_t i = 0; i < wraps.size(); ++i) {
                CheckEntry e;
                e.name = "wrapped product " + std::to_string(i + 1) + " (" + texts[i] +
                         ") vanishes identically";
                CheckResult r = checkIdentity(wraps[i], entry.kind, mode);
                if (!r.holds) {
                    e.status = CheckStatus::Fail;
                    e.witness = r.witness;
                }
                rep.checks.push_back(std::move(e));

                CheckEntry m;
                m.name = "wrapped product " + std::to_string(i + 1) +
                         " lies in the two-sided closure of [y1,y2]";
                std::set<Variable> vs = wraps[i].variables();
                std::vector<Variable> vars(vs.begin(), vs.end());
                auto wrapDegree = wraps[i].multiDegree();
                unsigned bound = wrapDegree ? wrapDegree->total() : opts.maxTotalDegree;
                GeneratedSpace closure =
                    tIdealConsequencesInBound({base}, vars, bound, mode, opts.strategy);
                if (!spanContainsPolynomial(closure, wraps[i])) {
                    m.status = CheckStatus::Fail;
                    m.witness = "membership search failed inside degree " +
                                std::to_string(bound);
                }
                rep.checks.push_back(std::move(m));
            }
            break;
        }
    }

    rep.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return rep;
}

} // namespace starpi

#endif // STARPI_SUITES_HPP

#ifndef STARPI_DECISION_HPP
#define STARPI_DECISION_HPP

// Decision procedures:
//   * is a polynomial an identity / a central polynomial of the involution
//     algebra of upper triangular 2x2 matrices, under one of three exact
//     evaluation regimes;
//   * the full identity / central subspace of a multihomogeneous slice;
//   * spans of substitution consequences of a generator set inside a degree
//     bound, with membership tests and quotient coordinates.
//
// Evaluation regimes:
//   FiniteExhaustive  the matrix entries run over every element of a finite
//                     field; checks are literal universal quantification.
//   GenericChar0      entries are independent commutative indeterminates
//                     over the rationals; a property holds iff it holds for
//                     the generic matrices, i.e. over every field of
//                     characteristic zero.
//   GenericCharP      entries are commutative indeterminates over F_q; a
//                     nonzero polynomial over F_q cannot vanish on an
//                     infinite extension, so this decides the property over
//                     every infinite field of characteristic p containing
//                     F_q.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "commpoly.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "freealg.hpp"
#include "linalg.hpp"
#include "ut2.hpp"

namespace starpi {

// ---------------------------------------------------------------------------
// Evaluation regimes.
// ---------------------------------------------------------------------------

enum class EvalMode { FiniteExhaustive, GenericChar0, GenericCharP };

inline const char* modeName(EvalMode m) {
    switch (m) {
        case EvalMode::FiniteExhaustive: return "finite-exhaustive";
        case EvalMode::GenericChar0: return "generic-char0";
        case EvalMode::GenericCharP: return "generic-charp";
    }
    return "?";
}

inline std::optional<EvalMode> modeByName(const std::string& s) {
    if (s == "finite-exhaustive") return EvalMode::FiniteExhaustive;
    if (s == "generic-char0") return EvalMode::GenericChar0;
    if (s == "generic-charp") return EvalMode::GenericCharP;
    return std::nullopt;
}

inline void requireModeField(EvalMode mode, const FieldDescriptor* F) {
    switch (mode) {
        case EvalMode::FiniteExhaustive:
            if (!F->isFinite())
                throw ModeFieldMismatchError("finite-exhaustive needs a finite field, not " +
                                             F->name());
            return;
        case EvalMode::GenericChar0:
            if (F->isFinite())
                throw ModeFieldMismatchError("generic-char0 needs the rationals, not " + F->name());
            return;
        case EvalMode::GenericCharP:
            if (!F->isFinite())
                throw ModeFieldMismatchError(
                    "generic-charp needs a finite field of coefficients, not " + F->name());
            return;
    }
}

// FiniteExhaustive over finite fields, GenericChar0 over the rationals.
inline EvalMode defaultMode(const FieldDescriptor* F) {
    return F->isFinite() ? EvalMode::FiniteExhaustive : EvalMode::GenericChar0;
}

// ---------------------------------------------------------------------------
// Identity and central-polynomial checks.
// ---------------------------------------------------------------------------

struct CheckResult {
    bool holds;
    std::string witness; // empty when the property holds; otherwise the first
                         // counterexample in deterministic enumeration order
};

namespace detail {

inline std::string genericWitness(const UT2Matrix<CommPolynomial>& v, const std::string& reason) {
    return reason + "; generic value " + v.str();
}

// The image of p in the ring of functions on (F_q)^N: every element of the
// q-element field satisfies x^q = x, so exponents e >= 1 reduce to
// 1 + (e-1 mod q-1), and p vanishes at every point over F_q exactly when the
// reduced polynomial is zero.  (Functions on F_q^N correspond bijectively to
// polynomials with all exponents below q.)
inline CommPolynomial reduceFunctionally(const CommPolynomial& p, unsigned long q) {
    const FieldDescriptor* F = p.field();
    CommPolynomial out(F);
    for (auto& [m, c] : p.terms()) {
        std::vector<std::pair<CommVar, unsigned>> exps;
        exps.reserve(m.exponents().size());
        for (auto& [v, e] : m.exponents())
            exps.emplace_back(v, 1 + (e - 1) % static_cast<unsigned>(q - 1));
        out = out + CommPolynomial::monomial(F, CommMonomial(std::move(exps)), c);
    }
    return out;
}

} // namespace detail

// The exhaustive verdicts are decided without enumerating field points: an
// entry polynomial of the generic evaluation vanishes at every point of the
// q-element field exactly when its functional reduction (x^q = x) is the
// zero polynomial.  Points are enumerated only to exhibit a counterexample,
// which keeps the witness the first one in deterministic enumeration order.

inline CheckResult checkIdentity(const StarPolynomial& f, InvolutionKind kind, EvalMode mode) {
    requireModeField(mode, f.field());
    if (mode == EvalMode::FiniteExhaustive) {
        unsigned long q = *f.field()->cardinality();
        UT2Matrix<CommPolynomial> g = evaluate(f, genericAssignment(f, kind));
        if (detail::reduceFunctionally(g.e11, q).isZero() &&
            detail::reduceFunctionally(g.e12, q).isZero() &&
            detail::reduceFunctionally(g.e22, q).isZero())
            return {true, ""};
        CheckResult r{false, "nonzero somewhere"};
        forEachAssignment(f, kind, f.field(), [&](const Assignment<FieldElement>& A) {
            UT2Matrix<FieldElement> v = evaluate(f, A);
            if (v.isZero()) return true;
            r = {false, A.str() + " evaluates to " + v.str()};
            return false;
        });
        return r;
    }
    UT2Matrix<CommPolynomial> v = evaluate(f, genericAssignment(f, kind));
    if (v.isZero()) return {true, ""};
    return {false, detail::genericWitness(v, "nonzero generic evaluation")};
}

inline CheckResult checkCentral(const StarPolynomial& f, InvolutionKind kind, EvalMode mode) {
    requireModeField(mode, f.field());
    if (mode == EvalMode::FiniteExhaustive) {
        unsigned long q = *f.field()->cardinality();
        UT2Matrix<CommPolynomial> g = evaluate(f, genericAssignment(f, kind));
        if (detail::reduceFunctionally(g.e12, q).isZero() &&
            detail::reduceFunctionally(g.e11 - g.e22, q).isZero())
            return {true, ""};
        CheckResult r{false, "non-scalar somewhere"};
        forEachAssignment(f, kind, f.field(), [&](const Assignment<FieldElement>& A) {
            UT2Matrix<FieldElement> v = evaluate(f, A);
            if (v.isCentral()) return true;
            r = {false, A.str() + " evaluates to the non-scalar " + v.str()};
            return false;
        });
        return r;
    }
    UT2Matrix<CommPolynomial> v = evaluate(f, genericAssignment(f, kind));
    if (v.isCentral()) return {true, ""};
    return {false, detail::genericWitness(v, "generic evaluation is not scalar")};
}

inline bool isIdentity(const StarPolynomial& f, InvolutionKind kind, EvalMode mode) {
    return checkIdentity(f, kind, mode).holds;
}
inline bool isCentralPolynomial(const StarPolynomial& f, InvolutionKind kind, EvalMode mode) {
    return checkCentral(f, kind, mode).holds;
}

// f and g take equal values under every admissible evaluation.
inline bool equalModIdentities(const StarPolynomial& f, const StarPolynomial& g,
                               InvolutionKind kind, EvalMode mode) {
    return isIdentity(f - g, kind, mode);
}

// ---------------------------------------------------------------------------
// Multihomogeneous slices.
// ---------------------------------------------------------------------------

inline std::set<Variable> sliceVariables(const MultiDegree& slice) {
    std::set<Variable> vars;
    for (auto& [i, e] : slice.y)
        if (e > 0) vars.insert(yVar(i));
    for (auto& [i, e] : slice.z)
        if (e > 0) vars.insert(zVar(i));
    return vars;
}

// Every multidegree with support inside `alphabet` and total degree between
// 1 and maxDegree, listed by total degree and then by the multidegree order.
inline std::vector<MultiDegree> slicesUpTo(const std::vector<Variable>& alphabet,
                                           unsigned maxDegree) {
    std::set<Variable> letters(alphabet.begin(), alphabet.end());
    std::vector<Variable> ls(letters.begin(), letters.end());
    std::vector<MultiDegree> out;
    std::vector<unsigned> expo(ls.size(), 0);
    auto emit = [&]() {
        MultiDegree md;
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (expo[i] == 0) continue;
            if (ls[i].kind == VarKind::Y)
                md.y[ls[i].index] = expo[i];
            else
                md.z[ls[i].index] = expo[i];
        }
        if (md.total() > 0) out.push_back(std::move(md));
    };
    auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos == ls.size()) {
            emit();
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            expo[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        expo[pos] = 0;
    };
    rec(rec, 0, maxDegree);
    std::sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

enum class ValueProperty { Identity, Central };

// A subspace of the coordinate space of one slice's words.
struct SliceSpace {
    MultiDegree slice;
    WordUniverse universe;
    SpanBasis space;
};

// The subspace of the slice whose elements are identities (all evaluations
// zero) or central polynomials (all evaluations scalar).  Computed as the
// kernel of the exact linear constraint system the evaluations impose on the
// word coefficients.
inline SliceSpace valueSpaceOfSlice(const MultiDegree& slice, InvolutionKind kind, EvalMode mode,
                                    const FieldDescriptor* F, ValueProperty prop) {
    requireModeField(mode, F);
    WordUniverse u = WordUniverse::ofSlice(slice);
    const std::size_t d = u.size();
    std::set<Variable> vars = sliceVariables(slice);
    SpanBasis constraints(F, d);

    // In every regime the admissible coefficient vectors form the kernel of a
    // linear system read off from the entries of the generic evaluation.  The
    // generic regimes need the entries to vanish as polynomials in the matrix
    // indeterminates; the exhaustive regime needs them to vanish as functions
    // on the q-element field, which by the relations x^q = x means their
    // functionally reduced forms must vanish as polynomials.  Either way each
    // monomial of an entry contributes one linear constraint row.
    Assignment<CommPolynomial> G = genericAssignmentFor(vars, F, kind);
    std::vector<UT2Matrix<CommPolynomial>> vals;
    vals.reserve(d);
    for (std::size_t j = 0; j < d; ++j) vals.push_back(evaluateWord(u.wordAt(j), G, F));
    auto addRows = [&](auto&& entry) {
        std::vector<CommPolynomial> es;
        es.reserve(d);
        for (std::size_t j = 0; j < d; ++j) {
            CommPolynomial e = entry(vals[j]);
            if (mode == EvalMode::FiniteExhaustive)
                e = detail::reduceFunctionally(e, *F->cardinality());
            es.push_back(std::move(e));
        }
        std::set<CommMonomial> monomials;
        for (auto& e : es)
            for (auto& [m, c] : e.terms()) monomials.insert(m);
        for (const CommMonomial& m : monomials) {
            std::vector<FieldElement> row;
            row.reserve(d);
            for (auto& e : es) {
                auto it = e.terms().find(m);
                row.push_back(it == e.terms().end() ? F->zero() : it->second);
            }
            constraints.insert(row);
        }
    };
    if (prop == ValueProperty::Identity) {
        addRows([](const UT2Matrix<CommPolynomial>& m) { return m.e11; });
        addRows([](const UT2Matrix<CommPolynomial>& m) { return m.e12; });
        addRows([](const UT2Matrix<CommPolynomial>& m) { return m.e22; });
    } else {
        addRows([](const UT2Matrix<CommPolynomial>& m) { return m.e12; });
        addRows([](const UT2Matrix<CommPolynomial>& m) { return m.e11 - m.e22; });
    }

    SpanBasis space(F, d);
    for (auto& v : constraints.kernelBasis()) space.insert(v);
    return {slice, std::move(u), std::move(space)};
}

inline SliceSpace identitySpaceOfSlice(const MultiDegree& slice, InvolutionKind kind, EvalMode mode,
                                       const FieldDescriptor* F) {
    return valueSpaceOfSlice(slice, kind, mode, F, ValueProperty::Identity);
}
inline SliceSpace centralSpaceOfSlice(const MultiDegree& slice, InvolutionKind kind, EvalMode mode,
                                      const FieldDescriptor* F) {
    return valueSpaceOfSlice(slice, kind, mode, F, ValueProperty::Central);
}

// ---------------------------------------------------------------------------
// Consequence spans.
// ---------------------------------------------------------------------------

// How substitution images are enumerated.  Images for a variable are linear
// combinations of at most maxSupport "atoms" w + w* (for y) or w - w* (for
// z), w a word of degree <= maxSubstDegree over the working alphabet; the
// unit 1 is an extra symmetric atom, and the zero image is always available.
// Coefficients::All draws combination coefficients from the whole finite
// field; over the rationals it falls back to {1, -1}, which UnitPairs
// selects unconditionally.  Variables that appear at most linearly in a
// generator get single unit-coefficient atoms only; by linearity of the
// instance in that image this loses nothing from the span.
struct ConsequenceStrategy {
    unsigned maxSubstDegree = 2;
    unsigned maxSupport = 2;
    enum class Coefficients { All, UnitPairs };
    Coefficients coefficients = Coefficients::All;
};

// Span of consequences of a generator set inside the words of degree <=
// maxDegree over a fixed alphabet.  Every inserted vector is a genuine
// member of the generated closure — a substitution instance, a two-sided
// multiple of one, or (in the generic regimes) one of its multihomogeneous
// components; instances that do not fit inside the degree bound are skipped
// and counted, so the span is a sound under-approximation of the truncated
// closure.
struct GeneratedSpace {
    WordUniverse universe;
    SpanBasis span;
    unsigned long long instancesUsed = 0;
    unsigned long long instancesSkipped = 0; // would have left the degree bound
};

namespace detail {

// Atoms w + w* resp. w - w* over the alphabet, nonzero, deduplicated, in
// word-enumeration order; for symmetric images the unit comes first.
inline std::vector<StarPolynomial> substitutionAtoms(VarKind kind,
                                                     const std::vector<Variable>& alphabet,
                                                     unsigned maxSubstDegree,
                                                     const FieldDescriptor* F) {
    std::vector<StarPolynomial> atoms;
    std::set<std::string> seen;
    if (kind == VarKind::Y) {
        atoms.push_back(StarPolynomial::unit(F));
        seen.insert(atoms.back().str());
    }
    WordUniverse words = WordUniverse::boundedDegree(alphabet, maxSubstDegree);
    for (std::size_t i = 1; i < words.size(); ++i) { // skip the unit word
        StarPolynomial m = StarPolynomial::fromWord(F, words.wordAt(i));
        StarPolynomial a = kind == VarKind::Y ? m + m.involute() : m - m.involute();
        if (a.isZero()) continue;
        // Scale the first coefficient to one before deduplicating: scalar
        // multiples of an atom contribute exactly the same linear
        // combinations, so w + w* and its reversal (or negation) collapse
        // into one candidate instead of doubling every image list.
        a = (F->one() / a.terms().begin()->second) * a;
        if (seen.insert(a.str()).second) atoms.push_back(std::move(a));
    }
    return atoms;
}

// Minimal word length across the terms of p; nullopt for the zero polynomial.
inline std::optional<unsigned> minWordDegree(const StarPolynomial& p) {
    std::optional<unsigned> md;
    for (auto& [w, c] : p.terms()) {
        unsigned len = static_cast<unsigned>(w.letters().size());
        if (!md || len < *md) md = len;
    }
    return md;
}

// True when every term of s has degree <= 1 in v.
inline bool atMostLinearIn(const StarPolynomial& s, Variable v) {
    for (auto& [w, c] : s.terms()) {
        unsigned deg = 0;
        for (auto& l : w.letters())
            if (l == v) ++deg;
        if (deg > 1) return false;
    }
    return true;
}

// The candidate images for one variable of one generator.
inline std::vector<StarPolynomial> imageCandidates(const std::vector<StarPolynomial>& atoms,
                                                   bool linear, const ConsequenceStrategy& st,
                                                   const FieldDescriptor* F) {
    std::vector<StarPolynomial> out;
    out.push_back(StarPolynomial::zero(F));
    if (linear) {
        for (auto& a : atoms) out.push_back(a);
        return out;
    }
    std::vector<FieldElement> coeffs;
    if (st.coefficients == ConsequenceStrategy::Coefficients::All && F->isFinite()) {
        for (auto& c : F->enumerate())
            if (!c.isZero()) coeffs.push_back(c);
    } else {
        coeffs = {F->one(), -F->one()};
    }
    unsigned support = std::min<unsigned>(st.maxSupport, static_cast<unsigned>(atoms.size()));
    std::vector<std::size_t> pick;
    auto chooseCoeffs = [&](auto&& self, std::size_t slot, StarPolynomial acc) -> void {
        if (slot == pick.size()) {
            out.push_back(std::move(acc));
            return;
        }
        for (auto& c : coeffs) self(self, slot + 1, acc + c * atoms[pick[slot]]);
    };
    auto chooseAtoms = [&](auto&& self, std::size_t from, unsigned left) -> void {
        if (!pick.empty()) chooseCoeffs(chooseCoeffs, 0, StarPolynomial::zero(F));
        if (left == 0) return;
        for (std::size_t i = from; i < atoms.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    chooseAtoms(chooseAtoms, 0, support);
    return out;
}

// Maximal word length across the terms of p (0 for constants and zero).
inline unsigned maxWordDegree(const StarPolynomial& p) {
    unsigned d = 0;
    for (auto& [w, c] : p.terms())
        d = std::max(d, static_cast<unsigned>(w.letters().size()));
    return d;
}

// Enumerate the substitution instances of s over the strategy's candidate
// images, handing each instance that fits the degree bound to the sink (the
// sink returns false to stop early).  Instances that would leave the bound
// are only counted.  For every image tuple a cheap lower bound on the
// instance degree is checked first: a term all of whose variables get
// nonzero images survives with at least the sum of the cheapest image words,
// so tuples that cannot fit are skipped without substituting.
template <typename Sink>
inline void enumerateInstances(const StarPolynomial& s, const std::vector<StarPolynomial>& atomsY,
                               const std::vector<StarPolynomial>& atomsZ,
                               const ConsequenceStrategy& strategy, unsigned maxDegree,
                               unsigned long long& used, unsigned long long& skipped,
                               Sink&& sink) {
    if (s.isZero()) return;
    const FieldDescriptor* F = s.field();
    std::set<Variable> varSet = s.variables();
    std::vector<Variable> vars(varSet.begin(), varSet.end());
    if (vars.empty()) { // constant generator: its only instance is itself
        ++used;
        sink(s);
        return;
    }

    std::vector<std::vector<StarPolynomial>> lists;
    std::vector<std::vector<std::optional<unsigned>>> minDegs;
    for (Variable v : vars) {
        auto& atoms = v.kind == VarKind::Y ? atomsY : atomsZ;
        lists.push_back(imageCandidates(atoms, atMostLinearIn(s, v), strategy, F));
        std::vector<std::optional<unsigned>> mds;
        for (auto& img : lists.back()) mds.push_back(minWordDegree(img));
        minDegs.push_back(std::move(mds));
    }

    // Per-term variable degrees, precomputed once.
    std::vector<std::vector<unsigned>> termDegs;
    for (auto& [w, c] : s.terms()) {
        std::vector<unsigned> degs(vars.size(), 0);
        for (auto& l : w.letters()) {
            auto it = std::lower_bound(vars.begin(), vars.end(), l);
            degs[static_cast<std::size_t>(it - vars.begin())]++;
        }
        termDegs.push_back(std::move(degs));
    }

    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        bool feasible = true, anyTerm = false;
        for (auto& degs : termDegs) {
            unsigned long long minTotal = 0;
            bool killed = false;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (degs[i] == 0) continue;
                const auto& md = minDegs[i][idx[i]];
                if (!md) {
                    killed = true; // zero image annihilates the term
                    break;
                }
                minTotal += static_cast<unsigned long long>(degs[i]) * *md;
            }
            if (killed) continue;
            anyTerm = true;
            if (minTotal > maxDegree) {
                feasible = false;
                break;
            }
        }
        if (feasible && anyTerm) {
            std::map<Variable, StarPolynomial> images;
            for (std::size_t i = 0; i < vars.size(); ++i) images.emplace(vars[i], lists[i][idx[i]]);
            if (auto inst = s.substituteBounded(images, maxDegree)) {
                ++used;
                if (!sink(*inst)) return;
            } else {
                ++skipped;
            }
        } else if (!feasible) {
            ++skipped;
        }
        // Odometer over the image tuples.
        bool exhausted = false;
        std::size_t k = idx.size();
        while (k > 0) {
            --k;
            if (++idx[k] < lists[k].size()) break;
            idx[k] = 0;
            if (k == 0) exhausted = true;
        }
        if (exhausted) break;
    }
}

} // namespace detail

inline GeneratedSpace tSpaceConsequencesInBound(const std::vector<StarPolynomial>& gens,
                                                const std::vector<Variable>& alphabet,
                                                unsigned maxDegree, EvalMode mode,
                                                const ConsequenceStrategy& strategy = {}) {
    if (gens.empty()) throw MissingParameterError("no generators given");
    const FieldDescriptor* F = gens.front().field();
    for (auto& g : gens)
        if (g.field() != F) throw DescriptorMismatchError("generators over different fields");
    requireModeField(mode, F);

    WordUniverse uni = WordUniverse::boundedDegree(alphabet, maxDegree);
    const std::size_t full = uni.size();
    GeneratedSpace out{std::move(uni), SpanBasis(F, full)};
    auto atomsY = detail::substitutionAtoms(VarKind::Y, alphabet, strategy.maxSubstDegree, F);
    auto atomsZ = detail::substitutionAtoms(VarKind::Z, alphabet, strategy.maxSubstDegree, F);

    auto insertInstance = [&](const StarPolynomial& inst) {
        if (inst.isZero()) return;
        if (mode == EvalMode::FiniteExhaustive) {
            out.span.insert(out.universe.coordinates(inst));
        } else {
            for (auto& [md, comp] : inst.multihomogeneousComponents())
                out.span.insert(out.universe.coordinates(comp));
        }
    };

    for (const StarPolynomial& s : gens) {
        if (out.span.rank() == full) break;
        detail::enumerateInstances(s, atomsY, atomsZ, strategy, maxDegree, out.instancesUsed,
                                   out.instancesSkipped, [&](const StarPolynomial& inst) {
                                       insertInstance(inst);
                                       return out.span.rank() < full;
                                   });
    }
    return out;
}

// The wrapped generator families whose substitution span is the two-sided
// closure: with u, v fresh symmetric variables and p, r fresh skew ones,
// every product (word)*instance*(word) splits over symmetric and skew parts
// of the flanking words into instances of u*s*v, u*s*r, p*s*v, p*s*r (unit
// images recover one-sided and bare instances).  The involutes of the
// generators are included, keeping the span stable under the involution.
inline std::vector<StarPolynomial> idealWrapGenerators(const std::vector<StarPolynomial>& gens,
                                                       const std::vector<Variable>& alphabet) {
    if (gens.empty()) throw MissingParameterError("no generators given");
    const FieldDescriptor* F = gens.front().field();
    std::uint32_t maxY = 0, maxZ = 0;
    auto scan = [&](Variable v) {
        if (v.kind == VarKind::Y)
            maxY = std::max(maxY, v.index);
        else
            maxZ = std::max(maxZ, v.index);
    };
    for (auto& g : gens)
        for (auto& v : g.variables()) scan(v);
    for (auto& v : alphabet) scan(v);

    StarPolynomial u = StarPolynomial::variable(F, yVar(maxY + 1));
    StarPolynomial v = StarPolynomial::variable(F, yVar(maxY + 2));
    StarPolynomial p = StarPolynomial::variable(F, zVar(maxZ + 1));
    StarPolynomial r = StarPolynomial::variable(F, zVar(maxZ + 2));

    std::vector<StarPolynomial> base;
    std::set<std::string> seen;
    auto push = [&](const StarPolynomial& g) {
        if (!g.isZero() && seen.insert(g.str()).second) base.push_back(g);
    };
    for (auto& g : gens) {
        push(g);
        push(g.involute());
    }
    std::vector<StarPolynomial> out;
    for (auto& g : base) {
        out.push_back(g);
        out.push_back(u * g * v);
        out.push_back(u * g * r);
        out.push_back(p * g * v);
        out.push_back(p * g * r);
    }
    return out;
}

// Span of two-sided substitution consequences inside the degree bound.  The
// wrapped families of idealWrapGenerators describe the same closure, but
// enumerating their substitution tuples multiplies every generator's image
// space by the flanking variables' candidate lists.  Since the wraps are
// linear in the flanking variables, the span they reach is already generated
// by the products atom * instance * atom, so the instances of each base
// generator are enumerated once and multiplied by flank atom pairs
// afterwards (the unit atom recovers one-sided and bare instances).  Flank
// atoms range over the full degree bound rather than the substitution depth;
// that reaches every product the wrapped families witness and more, and all
// of them lie inside the closure.
inline GeneratedSpace tIdealConsequencesInBound(const std::vector<StarPolynomial>& gens,
                                                const std::vector<Variable>& alphabet,
                                                unsigned maxDegree, EvalMode mode,
                                                const ConsequenceStrategy& strategy = {}) {
    if (gens.empty()) throw MissingParameterError("no generators given");
    const FieldDescriptor* F = gens.front().field();
    for (auto& g : gens)
        if (g.field() != F) throw DescriptorMismatchError("generators over different fields");
    requireModeField(mode, F);

    WordUniverse uni = WordUniverse::boundedDegree(alphabet, maxDegree);
    const std::size_t full = uni.size();
    GeneratedSpace out{std::move(uni), SpanBasis(F, full)};
    auto atomsY = detail::substitutionAtoms(VarKind::Y, alphabet, strategy.maxSubstDegree, F);
    auto atomsZ = detail::substitutionAtoms(VarKind::Z, alphabet, strategy.maxSubstDegree, F);

    // Flank atoms ordered by word length.  The symmetric atoms start with
    // the unit, so the list covers bare and one-sided products as well.
    unsigned flankDepth = maxDegree > 0 ? maxDegree - 1 : 0;
    std::vector<StarPolynomial> flanks =
        detail::substitutionAtoms(VarKind::Y, alphabet, flankDepth, F);
    for (auto& a : detail::substitutionAtoms(VarKind::Z, alphabet, flankDepth, F))
        flanks.push_back(a);
    std::stable_sort(flanks.begin(), flanks.end(),
                     [](const StarPolynomial& a, const StarPolynomial& b) {
                         return detail::maxWordDegree(a) < detail::maxWordDegree(b);
                     });
    std::vector<unsigned> flankDeg;
    flankDeg.reserve(flanks.size());
    for (auto& a : flanks) flankDeg.push_back(detail::maxWordDegree(a));

    // Base generators: the given ones and their involutes, scaled to first
    // coefficient one and deduplicated (a scalar multiple generates the same
    // closure).
    std::vector<StarPolynomial> base;
    std::set<std::string> seenGens;
    auto pushGen = [&](StarPolynomial g) {
        if (g.isZero()) return;
        g = (F->one() / g.terms().begin()->second) * g;
        if (seenGens.insert(g.str()).second) base.push_back(std::move(g));
    };
    for (auto& g : gens) {
        pushGen(g);
        pushGen(g.involute());
    }

    auto insertMember = [&](const StarPolynomial& p) {
        if (p.isZero()) return;
        if (mode == EvalMode::FiniteExhaustive) {
            out.span.insert(out.universe.coordinates(p));
        } else {
            for (auto& [md, comp] : p.multihomogeneousComponents())
                out.span.insert(out.universe.coordinates(comp));
        }
    };

    std::set<std::string> seenInstances;
    for (auto& g : base) {
        if (out.span.rank() == full) break;
        detail::enumerateInstances(
            g, atomsY, atomsZ, strategy, maxDegree, out.instancesUsed, out.instancesSkipped,
            [&](const StarPolynomial& raw) {
                if (raw.isZero()) return true;
                StarPolynomial inst = (F->one() / raw.terms().begin()->second) * raw;
                if (!seenInstances.insert(inst.str()).second) return true;
                unsigned di = detail::maxWordDegree(inst);
                for (std::size_t i = 0; i < flanks.size(); ++i) {
                    if (flankDeg[i] + di > maxDegree) break;
                    for (std::size_t j = 0; j < flanks.size(); ++j) {
                        if (flankDeg[i] + di + flankDeg[j] > maxDegree) break;
                        insertMember(flanks[i] * inst * flanks[j]);
                        if (out.span.rank() == full) return false;
                    }
                }
                return true;
            });
    }
    return out;
}

inline bool spanContainsPolynomial(const GeneratedSpace& g, const StarPolynomial& p) {
    if (!g.universe.containsSupport(p)) return false;
    return g.span.contains(g.universe.coordinates(p));
}

// ---------------------------------------------------------------------------
// Complementary bases and quotient coordinates.
// ---------------------------------------------------------------------------

struct ComplementCheck {
    std::size_t sliceDim = 0;
    std::size_t identityDim = 0;
    std::size_t basisCount = 0;
    std::size_t jointRank = 0;
    bool complementary = false; // identityDim + basisCount == sliceDim == jointRank
};

// Do the given slice-supported polynomials form a basis of the slice modulo
// its identity subspace?
inline ComplementCheck checkComplementary(const SliceSpace& identities,
                                          const std::vector<StarPolynomial>& basis,
                                          const FieldDescriptor* F) {
    ComplementCheck c;
    c.sliceDim = identities.universe.size();
    c.identityDim = identities.space.rank();
    c.basisCount = basis.size();
    SpanBasis joint(F, c.sliceDim);
    for (auto& row : identities.space.rows()) joint.insert(row);
    for (auto& b : basis) joint.insert(identities.universe.coordinates(b));
    c.jointRank = joint.rank();
    c.complementary =
        c.identityDim + c.basisCount == c.sliceDim && c.jointRank == c.sliceDim;
    return c;
}

// Coordinates of f with respect to `basis` modulo the identities of f's
// slice: the unique c with f - sum c_i basis_i an identity.  f and the basis
// must be multihomogeneous of a common multidegree, and the basis must be
// complementary to the identity subspace of that slice.
inline std::vector<FieldElement> quotientCoordinates(const StarPolynomial& f,
                                                     const std::vector<StarPolynomial>& basis,
                                                     InvolutionKind kind, EvalMode mode) {
    const FieldDescriptor* F = f.field();
    auto md = f.multiDegree();
    if (!md) throw UniverseMismatchError("polynomial is not multihomogeneous");
    for (auto& b : basis) {
        auto bd = b.multiDegree();
        if (!bd || !(*bd == *md))
            throw UniverseMismatchError("basis polynomial " + b.str() +
                                        " lies outside the slice of " + f.str());
    }
    SliceSpace ids = identitySpaceOfSlice(*md, kind, mode, F);
    ComplementCheck c = checkComplementary(ids, basis, F);
    if (!c.complementary)
        throw BasisNotComplementaryError(
            "basis of size " + std::to_string(c.basisCount) + " is not complementary: slice dim " +
                std::to_string(c.sliceDim) + ", identity dim " + std::to_string(c.identityDim) +
                ", joint rank " + std::to_string(c.jointRank),
            c.sliceDim, c.identityDim, c.basisCount, c.jointRank);

    const std::size_t d = c.sliceDim, k = basis.size();
    SpanBasis aug(F, d + k);
    auto widen = [&](const std::vector<FieldElement>& v, std::size_t tag) {
        std::vector<FieldElement> w(d + k, F->zero());
        for (std::size_t i = 0; i < d; ++i) w[i] = v[i];
        if (tag < k) w[d + tag] = F->one();
        return w;
    };
    for (auto& row : ids.space.rows()) aug.insert(widen(row, k));
    for (std::size_t i = 0; i < k; ++i)
        aug.insert(widen(ids.universe.coordinates(basis[i]), i));

    std::vector<FieldElement> target = widen(ids.universe.coordinates(f), k);
    std::vector<FieldElement> residual = aug.reduce(target);
    // Complementarity makes the word part reduce to zero; the tracking part
    // holds minus the coordinates.
    std::vector<FieldElement> coords;
    coords.reserve(k);
    for (std::size_t i = 0; i < k; ++i) coords.push_back(-residual[d + i]);
    return coords;
}

} // namespace starpi

#endif // STARPI_DECISION_HPP

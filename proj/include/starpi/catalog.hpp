#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "starpi/errors.hpp"
#include "starpi/field.hpp"
#include "starpi/freealg.hpp"
#include "starpi/parser.hpp"
#include "starpi/ut2.hpp"

// Named generator sets and quotient basis families for the identity and
// central-polynomial structure of UT2 under its two involutions.  Each named
// statement carries its generators as polynomial text in the library grammar;
// the text is parsed on first use over the requested coefficient field, so
// every catalog access doubles as a parser round trip.

namespace starpi {

// ---------------------------------------------------------------------------
// Statement identifiers.
// ---------------------------------------------------------------------------

enum class TheoremId : std::uint8_t {
    IdStarInfinite,     // T(*)-ideal generators of Id(UT2, star), infinite field
    IdStarFinite,       // ... finite field with q elements
    IdSInfinite,        // T(*)-ideal generators of Id(UT2, s), infinite field
    IdSFinite,          // ... finite field with q elements
    CentralStarChar0,   // C(UT2, star) = Id + <z1*z2>^{TS(*)} + F, char 0
    CentralStarInfCharP,// C(UT2, star) = Id + <z1*z2> + <y1^p>, infinite char p
    CentralStarFinite,  // C(UT2, star) over F_q via the l-indexed family
    CentralS,           // C(UT2, s) = Id + <y1>^{TS(*)}, any odd characteristic
    BasisStarInfinite,  // quotient basis words modulo Id(UT2, star), infinite
    BasisStarFinite,    // ... finite field, exponents < q and Lambda-gated
    CommutationLemma,   // z-prefix permutation / commutator insertion relations
    EvenZLemma,         // even-length z products are star-central
    PowerPQLemma,       // y1^(p*q) - y1^p vanishes over the field with q = p^k
    WrapIdentity,       // flanked products generating a T(*)-ideal as a T(*)-space
};

inline const std::vector<TheoremId>& allTheorems() {
    static const std::vector<TheoremId> ids = {
        TheoremId::IdStarInfinite,      TheoremId::IdStarFinite,
        TheoremId::IdSInfinite,         TheoremId::IdSFinite,
        TheoremId::CentralStarChar0,    TheoremId::CentralStarInfCharP,
        TheoremId::CentralStarFinite,   TheoremId::CentralS,
        TheoremId::BasisStarInfinite,   TheoremId::BasisStarFinite,
        TheoremId::CommutationLemma,    TheoremId::EvenZLemma,
        TheoremId::PowerPQLemma,        TheoremId::WrapIdentity,
    };
    return ids;
}

inline const char* theoremName(TheoremId id) {
    switch (id) {
        case TheoremId::IdStarInfinite: return "IdStarInfinite";
        case TheoremId::IdStarFinite: return "IdStarFinite";
        case TheoremId::IdSInfinite: return "IdSInfinite";
        case TheoremId::IdSFinite: return "IdSFinite";
        case TheoremId::CentralStarChar0: return "CentralStarChar0";
        case TheoremId::CentralStarInfCharP: return "CentralStarInfCharP";
        case TheoremId::CentralStarFinite: return "CentralStarFinite";
        case TheoremId::CentralS: return "CentralS";
        case TheoremId::BasisStarInfinite: return "BasisStarInfinite";
        case TheoremId::BasisStarFinite: return "BasisStarFinite";
        case TheoremId::CommutationLemma: return "CommutationLemma";
        case TheoremId::EvenZLemma: return "EvenZLemma";
        case TheoremId::PowerPQLemma: return "PowerPQLemma";
        case TheoremId::WrapIdentity: return "WrapIdentity";
    }
    return "?";
}

inline std::optional<TheoremId> theoremByName(const std::string& name) {
    for (TheoremId id : allTheorems())
        if (name == theoremName(id)) return id;
    return std::nullopt;
}

// Which coefficient fields a statement speaks about.
enum class FieldRegime : std::uint8_t {
    Any,          // every field of odd characteristic
    Infinite,     // infinite fields (generic evaluation modes)
    Char0,        // characteristic zero
    InfiniteCharP,// infinite fields of odd characteristic p
    Finite,       // the finite field with q elements
};

inline const char* regimeName(FieldRegime r) {
    switch (r) {
        case FieldRegime::Any: return "any odd-characteristic";
        case FieldRegime::Infinite: return "infinite";
        case FieldRegime::Char0: return "characteristic-zero";
        case FieldRegime::InfiniteCharP: return "infinite positive-characteristic";
        case FieldRegime::Finite: return "finite";
    }
    return "?";
}

// Whether the catalogued polynomials vanish identically or evaluate centrally.
enum class CatalogProperty : std::uint8_t { Identity, Central };

// ---------------------------------------------------------------------------
// Parameters: coefficient field plus the exponent parameters q and p.
// ---------------------------------------------------------------------------

struct CatalogParams {
    const FieldDescriptor* field = nullptr;
    std::optional<unsigned long> q; // defaults to |field| when finite
    std::optional<unsigned long> p; // defaults to char(field) when positive
};

namespace detail {

struct ResolvedQP {
    unsigned long q = 0; // 0 = unavailable
    unsigned long p = 0;
};

inline ResolvedQP resolveQP(const CatalogParams& params, bool needsQ, bool needsP) {
    if (!params.field) throw MissingParameterError("catalog access requires a coefficient field");
    const FieldDescriptor* F = params.field;
    ResolvedQP r;
    if (params.q)
        r.q = *params.q;
    else if (F->isFinite())
        r.q = static_cast<unsigned long>(*F->cardinality());
    if (params.p)
        r.p = *params.p;
    else if (F->characteristic() > 0)
        r.p = F->characteristic();

    if (needsQ && r.q == 0)
        throw MissingParameterError("statement requires the field-size parameter q");
    if (needsP && r.p == 0)
        throw MissingParameterError("statement requires the characteristic parameter p");
    // Explicit parameters must agree with a finite coefficient field: the
    // generator exponents are tied to the field the polynomials live over.
    if (F->isFinite()) {
        if (r.q != 0 && r.q != static_cast<unsigned long>(*F->cardinality()))
            throw InconsistentPQError("q does not match the coefficient field size");
        if (r.p != 0 && r.p != F->characteristic())
            throw InconsistentPQError("p does not match the coefficient field characteristic");
    }
    // q must be a power of p whenever both are pinned down.
    if (r.q != 0 && r.p != 0) {
        if (r.p < 2) throw InconsistentPQError("characteristic parameter must be at least 2");
        unsigned long t = r.p;
        while (t < r.q) t *= r.p;
        if (t != r.q) throw InconsistentPQError("q is not a power of p");
    }
    return r;
}

// Replace every "{key}" in the template by its value; keys are the small
// arithmetic combinations of q, p, and the family index l used by the
// generator displays.
inline std::string expandTemplate(const std::string& text,
                                  const std::map<std::string, unsigned long>& values) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] != '{') {
            out += text[i++];
            continue;
        }
        std::size_t close = text.find('}', i);
        if (close == std::string::npos) throw Error("unterminated placeholder in catalog text");
        std::string key = text.substr(i + 1, close - i - 1);
        auto it = values.find(key);
        if (it == values.end()) throw Error("unknown placeholder {" + key + "} in catalog text");
        out += std::to_string(it->second);
        i = close + 1;
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// The embedded statements.
// ---------------------------------------------------------------------------

struct CatalogEntry {
    TheoremId id;
    InvolutionKind kind;
    FieldRegime regime;
    CatalogProperty property;
    bool needsQ = false;
    bool needsP = false;
    const char* statement;               // the mathematical claim, in words
    std::vector<const char*> templates;  // generator text; {q}, {p}, ... expand
};

inline const std::vector<CatalogEntry>& catalogEntries() {
    static const std::vector<CatalogEntry> entries = {
        {TheoremId::IdStarInfinite, InvolutionKind::Star, FieldRegime::Infinite,
         CatalogProperty::Identity, false, false,
         "Over an infinite field of odd characteristic, Id(UT2, star) is the "
         "T(*)-ideal generated by these four polynomials.",
         {"[y1,y2]", "[z1,z2]", "[y1,z1]*[y2,z2]", "z1*y1*z2-z2*y1*z1"}},

        {TheoremId::IdStarFinite, InvolutionKind::Star, FieldRegime::Finite,
         CatalogProperty::Identity, true, false,
         "Over the finite field with q elements (odd characteristic), "
         "Id(UT2, star) is the T(*)-ideal generated by these nine polynomials.",
         {"[y1,y2]", "[z1,z2]", "[y1,z1]*[y2,z2]", "z1*y1*z2-z2*y1*z1",
          "(y1^{q}-y1)*[z1,y2]", "(y1^{q}-y1)*(y2^{q}-y2)", "z1^{q}-z1",
          "(z1^{q-1}-1)*[z1,y1]", "(y1^{q}-y1)*z1-1/2*[z1,y1]"}},

        {TheoremId::IdSInfinite, InvolutionKind::S, FieldRegime::Infinite,
         CatalogProperty::Identity, false, false,
         "Over an infinite field of odd characteristic, Id(UT2, s) is the "
         "T(*)-ideal generated by these four polynomials.",
         {"[y1,y2]", "[z1,y1]", "[z1,z2]*[z3,z4]", "z1*z2*z3-z3*z2*z1"}},

        {TheoremId::IdSFinite, InvolutionKind::S, FieldRegime::Finite,
         CatalogProperty::Identity, true, false,
         "Over the finite field with q elements (odd characteristic), "
         "Id(UT2, s) is the T(*)-ideal generated by these nine polynomials.",
         {"[y1,y2]", "[z1,y1]", "[z1,z2]*[z3,z4]", "z1*z2*z3-z3*z2*z1",
          "y1^{q}-y1", "(z1^{q}-z1)*(z2^{q}-z2)", "z1^{q+1}-z1^2",
          "(z1^{q}-z1)*z2+z2*(z1^{q}-z1)", "[z1,z2]*(z3^{q}-z3)"}},

        {TheoremId::CentralStarChar0, InvolutionKind::Star, FieldRegime::Char0,
         CatalogProperty::Central, false, false,
         "In characteristic zero, C(UT2, star) = Id(UT2, star) + "
         "<z1*z2>^{TS(*)} + F.",
         {"z1*z2", "1"}},

        {TheoremId::CentralStarInfCharP, InvolutionKind::Star, FieldRegime::InfiniteCharP,
         CatalogProperty::Central, false, true,
         "Over an infinite field of odd characteristic p, C(UT2, star) = "
         "Id(UT2, star) + <z1*z2>^{TS(*)} + <y1^p>^{TS(*)}.",
         {"z1*z2", "y1^{p}"}},

        {TheoremId::CentralStarFinite, InvolutionKind::Star, FieldRegime::Finite,
         CatalogProperty::Central, true, true,
         "Over the finite field with q = p^k elements (p odd), C(UT2, star) = "
         "<l*y1*(y2^(q+l-1)-y2^l)+y1^q*y2^l : 1 <= l <= p>^{TS(*)} + "
         "<z1*z2>^{TS(*)} + Id(UT2, star).",
         // The first template is instantiated once per l in 1..p.
         {"{l}*y1*(y2^{q+l-1}-y2^{l})+y1^{q}*y2^{l}", "z1*z2"}},

        {TheoremId::CentralS, InvolutionKind::S, FieldRegime::Any,
         CatalogProperty::Central, false, false,
         "Over any field of odd characteristic, C(UT2, s) = Id(UT2, s) + "
         "<y1>^{TS(*)}.",
         {"y1"}},

        {TheoremId::BasisStarInfinite, InvolutionKind::Star, FieldRegime::Infinite,
         CatalogProperty::Identity, false, false,
         "Over an infinite field, the words y1^s1...yn^sn z1^r1...zm^rm and "
         "y1^s1...yn^sn z1^r1...zm^(rm-1) [zm,yk] (rm >= 1) form a basis of "
         "the free *-algebra modulo Id(UT2, star).",
         {}},

        {TheoremId::BasisStarFinite, InvolutionKind::Star, FieldRegime::Finite,
         CatalogProperty::Identity, true, false,
         "Over the finite field with q elements, the same two word families "
         "with all exponents below q (rm >= 1), together with the pure-y words "
         "whose exponent tuple lies in Lambda_n, form a basis of the free "
         "*-algebra modulo Id(UT2, star).",
         {}},

        {TheoremId::CommutationLemma, InvolutionKind::Star, FieldRegime::Any,
         CatalogProperty::Identity, false, false,
         "Modulo Id(UT2, star), the z letters in front of a commutator [z,y1] "
         "may be permuted arbitrarily, and moving the commutator left past j "
         "trailing z letters multiplies the class by (-1)^j.",
         {}},

        {TheoremId::EvenZLemma, InvolutionKind::Star, FieldRegime::Any,
         CatalogProperty::Central, false, false,
         "A product of z letters is star-central exactly when its length is "
         "even; these even-length witnesses are central.",
         {"z1*z2", "z1*z2*z3*z4"}},

        {TheoremId::PowerPQLemma, InvolutionKind::Star, FieldRegime::Finite,
         CatalogProperty::Identity, true, true,
         "Over the finite field with q = p^k elements, y1^(p*q) - y1^p lies "
         "in Id(UT2, star).",
         {"y1^{pq}-y1^{p}"}},

        {TheoremId::WrapIdentity, InvolutionKind::Star, FieldRegime::Any,
         CatalogProperty::Identity, false, false,
         "For an identity f, the four flanked products u*f*v with u, v fresh "
         "symmetric or skew variables generate, as a T(*)-space and together "
         "with the flanks of f*, the whole T(*)-ideal of f; the unit "
         "substitution recovers f and its one-sided products.  Shown here for "
         "f = [y1,y2].",
         {"y3*[y1,y2]*y4", "y3*[y1,y2]*z1", "z1*[y1,y2]*y3", "z1*[y1,y2]*z2"}},
    };
    return entries;
}

inline const CatalogEntry& catalogEntry(TheoremId id) {
    for (const CatalogEntry& e : catalogEntries())
        if (e.id == id) return e;
    throw Error("unknown statement identifier");
}

// ---------------------------------------------------------------------------
// Generator text and parsed generators.
// ---------------------------------------------------------------------------

namespace detail {

// Relations asserting z-prefix permutation invariance and signed commutator
// insertion, for up to three prefix letters: each returned text is a
// difference (or signed sum) of two commutator-tailed words that vanishes
// modulo the star identities.
inline std::vector<std::string> commutationTexts() {
    std::vector<std::string> out;
    for (unsigned m = 0; m <= 3; ++m) {
        auto wordText = [&](const std::vector<unsigned>& order) {
            std::string s;
            for (unsigned i = 0; i < m; ++i) s += "z" + std::to_string(order[i]) + "*";
            s += "[z" + std::to_string(order[m]) + ",y1]";
            return s;
        };
        std::vector<unsigned> identity(m + 1);
        std::iota(identity.begin(), identity.end(), 1u);
        const std::string base = wordText(identity);

        std::vector<unsigned> perm = identity;
        while (std::next_permutation(perm.begin(), perm.end()))
            out.push_back(wordText(perm) + "-" + base);

        for (unsigned i = 0; i < m; ++i) {
            std::string moved;
            for (unsigned t = 1; t <= i; ++t) moved += "z" + std::to_string(t) + "*";
            moved += "[z" + std::to_string(m + 1) + ",y1]";
            for (unsigned t = i + 1; t <= m; ++t) moved += "*z" + std::to_string(t);
            const bool evenShift = (m - i) % 2 == 0;
            out.push_back(base + (evenShift ? "-" : "+") + moved);
        }
    }
    return out;
}

} // namespace detail

// The generator list as text in the polynomial grammar, with q, p, and the
// family index expanded to decimal literals.
inline std::vector<std::string> generatorTextFor(TheoremId id, const CatalogParams& params) {
    if (id == TheoremId::BasisStarInfinite)
        return generatorTextFor(TheoremId::IdStarInfinite, params);
    if (id == TheoremId::BasisStarFinite)
        return generatorTextFor(TheoremId::IdStarFinite, params);
    if (id == TheoremId::CommutationLemma) {
        detail::resolveQP(params, false, false); // field presence check
        return detail::commutationTexts();
    }

    const CatalogEntry& entry = catalogEntry(id);
    detail::ResolvedQP qp = detail::resolveQP(params, entry.needsQ, entry.needsP);
    std::map<std::string, unsigned long> values;
    if (qp.q != 0) {
        values["q"] = qp.q;
        values["q-1"] = qp.q - 1;
        values["q+1"] = qp.q + 1;
    }
    if (qp.p != 0) values["p"] = qp.p;
    if (qp.q != 0 && qp.p != 0) values["pq"] = qp.p * qp.q;

    std::vector<std::string> out;
    if (id == TheoremId::CentralStarFinite) {
        for (unsigned long l = 1; l <= qp.p; ++l) {
            values["l"] = l;
            values["q+l-1"] = qp.q + l - 1;
            out.push_back(detail::expandTemplate(entry.templates[0], values));
        }
        out.push_back(entry.templates[1]);
        return out;
    }
    for (const char* t : entry.templates) out.push_back(detail::expandTemplate(t, values));
    return out;
}

// The named statement's generators, parsed over the requested field.
inline std::vector<StarPolynomial> generatorsFor(TheoremId id, const CatalogParams& params) {
    std::vector<StarPolynomial> out;
    for (const std::string& text : generatorTextFor(id, params))
        out.push_back(parsePolynomial(text, params.field));
    return out;
}

// ---------------------------------------------------------------------------
// The Lambda exponent set gating the pure-y basis family over F_q.
// ---------------------------------------------------------------------------

struct LambdaTuple {
    std::vector<unsigned long> exponents;
    unsigned long q = 0;
};

// All entries below 2q, and at most one entry at q or above.
inline bool isLambda(const LambdaTuple& t) {
    std::size_t large = 0;
    for (unsigned long s : t.exponents) {
        if (s >= 2 * t.q) return false;
        if (s >= t.q) ++large;
    }
    return large <= 1;
}

// ---------------------------------------------------------------------------
// Quotient basis words of a multidegree slice.
// ---------------------------------------------------------------------------

namespace detail {

// The slice's canonical word (y letters by ascending index, then z letters),
// with one occurrence of y_dropY and, when dropLastZ is set, one occurrence
// of the highest z letter removed.
inline Word sliceBasisWord(const MultiDegree& slice, std::uint32_t dropY, bool dropLastZ) {
    std::vector<Variable> letters;
    for (auto& [i, e] : slice.y) {
        unsigned n = e - (i == dropY ? 1 : 0);
        for (unsigned t = 0; t < n; ++t) letters.push_back(yVar(i));
    }
    const std::uint32_t last = slice.z.empty() ? 0 : slice.z.rbegin()->first;
    for (auto& [i, e] : slice.z) {
        unsigned n = e - (dropLastZ && i == last ? 1 : 0);
        for (unsigned t = 0; t < n; ++t) letters.push_back(zVar(i));
    }
    return Word(std::move(letters));
}

} // namespace detail

// All basis elements of the quotient basis family whose multidegree equals
// the slice's.  For the finite family, every exponent that appears in the
// printed word must be below q, and pure-y slices are gated by Lambda.
inline std::vector<StarPolynomial> basisWordsForSlice(TheoremId id, const MultiDegree& slice,
                                                      const CatalogParams& params) {
    if (id != TheoremId::BasisStarInfinite && id != TheoremId::BasisStarFinite)
        throw Error(std::string("no basis family attached to ") + theoremName(id));
    if (!params.field) throw MissingParameterError("basis words require a coefficient field");
    const FieldDescriptor* F = params.field;
    const bool finite = id == TheoremId::BasisStarFinite;
    unsigned long q = 0;
    if (finite) q = detail::resolveQP(params, true, false).q;

    std::vector<StarPolynomial> out;
    if (slice.z.empty()) {
        // Pure-y (or constant) slice: the plain word, Lambda-gated over F_q.
        bool admissible = true;
        if (finite) {
            LambdaTuple t;
            t.q = q;
            for (auto& [i, e] : slice.y) t.exponents.push_back(e);
            admissible = isLambda(t);
        }
        if (admissible)
            out.push_back(StarPolynomial::fromWord(F, detail::sliceBasisWord(slice, 0, false)));
        return out;
    }

    const bool zBelowQ = !finite || std::all_of(slice.z.begin(), slice.z.end(),
                                                [&](auto& kv) { return kv.second < q; });
    auto yBelowQ = [&](std::uint32_t except) {
        if (!finite) return true;
        for (auto& [i, e] : slice.y) {
            unsigned long eff = e - (i == except ? 1 : 0);
            if (eff >= q) return false;
        }
        return true;
    };

    // Plain family: the unique slice word, all exponents below q over F_q.
    if (zBelowQ && yBelowQ(0))
        out.push_back(StarPolynomial::fromWord(F, detail::sliceBasisWord(slice, 0, false)));

    // Commutator family: one word per y letter of the slice, with the tail
    // [z_last, y_k] absorbing one occurrence of each.
    const std::uint32_t last = slice.z.rbegin()->first;
    for (auto& [k, e] : slice.y) {
        if (!(zBelowQ && yBelowQ(k))) continue;
        StarPolynomial prefix = StarPolynomial::fromWord(F, detail::sliceBasisWord(slice, k, true));
        StarPolynomial tail = commutator(StarPolynomial::variable(F, zVar(last)),
                                         StarPolynomial::variable(F, yVar(k)));
        out.push_back(prefix * tail);
    }
    return out;
}

} // namespace starpi

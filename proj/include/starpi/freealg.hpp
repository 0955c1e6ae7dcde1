#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starpi/errors.hpp"
#include "starpi/field.hpp"

namespace starpi {

// Letters of the free unitary algebra with involution: y-variables are
// symmetric (fixed by the involution), z-variables are skew (negated).
// Indices start at 1.
enum class VarKind : std::uint8_t { Y, Z };

struct Variable {
    VarKind kind = VarKind::Y;
    std::uint32_t index = 1;

    friend bool operator==(const Variable& a, const Variable& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
    // Y before Z, then by index; this induces the letterwise word order.
    friend bool operator<(const Variable& a, const Variable& b) {
        if (a.kind != b.kind) return a.kind == VarKind::Y;
        return a.index < b.index;
    }
    std::string str() const {
        return (kind == VarKind::Y ? "y" : "z") + std::to_string(index);
    }
};

inline Variable yVar(std::uint32_t i) { return {VarKind::Y, i}; }
inline Variable zVar(std::uint32_t i) { return {VarKind::Z, i}; }

// Multidegree of a word or multihomogeneous polynomial: degree per variable,
// only nonzero entries stored.
struct MultiDegree {
    std::map<std::uint32_t, unsigned> y, z;

    unsigned total() const {
        unsigned t = 0;
        for (auto& [i, d] : y) t += d;
        for (auto& [i, d] : z) t += d;
        return t;
    }
    unsigned yDegree(std::uint32_t i) const {
        auto it = y.find(i);
        return it == y.end() ? 0 : it->second;
    }
    unsigned zDegree(std::uint32_t i) const {
        auto it = z.find(i);
        return it == z.end() ? 0 : it->second;
    }
    friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
        return a.y == b.y && a.z == b.z;
    }
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) {
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    }
    std::string str() const {
        if (y.empty() && z.empty()) return "(empty)";
        std::string s;
        for (auto& [i, d] : y) s += (s.empty() ? "" : " ") + yVar(i).str() + ":" + std::to_string(d);
        for (auto& [i, d] : z) s += (s.empty() ? "" : " ") + zVar(i).str() + ":" + std::to_string(d);
        return s;
    }
};

// A word over the variables; the empty word is the algebra unit.  Words are
// ordered graded-lexicographically: by length, then letterwise.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Variable> letters) : letters_(std::move(letters)) {}
    static Word unit() { return Word(); }
    static Word single(Variable v) { return Word({v}); }

    const std::vector<Variable>& letters() const { return letters_; }
    unsigned degree() const { return static_cast<unsigned>(letters_.size()); }
    bool isUnit() const { return letters_.empty(); }

    Word concat(const Word& o) const {
        std::vector<Variable> ls;
        ls.reserve(letters_.size() + o.letters_.size());
        ls.insert(ls.end(), letters_.begin(), letters_.end());
        ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
        return Word(std::move(ls));
    }
    unsigned zCount() const {
        unsigned n = 0;
        for (auto& v : letters_)
            if (v.kind == VarKind::Z) ++n;
        return n;
    }
    Word reversed() const {
        std::vector<Variable> ls(letters_.rbegin(), letters_.rend());
        return Word(std::move(ls));
    }
    MultiDegree multiDegree() const {
        MultiDegree d;
        for (auto& v : letters_) {
            if (v.kind == VarKind::Y)
                ++d.y[v.index];
            else
                ++d.z[v.index];
        }
        return d;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(),
                                            b.letters_.begin(), b.letters_.end());
    }

    // Letters joined by '*', consecutive repeats compressed to powers.
    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        std::size_t i = 0;
        while (i < letters_.size()) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            if (!s.empty()) s += "*";
            s += letters_[i].str();
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

private:
    std::vector<Variable> letters_;
};

// Element of the free unitary associative algebra with involution over a
// coefficient field: a finite sum of words with nonzero coefficients, kept in
// canonical (graded-lexicographic) order.
class StarPolynomial {
public:
    explicit StarPolynomial(const FieldDescriptor* f) : field_(f) {}

    static StarPolynomial zero(const FieldDescriptor* f) { return StarPolynomial(f); }
    static StarPolynomial unit(const FieldDescriptor* f) {
        StarPolynomial p(f);
        p.terms_.emplace(Word::unit(), f->one());
        return p;
    }
    static StarPolynomial variable(const FieldDescriptor* f, Variable v) {
        StarPolynomial p(f);
        p.terms_.emplace(Word::single(v), f->one());
        return p;
    }
    static StarPolynomial fromWord(const FieldDescriptor* f, const Word& w) {
        StarPolynomial p(f);
        p.terms_.emplace(w, f->one());
        return p;
    }
    static StarPolynomial constant(const FieldDescriptor* f, const FieldElement& c) {
        StarPolynomial p(f);
        if (!c.isZero()) p.terms_.emplace(Word::unit(), c);
        return p;
    }

    const FieldDescriptor* field() const { return field_; }
    const std::map<Word, FieldElement>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    // Maximum word length, or -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }
    FieldElement coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? field_->zero() : it->second;
    }
    std::vector<Word> support() const {
        std::vector<Word> ws;
        ws.reserve(terms_.size());
        for (auto& [w, c] : terms_) ws.push_back(w);
        return ws;
    }
    std::set<Variable> variables() const {
        std::set<Variable> vs;
        for (auto& [w, c] : terms_)
            for (auto& v : w.letters()) vs.insert(v);
        return vs;
    }

    void addTerm(const Word& w, const FieldElement& c) {
        if (c.isZero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    friend bool operator==(const StarPolynomial& a, const StarPolynomial& b) {
        a.requireSameField(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const StarPolynomial& a, const StarPolynomial& b) { return !(a == b); }

    friend StarPolynomial operator+(const StarPolynomial& a, const StarPolynomial& b) {
        a.requireSameField(b);
        StarPolynomial r = a;
        for (auto& [w, c] : b.terms_) r.addTerm(w, c);
        return r;
    }
    friend StarPolynomial operator-(const StarPolynomial& a, const StarPolynomial& b) {
        a.requireSameField(b);
        StarPolynomial r = a;
        for (auto& [w, c] : b.terms_) r.addTerm(w, -c);
        return r;
    }
    StarPolynomial operator-() const {
        StarPolynomial r(field_);
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend StarPolynomial operator*(const FieldElement& c, const StarPolynomial& a) {
        if (c.field() != a.field_)
            throw DescriptorMismatchError("scalar from a different field");
        StarPolynomial r(a.field_);
        if (c.isZero()) return r;
        for (auto& [w, k] : a.terms_) {
            FieldElement ck = c * k;
            if (!ck.isZero()) r.terms_.emplace(w, ck);
        }
        return r;
    }
    friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
        a.requireSameField(b);
        StarPolynomial r(a.field_);
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) r.addTerm(wa.concat(wb), ca * cb);
        return r;
    }

    StarPolynomial pow(unsigned e) const {
        StarPolynomial r = unit(field_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // The involution: reverses every word, multiplies by (-1)^(number of
    // z-letters), fixes coefficients.  An anti-automorphism of order two.
    StarPolynomial involute() const {
        StarPolynomial r(field_);
        for (auto& [w, c] : terms_) {
            FieldElement cc = (w.zCount() % 2 == 1) ? -c : c;
            r.terms_.emplace(w.reversed(), cc);
        }
        return r;
    }

    bool isSymmetric() const { return involute() == *this; }
    bool isSkew() const { return involute() == -*this; }

    // f = fPlus + fMinus with fPlus symmetric and fMinus skew (char != 2).
    std::pair<StarPolynomial, StarPolynomial> symSkewSplit() const {
        FieldElement half = field_->fromRatio(1, 2);
        StarPolynomial star = involute();
        return {half * (*this + star), half * (*this - star)};
    }

    bool isMultihomogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.begin()->first.multiDegree();
        for (auto& [w, c] : terms_)
            if (!(w.multiDegree() == d)) return false;
        return true;
    }
    // The common multidegree of a multihomogeneous polynomial.
    std::optional<MultiDegree> multiDegree() const {
        if (terms_.empty()) return MultiDegree{};
        auto d = terms_.begin()->first.multiDegree();
        for (auto& [w, c] : terms_)
            if (!(w.multiDegree() == d)) return std::nullopt;
        return d;
    }
    std::map<MultiDegree, StarPolynomial> multihomogeneousComponents() const {
        std::map<MultiDegree, StarPolynomial> comps;
        for (auto& [w, c] : terms_) {
            auto d = w.multiDegree();
            auto it = comps.find(d);
            if (it == comps.end()) it = comps.emplace(d, StarPolynomial(field_)).first;
            it->second.terms_.emplace(w, c);
        }
        return comps;
    }

    // Substitution along a *-endomorphism: every y-image must be symmetric and
    // every z-image skew; every variable of the polynomial needs an image.
    StarPolynomial substitute(const std::map<Variable, StarPolynomial>& images) const {
        validateImages(images);
        bool dropped = false;
        return substituteImpl(images, 0, false, dropped);
    }
    // Bounded variant used by the consequence engine: monomials are dropped as
    // soon as a partial product exceeds maxDegree (sound because word lengths
    // add along free multiplication).  Returns nothing if anything dropped.
    std::optional<StarPolynomial> substituteBounded(
        const std::map<Variable, StarPolynomial>& images, unsigned maxDegree) const {
        validateImages(images);
        bool dropped = false;
        StarPolynomial r = substituteImpl(images, maxDegree, true, dropped);
        if (dropped) return std::nullopt;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [w, c] : terms_) {
            std::string cs = c.str();
            bool negative = !cs.empty() && cs[0] == '-';
            std::string mag = negative ? cs.substr(1) : cs;
            if (first) {
                if (negative) s += "-";
                first = false;
            } else {
                s += negative ? " - " : " + ";
            }
            if (w.isUnit())
                s += mag;
            else if (mag == "1")
                s += w.str();
            else
                s += mag + "*" + w.str();
        }
        return s;
    }

private:
    void requireSameField(const StarPolynomial& o) const {
        if (field_ != o.field_)
            throw DescriptorMismatchError("polynomials over different fields");
    }
    void validateImages(const std::map<Variable, StarPolynomial>& images) const {
        for (auto& [v, g] : images) {
            if (g.field_ != field_)
                throw DescriptorMismatchError("substitution image over a different field");
            StarPolynomial star = g.involute();
            if (v.kind == VarKind::Y) {
                if (!(star == g))
                    throw SymmetryViolationError(v.str(), "image of " + v.str() +
                                                              " is not symmetric: " + g.str());
            } else {
                if (!(star == -g))
                    throw SymmetryViolationError(
                        v.str(), "image of " + v.str() + " is not skew: " + g.str());
            }
        }
        for (auto& [w, c] : terms_)
            for (auto& v : w.letters())
                if (!images.count(v))
                    throw MissingAssignmentError("no image for variable " + v.str());
    }
    static StarPolynomial mulBounded(const StarPolynomial& a, const StarPolynomial& b,
                                     unsigned cap, bool useCap, bool& dropped) {
        StarPolynomial r(a.field_);
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) {
                if (useCap && wa.degree() + wb.degree() > cap) {
                    dropped = true;
                    continue; // later words in b are at least as long
                }
                r.addTerm(wa.concat(wb), ca * cb);
            }
        return r;
    }
    StarPolynomial substituteImpl(const std::map<Variable, StarPolynomial>& images, unsigned cap,
                                  bool useCap, bool& dropped) const {
        StarPolynomial out(field_);
        for (auto& [w, c] : terms_) {
            StarPolynomial acc = constant(field_, c);
            for (auto& v : w.letters()) {
                acc = mulBounded(acc, images.at(v), cap, useCap, dropped);
                if (acc.isZero()) break;
            }
            out = out + acc;
        }
        return out;
    }

    const FieldDescriptor* field_ = nullptr;
    std::map<Word, FieldElement> terms_;
};

inline StarPolynomial commutator(const StarPolynomial& a, const StarPolynomial& b) {
    return a * b - b * a;
}

// Left-normed commutator [f1, f2, ..., fk] = [[f1, f2], ..., fk], k >= 2.
inline StarPolynomial leftNormedCommutator(const std::vector<StarPolynomial>& fs) {
    if (fs.size() < 2) throw Error("left-normed commutator needs at least two arguments");
    StarPolynomial acc = commutator(fs[0], fs[1]);
    for (std::size_t i = 2; i < fs.size(); ++i) acc = commutator(acc, fs[i]);
    return acc;
}

} // namespace starpi

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starpi/errors.hpp"
#include "starpi/field.hpp"

namespace starpi {

// Commutative indeterminates used for generic 2x2 upper-triangular
// evaluations.  Per free variable index i there are up to three coordinates:
// a_i and b_i carrying the symmetric part and c_i the skew part (their exact
// meaning depends on the involution).  Printed a<i>, b<i>, c<i>.
enum class CommRole : std::uint8_t { DiagA, CornerB, SkewC };

struct CommVar {
    CommRole role = CommRole::DiagA;
    std::uint32_t index = 1;

    friend bool operator==(const CommVar& a, const CommVar& b) {
        return a.role == b.role && a.index == b.index;
    }
    friend bool operator!=(const CommVar& a, const CommVar& b) { return !(a == b); }
    // Deterministic global order: by role, then index.
    friend bool operator<(const CommVar& a, const CommVar& b) {
        if (a.role != b.role) return static_cast<int>(a.role) < static_cast<int>(b.role);
        return a.index < b.index;
    }
    std::string str() const {
        static const char* names[] = {"a", "b", "c"};
        return std::string(names[static_cast<int>(role)]) + std::to_string(index);
    }
};

inline CommVar commA(std::uint32_t i) { return {CommRole::DiagA, i}; }
inline CommVar commB(std::uint32_t i) { return {CommRole::CornerB, i}; }
inline CommVar commC(std::uint32_t i) { return {CommRole::SkewC, i}; }

// A commutative monomial: sorted exponent vector with positive exponents.
class CommMonomial {
public:
    CommMonomial() = default;
    explicit CommMonomial(std::vector<std::pair<CommVar, unsigned>> exps)
        : exps_(std::move(exps)) {
        normalize();
    }
    static CommMonomial unit() { return CommMonomial(); }
    static CommMonomial variable(CommVar v) { return CommMonomial({{v, 1}}); }

    const std::vector<std::pair<CommVar, unsigned>>& exponents() const { return exps_; }
    bool isUnit() const { return exps_.empty(); }
    unsigned totalDegree() const {
        unsigned t = 0;
        for (auto& [v, e] : exps_) t += e;
        return t;
    }
    unsigned degreeOf(CommVar v) const {
        for (auto& [w, e] : exps_)
            if (w == v) return e;
        return 0;
    }
    CommMonomial mul(const CommMonomial& o) const {
        std::vector<std::pair<CommVar, unsigned>> out;
        out.reserve(exps_.size() + o.exps_.size());
        auto i = exps_.begin();
        auto j = o.exps_.begin();
        while (i != exps_.end() || j != o.exps_.end()) {
            if (j == o.exps_.end() || (i != exps_.end() && i->first < j->first))
                out.push_back(*i++);
            else if (i == exps_.end() || j->first < i->first)
                out.push_back(*j++);
            else {
                out.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        CommMonomial m;
        m.exps_ = std::move(out);
        return m;
    }

    friend bool operator==(const CommMonomial& a, const CommMonomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const CommMonomial& a, const CommMonomial& b) { return !(a == b); }
    // Graded order; ties broken so that among equal-degree monomials the one
    // concentrating degree on the earlier variable comes first:
    // a1^2 < a1*b1 < b1^2.
    friend bool operator<(const CommMonomial& a, const CommMonomial& b) {
        unsigned da = a.totalDegree(), db = b.totalDegree();
        if (da != db) return da < db;
        auto i = a.exps_.begin();
        auto j = b.exps_.begin();
        while (i != a.exps_.end() && j != b.exps_.end()) {
            if (i->first != j->first) return i->first < j->first;
            if (i->second != j->second) return i->second > j->second;
            ++i;
            ++j;
        }
        return false; // equal (same degree and all entries matched)
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (auto& [v, e] : exps_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    void normalize() {
        std::sort(exps_.begin(), exps_.end(),
                  [](auto& x, auto& y) { return x.first < y.first; });
        std::vector<std::pair<CommVar, unsigned>> out;
        for (auto& [v, e] : exps_) {
            if (e == 0) continue;
            if (!out.empty() && out.back().first == v)
                out.back().second += e;
            else
                out.emplace_back(v, e);
        }
        exps_ = std::move(out);
    }

    std::vector<std::pair<CommVar, unsigned>> exps_;
};

// A polynomial in the commutative indeterminates over a coefficient field.
class CommPolynomial {
public:
    explicit CommPolynomial(const FieldDescriptor* f) : field_(f) {}

    static CommPolynomial zero(const FieldDescriptor* f) { return CommPolynomial(f); }
    static CommPolynomial one(const FieldDescriptor* f) {
        return constant(f, f->one());
    }
    static CommPolynomial constant(const FieldDescriptor* f, const FieldElement& c) {
        CommPolynomial p(f);
        if (!c.isZero()) p.terms_.emplace(CommMonomial::unit(), c);
        return p;
    }
    static CommPolynomial variable(const FieldDescriptor* f, CommVar v) {
        CommPolynomial p(f);
        p.terms_.emplace(CommMonomial::variable(v), f->one());
        return p;
    }
    static CommPolynomial monomial(const FieldDescriptor* f, const CommMonomial& m,
                                   const FieldElement& c) {
        CommPolynomial p(f);
        if (!c.isZero()) p.terms_.emplace(m, c);
        return p;
    }

    const FieldDescriptor* field() const { return field_; }
    const std::map<CommMonomial, FieldElement>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    FieldElement coefficient(const CommMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_->zero() : it->second;
    }
    std::set<CommVar> variables() const {
        std::set<CommVar> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exponents()) vs.insert(v);
        return vs;
    }

    void addTerm(const CommMonomial& m, const FieldElement& c) {
        if (c.isZero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    friend bool operator==(const CommPolynomial& a, const CommPolynomial& b) {
        a.requireSameField(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CommPolynomial& a, const CommPolynomial& b) { return !(a == b); }

    friend CommPolynomial operator+(const CommPolynomial& a, const CommPolynomial& b) {
        a.requireSameField(b);
        CommPolynomial r = a;
        for (auto& [m, c] : b.terms_) r.addTerm(m, c);
        return r;
    }
    friend CommPolynomial operator-(const CommPolynomial& a, const CommPolynomial& b) {
        a.requireSameField(b);
        CommPolynomial r = a;
        for (auto& [m, c] : b.terms_) r.addTerm(m, -c);
        return r;
    }
    CommPolynomial operator-() const {
        CommPolynomial r(field_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend CommPolynomial operator*(const FieldElement& c, const CommPolynomial& a) {
        if (c.field() != a.field_)
            throw DescriptorMismatchError("scalar from a different field");
        CommPolynomial r(a.field_);
        if (c.isZero()) return r;
        for (auto& [m, k] : a.terms_) {
            FieldElement ck = c * k;
            if (!ck.isZero()) r.terms_.emplace(m, ck);
        }
        return r;
    }
    friend CommPolynomial operator*(const CommPolynomial& a, const CommPolynomial& b) {
        a.requireSameField(b);
        CommPolynomial r(a.field_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.addTerm(ma.mul(mb), ca * cb);
        return r;
    }
    CommPolynomial pow(unsigned e) const {
        CommPolynomial r = one(field_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Evaluation homomorphism at a point; every variable needs a value.
    FieldElement evalAt(const std::map<CommVar, FieldElement>& point) const {
        FieldElement acc = field_->zero();
        for (auto& [m, c] : terms_) {
            FieldElement v = c;
            for (auto& [var, e] : m.exponents()) {
                auto it = point.find(var);
                if (it == point.end())
                    throw MissingAssignmentError("no value for " + var.str());
                if (it->second.field() != field_)
                    throw DescriptorMismatchError("evaluation point over a different field");
                v = v * it->second.pow(e);
            }
            acc = acc + v;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool negative = !cs.empty() && cs[0] == '-';
            std::string mag = negative ? cs.substr(1) : cs;
            if (first) {
                if (negative) s += "-";
                first = false;
            } else {
                s += negative ? " - " : " + ";
            }
            if (m.isUnit())
                s += mag;
            else if (mag == "1")
                s += m.str();
            else
                s += mag + "*" + m.str();
        }
        return s;
    }

private:
    void requireSameField(const CommPolynomial& o) const {
        if (field_ != o.field_)
            throw DescriptorMismatchError("polynomials over different fields");
    }

    const FieldDescriptor* field_ = nullptr;
    std::map<CommMonomial, FieldElement> terms_;
};

} // namespace starpi

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "starpi/commpoly.hpp"
#include "starpi/errors.hpp"
#include "starpi/field.hpp"
#include "starpi/freealg.hpp"

namespace starpi {

// The two first-kind involutions on the 2x2 upper triangular matrices over a
// commutative ring: both swap the diagonal; S additionally negates the corner.
enum class InvolutionKind : std::uint8_t { Star, S };

inline std::string involutionName(InvolutionKind k) {
    return k == InvolutionKind::Star ? "star" : "s";
}

template <class R>
struct RingTraits;

template <>
struct RingTraits<FieldElement> {
    static FieldElement zero(const FieldDescriptor* f) { return f->zero(); }
    static FieldElement one(const FieldDescriptor* f) { return f->one(); }
    static FieldElement scale(const FieldElement& c, const FieldElement& x) { return c * x; }
    static bool isZero(const FieldElement& x) { return x.isZero(); }
};

template <>
struct RingTraits<CommPolynomial> {
    static CommPolynomial zero(const FieldDescriptor* f) { return CommPolynomial::zero(f); }
    static CommPolynomial one(const FieldDescriptor* f) { return CommPolynomial::one(f); }
    static CommPolynomial scale(const FieldElement& c, const CommPolynomial& x) { return c * x; }
    static bool isZero(const CommPolynomial& x) { return x.isZero(); }
};

// An upper triangular 2x2 matrix [e11, e12; 0, e22] with entries in R, where
// R is the coefficient field itself or a commutative polynomial ring over it.
template <class R>
struct UT2Matrix {
    R e11, e12, e22;

    static UT2Matrix zero(const FieldDescriptor* f) {
        return {RingTraits<R>::zero(f), RingTraits<R>::zero(f), RingTraits<R>::zero(f)};
    }
    static UT2Matrix identity(const FieldDescriptor* f) {
        return {RingTraits<R>::one(f), RingTraits<R>::zero(f), RingTraits<R>::one(f)};
    }

    friend UT2Matrix operator+(const UT2Matrix& a, const UT2Matrix& b) {
        return {a.e11 + b.e11, a.e12 + b.e12, a.e22 + b.e22};
    }
    friend UT2Matrix operator-(const UT2Matrix& a, const UT2Matrix& b) {
        return {a.e11 - b.e11, a.e12 - b.e12, a.e22 - b.e22};
    }
    UT2Matrix operator-() const { return {-e11, -e12, -e22}; }
    friend UT2Matrix operator*(const UT2Matrix& a, const UT2Matrix& b) {
        return {a.e11 * b.e11, a.e11 * b.e12 + a.e12 * b.e22, a.e22 * b.e22};
    }
    UT2Matrix scaled(const FieldElement& c) const {
        return {RingTraits<R>::scale(c, e11), RingTraits<R>::scale(c, e12),
                RingTraits<R>::scale(c, e22)};
    }
    friend bool operator==(const UT2Matrix& a, const UT2Matrix& b) {
        return a.e11 == b.e11 && a.e12 == b.e12 && a.e22 == b.e22;
    }
    friend bool operator!=(const UT2Matrix& a, const UT2Matrix& b) { return !(a == b); }

    bool isZero() const {
        return RingTraits<R>::isZero(e11) && RingTraits<R>::isZero(e12) &&
               RingTraits<R>::isZero(e22);
    }
    // Central in the full upper triangular algebra: a scalar matrix.
    bool isCentral() const {
        return RingTraits<R>::isZero(e12) && RingTraits<R>::isZero(e11 - e22);
    }

    UT2Matrix involve(InvolutionKind k) const {
        if (k == InvolutionKind::Star) return {e22, e12, e11};
        return {e22, -e12, e11};
    }

    UT2Matrix pow(unsigned i, const FieldDescriptor* f) const {
        UT2Matrix r = identity(f);
        for (unsigned n = 0; n < i; ++n) r = r * *this;
        return r;
    }

    std::string str() const {
        auto s = [](const R& x) {
            if constexpr (std::is_same_v<R, FieldElement>)
                return x.str();
            else
                return x.str();
        };
        return "[" + s(e11) + ", " + s(e12) + "; 0, " + s(e22) + "]";
    }
};

// Basis of the symmetric matrices under the given involution.
inline std::vector<UT2Matrix<FieldElement>> symmetricBasis(InvolutionKind k,
                                                           const FieldDescriptor* f) {
    UT2Matrix<FieldElement> I = UT2Matrix<FieldElement>::identity(f);
    UT2Matrix<FieldElement> E12 = {f->zero(), f->one(), f->zero()};
    if (k == InvolutionKind::Star) return {I, E12};
    return {I};
}

// Basis of the skew matrices under the given involution.
inline std::vector<UT2Matrix<FieldElement>> skewBasis(InvolutionKind k,
                                                      const FieldDescriptor* f) {
    UT2Matrix<FieldElement> D = {f->one(), f->zero(), -f->one()};
    UT2Matrix<FieldElement> E12 = {f->zero(), f->one(), f->zero()};
    if (k == InvolutionKind::Star) return {D};
    return {D, E12};
}

// A *-assignment: matrices for the variables, symmetric for y and skew for z.
template <class R>
class Assignment {
public:
    Assignment(const FieldDescriptor* f, InvolutionKind kind) : field_(f), kind_(kind) {}

    const FieldDescriptor* field() const { return field_; }
    InvolutionKind kind() const { return kind_; }
    const std::map<Variable, UT2Matrix<R>>& entries() const { return entries_; }

    void set(Variable v, UT2Matrix<R> m) {
        UT2Matrix<R> star = m.involve(kind_);
        if (v.kind == VarKind::Y) {
            if (!(star == m))
                throw SymmetryViolationError(v.str(),
                                             "matrix for " + v.str() + " is not symmetric");
        } else {
            if (!(star == -m))
                throw SymmetryViolationError(v.str(), "matrix for " + v.str() + " is not skew");
        }
        entries_.insert_or_assign(v, std::move(m));
    }
    const UT2Matrix<R>& at(Variable v) const {
        auto it = entries_.find(v);
        if (it == entries_.end())
            throw MissingAssignmentError("no matrix assigned to " + v.str());
        return it->second;
    }

    std::string str() const {
        std::string s;
        for (auto& [v, m] : entries_) {
            if (!s.empty()) s += "; ";
            s += v.str() + " = " + m.str();
        }
        return s.empty() ? "(empty assignment)" : s;
    }

private:
    const FieldDescriptor* field_;
    InvolutionKind kind_;
    std::map<Variable, UT2Matrix<R>> entries_;
};

// Evaluate one word at an assignment; the unit word maps to the identity.
template <class R>
UT2Matrix<R> evaluateWord(const Word& w, const Assignment<R>& A, const FieldDescriptor* F) {
    UT2Matrix<R> prod = UT2Matrix<R>::identity(F);
    for (auto& v : w.letters()) prod = prod * A.at(v);
    return prod;
}

// Evaluate a polynomial at an assignment.
template <class R>
UT2Matrix<R> evaluate(const StarPolynomial& f, const Assignment<R>& A) {
    if (f.field() != A.field())
        throw DescriptorMismatchError("polynomial and assignment over different fields");
    UT2Matrix<R> acc = UT2Matrix<R>::zero(f.field());
    for (auto& [w, c] : f.terms())
        acc = acc + evaluateWord(w, A, f.field()).scaled(c);
    return acc;
}

// The generic assignment for the variables of f: entries are commutative
// indeterminates spanning the symmetric/skew matrices of the involution.
//   Star: y_i -> a_i*I + b_i*E12,  z_i -> c_i*(E11 - E22)
//   S:    y_i -> a_i*I,            z_i -> b_i*(E11 - E22) + c_i*E12
inline Assignment<CommPolynomial> genericAssignmentFor(const std::set<Variable>& vars,
                                                       const FieldDescriptor* F,
                                                       InvolutionKind kind) {
    Assignment<CommPolynomial> A(F, kind);
    auto var = [&](CommVar v) { return CommPolynomial::variable(F, v); };
    auto zero = CommPolynomial::zero(F);
    for (auto& v : vars) {
        if (v.kind == VarKind::Y) {
            if (kind == InvolutionKind::Star) {
                CommPolynomial a = var(commA(v.index)), b = var(commB(v.index));
                A.set(v, UT2Matrix<CommPolynomial>{a, b, a});
            } else {
                CommPolynomial a = var(commA(v.index));
                A.set(v, UT2Matrix<CommPolynomial>{a, zero, a});
            }
        } else {
            if (kind == InvolutionKind::Star) {
                CommPolynomial c = var(commC(v.index));
                A.set(v, UT2Matrix<CommPolynomial>{c, zero, -c});
            } else {
                CommPolynomial b = var(commB(v.index)), c = var(commC(v.index));
                A.set(v, UT2Matrix<CommPolynomial>{b, c, -b});
            }
        }
    }
    return A;
}

inline Assignment<CommPolynomial> genericAssignment(const StarPolynomial& f,
                                                    InvolutionKind kind) {
    return genericAssignmentFor(f.variables(), f.field(), kind);
}

// Number of exhaustive assignments for a variable set over a finite field:
// the symmetric space has dimension 2 for Star and 1 for S, the skew space
// the complementary dimension.
inline unsigned long long assignmentCountFor(const std::set<Variable>& vars, InvolutionKind kind,
                                             const FieldDescriptor* F) {
    if (!F->isFinite()) throw ModeFieldMismatchError("exhaustive enumeration needs a finite field");
    unsigned long long q = F->cardinality().value();
    unsigned long long n = 1;
    for (auto& v : vars) {
        unsigned dim = (v.kind == VarKind::Y) == (kind == InvolutionKind::Star) ? 2 : 1;
        for (unsigned d = 0; d < dim; ++d) n *= q;
    }
    return n;
}

inline unsigned long long assignmentCount(const StarPolynomial& f, InvolutionKind kind,
                                          const FieldDescriptor* F) {
    return assignmentCountFor(f.variables(), kind, F);
}

// Visit every exhaustive assignment in deterministic order (variables sorted,
// later coordinates varying fastest).  Stops early when fn returns false.
inline void forEachAssignmentOver(const std::set<Variable>& varSet, InvolutionKind kind,
                                  const FieldDescriptor* F,
                                  const std::function<bool(const Assignment<FieldElement>&)>& fn) {
    if (!F->isFinite()) throw ModeFieldMismatchError("exhaustive enumeration needs a finite field");
    std::vector<Variable> vars(varSet.begin(), varSet.end());
    std::vector<unsigned> dims;
    dims.reserve(vars.size());
    for (auto& v : vars)
        dims.push_back((v.kind == VarKind::Y) == (kind == InvolutionKind::Star) ? 2u : 1u);
    unsigned q = static_cast<unsigned>(F->cardinality().value());

    std::size_t coords = 0;
    for (auto d : dims) coords += d;
    std::vector<unsigned> idx(coords, 0);
    UT2Matrix<FieldElement> D = {F->one(), F->zero(), -F->one()};
    for (;;) {
        Assignment<FieldElement> A(F, kind);
        std::size_t c = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (dims[i] == 2) {
                FieldElement u = F->fromIndex(idx[c]), v = F->fromIndex(idx[c + 1]);
                if (vars[i].kind == VarKind::Y) // Star symmetric: u*I + v*E12
                    A.set(vars[i], UT2Matrix<FieldElement>{u, v, u});
                else // S skew: u*(E11-E22) + v*E12
                    A.set(vars[i], UT2Matrix<FieldElement>{u, v, -u});
                c += 2;
            } else {
                FieldElement u = F->fromIndex(idx[c]);
                if (vars[i].kind == VarKind::Y) // S symmetric: u*I
                    A.set(vars[i], UT2Matrix<FieldElement>{u, F->zero(), u});
                else // Star skew: u*(E11-E22)
                    A.set(vars[i], D.scaled(u));
                c += 1;
            }
        }
        if (!fn(A)) return;
        // Odometer increment, last coordinate fastest.
        std::size_t k = coords;
        while (k > 0) {
            --k;
            if (++idx[k] < q) break;
            idx[k] = 0;
            if (k == 0) return;
        }
        if (coords == 0) return; // single empty assignment
    }
}

inline void forEachAssignment(const StarPolynomial& f, InvolutionKind kind,
                              const FieldDescriptor* F,
                              const std::function<bool(const Assignment<FieldElement>&)>& fn) {
    forEachAssignmentOver(f.variables(), kind, F, fn);
}

// Closed form for the powers of a generic Star-symmetric matrix a*I + b*E12:
// the i-th power is a^i*I + i*a^(i-1)*b*E12.
inline UT2Matrix<FieldElement> powerFormula(const FieldElement& a, const FieldElement& b,
                                            unsigned i) {
    const FieldDescriptor* F = a.field();
    if (i == 0) return UT2Matrix<FieldElement>::identity(F);
    FieldElement ai = a.pow(i);
    FieldElement corner = F->fromInteger(static_cast<long>(i)) * a.pow(i - 1) * b;
    return {ai, corner, ai};
}

} // namespace starpi

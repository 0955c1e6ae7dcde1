#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "starpi/errors.hpp"

namespace starpi {

enum class FieldKind { Rational, Prime, Extension };

class FieldElement;

// An exact coefficient field: Q, F_p (p an odd prime), or F_{p^k} for
// p^k in {9, 25, 27, 49}.  Descriptors are interned: the factories return a
// stable pointer, and pointer equality is descriptor equality.  Finite-field
// elements are stored as an index in [0, q); for extensions the index digits
// in base p are the coefficients of the residue polynomial, least significant
// digit = constant coefficient.  Characteristic 2 is rejected throughout.
class FieldDescriptor {
public:
    static const FieldDescriptor* rational();
    static const FieldDescriptor* finite(unsigned q);
    // Names: "Q", or "F<q>" for the supported finite cardinalities.
    static const FieldDescriptor* byName(const std::string& name);

    FieldKind kind() const { return kind_; }
    bool isFinite() const { return kind_ != FieldKind::Rational; }
    const std::string& name() const { return name_; }
    unsigned characteristic() const { return p_; } // 0 for Q
    std::optional<unsigned long> cardinality() const {
        if (!isFinite()) return std::nullopt;
        return static_cast<unsigned long>(q_);
    }
    // Degree of the field over its prime subfield (1 for F_p, 0 for Q).
    unsigned extensionDegree() const { return k_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement fromInteger(long n) const;
    FieldElement fromInteger(const mpz_class& n) const;
    // num/den as an element (den must be invertible).
    FieldElement fromRatio(const mpz_class& num, const mpz_class& den) const;
    FieldElement fromRational(const mpq_class& r) const;
    // Residue class of t for an extension field F_p[t]/(m(t)).
    FieldElement generator() const;
    FieldElement fromIndex(unsigned idx) const; // finite fields only
    // All q elements in index order; throws InfiniteFieldError over Q.
    std::vector<FieldElement> enumerate() const;

    // Index-level arithmetic used by the dense linear-algebra engine.
    std::uint16_t addIdx(std::uint16_t a, std::uint16_t b) const { return addT_[a * q_ + b]; }
    std::uint16_t subIdx(std::uint16_t a, std::uint16_t b) const { return addT_[a * q_ + negT_[b]]; }
    std::uint16_t mulIdx(std::uint16_t a, std::uint16_t b) const { return mulT_[a * q_ + b]; }
    std::uint16_t negIdx(std::uint16_t a) const { return negT_[a]; }
    std::uint16_t invIdx(std::uint16_t a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero in " + name_);
        return invT_[a];
    }
    std::uint16_t powIdx(std::uint16_t a, unsigned long e) const {
        std::uint16_t r = 1 % q_prime_guard(), base = a;
        while (e) {
            if (e & 1) r = mulIdx(r, base);
            base = mulIdx(base, base);
            e >>= 1;
        }
        return r;
    }

private:
    FieldDescriptor() = default;
    static FieldDescriptor makeRational();
    static FieldDescriptor makeFinite(unsigned q);
    unsigned q_prime_guard() const { return q_ ? q_ : 1; }

    FieldKind kind_ = FieldKind::Rational;
    std::string name_ = "Q";
    unsigned p_ = 0; // characteristic
    unsigned q_ = 0; // cardinality (0 for Q)
    unsigned k_ = 0; // extension degree (0 for Q)
    std::vector<std::uint16_t> modulus_; // monic, little-endian, size k+1
    std::vector<std::uint16_t> addT_, mulT_, negT_, invT_;

    friend class FieldElement;
};

// One field element.  Value semantics; carries its descriptor.  A
// default-constructed element is detached and unusable until assigned.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FieldDescriptor* f, std::uint16_t idx) : f_(f), idx_(idx) {}
    FieldElement(const FieldDescriptor* f, mpq_class r) : f_(f), rat_(std::move(r)) {}

    const FieldDescriptor* field() const { return f_; }
    bool isRational() const { return f_ && f_->kind() == FieldKind::Rational; }
    std::uint16_t index() const { return idx_; }
    const mpq_class& rational() const { return rat_; }

    bool isZero() const {
        requireAttached();
        return isRational() ? rat_ == 0 : idx_ == 0;
    }
    bool isOne() const {
        requireAttached();
        return isRational() ? rat_ == 1 : idx_ == 1 % f_->q_;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.requireSameField(b);
        return a.isRational() ? a.rat_ == b.rat_ : a.idx_ == b.idx_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.requireSameField(b);
        if (a.isRational()) return {a.f_, mpq_class(a.rat_ + b.rat_)};
        return {a.f_, a.f_->addIdx(a.idx_, b.idx_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.requireSameField(b);
        if (a.isRational()) return {a.f_, mpq_class(a.rat_ - b.rat_)};
        return {a.f_, a.f_->subIdx(a.idx_, b.idx_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.requireSameField(b);
        if (a.isRational()) return {a.f_, mpq_class(a.rat_ * b.rat_)};
        return {a.f_, a.f_->mulIdx(a.idx_, b.idx_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inv();
    }
    FieldElement operator-() const {
        requireAttached();
        if (isRational()) return {f_, mpq_class(-rat_)};
        return {f_, f_->negIdx(idx_)};
    }
    FieldElement inv() const {
        requireAttached();
        if (isRational()) {
            if (rat_ == 0) throw DivisionByZeroError("inverse of zero in Q");
            return {f_, mpq_class(1 / rat_)};
        }
        return {f_, f_->invIdx(idx_)};
    }
    FieldElement pow(unsigned long e) const {
        requireAttached();
        if (!isRational()) return {f_, f_->powIdx(idx_, e)};
        mpq_class r(1);
        mpq_class base = rat_;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return {f_, r};
    }

    // Canonical text: reduced fraction over Q; residue 0..p-1 over F_p; over
    // extensions, prime-subfield values print as integers and every other
    // element as "#<index>".
    std::string str() const {
        requireAttached();
        if (isRational()) return rat_.get_str();
        if (f_->kind() == FieldKind::Prime || idx_ < f_->p_) return std::to_string(idx_);
        return "#" + std::to_string(idx_);
    }

private:
    void requireAttached() const {
        if (!f_) throw DescriptorMismatchError("use of a detached field element");
    }
    void requireSameField(const FieldElement& o) const {
        requireAttached();
        o.requireAttached();
        if (f_ != o.f_)
            throw DescriptorMismatchError("mixed fields: " + f_->name() + " vs " + o.f_->name());
    }

    const FieldDescriptor* f_ = nullptr;
    std::uint16_t idx_ = 0;
    mpq_class rat_;
};

namespace detail {

inline bool isPrimeU(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime factor, or 0 for n < 2.
inline unsigned smallestPrimeFactor(unsigned n) {
    if (n < 2) return 0;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

} // namespace detail

inline FieldDescriptor FieldDescriptor::makeRational() {
    FieldDescriptor f;
    f.kind_ = FieldKind::Rational;
    f.name_ = "Q";
    f.p_ = 0;
    f.q_ = 0;
    f.k_ = 0;
    return f;
}

inline FieldDescriptor FieldDescriptor::makeFinite(unsigned q) {
    // Fixed residue moduli, monic and little-endian, one per supported
    // extension cardinality; verified irreducible below by root search.
    static const std::map<unsigned, std::vector<std::uint16_t>> kModuli = {
        {9, {1, 0, 1}},     // t^2 + 1 over F_3
        {25, {2, 0, 1}},    // t^2 + 2 over F_5
        {27, {1, 2, 0, 1}}, // t^3 + 2t + 1 over F_3
        {49, {1, 0, 1}},    // t^2 + 1 over F_7
    };

    unsigned p = detail::smallestPrimeFactor(q);
    if (p == 0) throw InvalidFieldError("field cardinality must be at least 3, got " + std::to_string(q));
    if (p == 2) throw InvalidFieldError("characteristic 2 is unsupported");
    unsigned k = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) throw InvalidFieldError(std::to_string(q) + " is not a prime power");

    FieldDescriptor f;
    f.p_ = p;
    f.q_ = q;
    f.k_ = k;
    f.name_ = "F" + std::to_string(q);
    if (k == 1) {
        if (q > 251) throw InvalidFieldError("prime field too large for the table backend: " + f.name_);
        f.kind_ = FieldKind::Prime;
    } else {
        f.kind_ = FieldKind::Extension;
        auto it = kModuli.find(q);
        if (it == kModuli.end())
            throw InvalidFieldError("no residue modulus on record for " + f.name_);
        f.modulus_ = it->second;
        // Degree <= 3 over a field: irreducible iff no roots.
        for (unsigned a = 0; a < p; ++a) {
            unsigned long v = 0, pw = 1;
            for (unsigned i = 0; i <= k; ++i) {
                v = (v + f.modulus_[i] * pw) % p;
                pw = (pw * a) % p;
            }
            if (v == 0)
                throw InvalidFieldError("reducible modulus on record for " + f.name_);
        }
    }

    auto digits = [&](unsigned idx) {
        std::vector<std::uint16_t> c(f.k_);
        for (unsigned i = 0; i < f.k_; ++i) {
            c[i] = static_cast<std::uint16_t>(idx % p);
            idx /= p;
        }
        return c;
    };
    auto index = [&](const std::vector<std::uint16_t>& c) {
        unsigned idx = 0;
        for (unsigned i = f.k_; i-- > 0;) idx = idx * p + c[i];
        return static_cast<std::uint16_t>(idx);
    };

    f.addT_.resize(static_cast<std::size_t>(q) * q);
    f.mulT_.resize(static_cast<std::size_t>(q) * q);
    f.negT_.resize(q);
    f.invT_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a);
        std::vector<std::uint16_t> dn(f.k_);
        for (unsigned i = 0; i < f.k_; ++i) dn[i] = static_cast<std::uint16_t>((p - da[i]) % p);
        f.negT_[a] = index(dn);
        for (unsigned b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<std::uint16_t> s(f.k_);
            for (unsigned i = 0; i < f.k_; ++i) s[i] = static_cast<std::uint16_t>((da[i] + db[i]) % p);
            f.addT_[static_cast<std::size_t>(a) * q + b] = index(s);
            // Product, then reduction by the monic modulus.
            std::vector<unsigned> prod(2 * f.k_ - 1, 0);
            for (unsigned i = 0; i < f.k_; ++i)
                for (unsigned j = 0; j < f.k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (unsigned d = 2 * f.k_ - 2; d + 1 > f.k_; --d) {
                unsigned c = prod[d] % p;
                if (c == 0) continue;
                // Subtract c * t^(d-k) * modulus; the monic top clears prod[d].
                for (unsigned i = 0; i <= f.k_; ++i) {
                    unsigned pos = d - f.k_ + i;
                    prod[pos] = (prod[pos] + c * (p - f.modulus_[i] % p)) % p;
                }
            }
            std::vector<std::uint16_t> pr(f.k_);
            for (unsigned i = 0; i < f.k_; ++i) pr[i] = static_cast<std::uint16_t>(prod[i] % p);
            f.mulT_[static_cast<std::size_t>(a) * q + b] = index(pr);
        }
    }
    for (unsigned a = 1; a < q; ++a) f.invT_[a] = f.powIdx(static_cast<std::uint16_t>(a), q - 2);
    f.invT_[0] = 0;
    return f;
}

inline const FieldDescriptor* FieldDescriptor::rational() {
    static const FieldDescriptor f = makeRational();
    return &f;
}

inline const FieldDescriptor* FieldDescriptor::finite(unsigned q) {
    static std::mutex m;
    static std::map<unsigned, std::unique_ptr<FieldDescriptor>>* reg =
        new std::map<unsigned, std::unique_ptr<FieldDescriptor>>();
    std::lock_guard<std::mutex> lock(m);
    auto& slot = (*reg)[q];
    if (!slot) slot.reset(new FieldDescriptor(makeFinite(q)));
    return slot.get();
}

inline const FieldDescriptor* FieldDescriptor::byName(const std::string& name) {
    if (name == "Q") return rational();
    if (name.size() >= 2 && name[0] == 'F') {
        unsigned q = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9')
                throw InvalidFieldError("unknown field name: " + name);
            q = q * 10 + static_cast<unsigned>(name[i] - '0');
            if (q > 100000) throw InvalidFieldError("unknown field name: " + name);
        }
        return finite(q);
    }
    throw InvalidFieldError("unknown field name: " + name);
}

inline FieldElement FieldDescriptor::zero() const {
    if (kind_ == FieldKind::Rational) return {this, mpq_class(0)};
    return {this, static_cast<std::uint16_t>(0)};
}

inline FieldElement FieldDescriptor::one() const {
    if (kind_ == FieldKind::Rational) return {this, mpq_class(1)};
    return fromInteger(1);
}

inline FieldElement FieldDescriptor::fromInteger(long n) const { return fromInteger(mpz_class(n)); }

inline FieldElement FieldDescriptor::fromInteger(const mpz_class& n) const {
    if (kind_ == FieldKind::Rational) return {this, mpq_class(n)};
    mpz_class r = n % static_cast<long>(p_);
    long v = r.get_si();
    if (v < 0) v += p_;
    return {this, static_cast<std::uint16_t>(v)}; // embeds via the constant digit
}

inline FieldElement FieldDescriptor::fromRatio(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DivisionByZeroError("zero denominator");
    if (kind_ == FieldKind::Rational) {
        mpq_class r(num, den);
        r.canonicalize();
        return {this, r};
    }
    return fromInteger(num) / fromInteger(den);
}

inline FieldElement FieldDescriptor::fromRational(const mpq_class& r) const {
    return fromRatio(r.get_num(), r.get_den());
}

inline FieldElement FieldDescriptor::generator() const {
    if (kind_ != FieldKind::Extension)
        throw InvalidFieldError("generator() requires an extension field, not " + name_);
    return {this, static_cast<std::uint16_t>(p_)}; // digits (0,1,0,...) = t
}

inline FieldElement FieldDescriptor::fromIndex(unsigned idx) const {
    if (!isFinite()) throw InvalidFieldError("fromIndex over Q");
    if (idx >= q_) throw InvalidFieldError("index out of range for " + name_);
    return {this, static_cast<std::uint16_t>(idx)};
}

inline std::vector<FieldElement> FieldDescriptor::enumerate() const {
    if (!isFinite()) throw InfiniteFieldError("cannot enumerate Q");
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (unsigned i = 0; i < q_; ++i) out.push_back(fromIndex(i));
    return out;
}

} // namespace starpi

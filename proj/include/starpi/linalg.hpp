#ifndef STARPI_LINALG_HPP
#define STARPI_LINALG_HPP

// Exact linear algebra over coordinate vectors indexed by words.
//
// WordUniverse fixes an ordered list of words (the coordinate axes); SpanBasis
// maintains a subspace of such a coordinate space in reduced row-echelon form,
// so ranks, membership tests, canonical bases and kernels are all exact and
// deterministic.  Finite-field rows are stored as raw element indices and
// manipulated through the field's lookup tables; rational rows use mpq.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "freealg.hpp"

namespace starpi {

// ---------------------------------------------------------------------------
// WordUniverse: an ordered, indexed family of distinct words.
// ---------------------------------------------------------------------------

class WordUniverse {
public:
    // All words of length <= maxDegree over the given alphabet (the empty
    // word included), listed in the global word order.
    static WordUniverse boundedDegree(const std::vector<Variable>& alphabet,
                                      unsigned maxDegree) {
        std::set<Variable> letters(alphabet.begin(), alphabet.end());
        std::vector<std::vector<Variable>> level{{}};
        WordUniverse u;
        u.push(Word{});
        for (unsigned len = 1; len <= maxDegree; ++len) {
            std::vector<std::vector<Variable>> next;
            next.reserve(level.size() * letters.size());
            for (const std::vector<Variable>& w : level)
                for (const Variable& v : letters) {
                    std::vector<Variable> e = w;
                    e.push_back(v);
                    next.push_back(std::move(e));
                }
            // Prefixes are visited in lexicographic order (induction on the
            // level) and letters in increasing order, so `next` is sorted.
            for (const std::vector<Variable>& w : next) u.push(Word{w});
            level = std::move(next);
        }
        return u;
    }

    // All words whose multidegree is exactly `slice`, in the global order.
    static WordUniverse ofSlice(const MultiDegree& slice) {
        std::vector<Variable> letters;
        for (auto& [i, e] : slice.y)
            for (unsigned k = 0; k < e; ++k) letters.push_back(yVar(i));
        for (auto& [i, e] : slice.z)
            for (unsigned k = 0; k < e; ++k) letters.push_back(zVar(i));
        std::sort(letters.begin(), letters.end());
        WordUniverse u;
        do {
            u.push(Word{letters});
        } while (std::next_permutation(letters.begin(), letters.end()));
        return u;
    }

    // Exactly the given words (deduplicated, re-sorted into the word order).
    static WordUniverse ofWords(const std::vector<Word>& words) {
        std::set<Word> s(words.begin(), words.end());
        WordUniverse u;
        for (const Word& w : s) u.push(w);
        return u;
    }

    std::size_t size() const { return words_.size(); }
    const Word& wordAt(std::size_t i) const { return words_.at(i); }

    std::optional<std::size_t> indexOf(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool containsSupport(const StarPolynomial& p) const {
        for (auto& [w, c] : p.terms())
            if (!index_.count(w)) return false;
        return true;
    }

    // Coordinate vector of p with respect to this universe.
    std::vector<FieldElement> coordinates(const StarPolynomial& p) const {
        std::vector<FieldElement> v(words_.size(), p.field()->zero());
        for (auto& [w, c] : p.terms()) {
            auto it = index_.find(w);
            if (it == index_.end())
                throw UniverseMismatchError("word " + w.str() +
                                            " lies outside the coordinate universe");
            v[it->second] = c;
        }
        return v;
    }

    StarPolynomial fromCoordinates(const std::vector<FieldElement>& v,
                                   const FieldDescriptor* f) const {
        if (v.size() != words_.size())
            throw UniverseMismatchError("coordinate vector length does not match universe size");
        StarPolynomial p = StarPolynomial::zero(f);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].isZero()) p.addTerm(words_[i], v[i]);
        return p;
    }

private:
    void push(const Word& w) {
        if (index_.emplace(w, words_.size()).second) words_.push_back(w);
    }

    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// SpanBasis: a subspace kept in reduced row-echelon form.
// ---------------------------------------------------------------------------

namespace detail {

// Scalar policy for finite fields: rows of raw element indices, all
// arithmetic through the descriptor's lookup tables.
struct IndexOps {
    const FieldDescriptor* F;
    using Scalar = std::uint16_t;
    Scalar zero() const { return 0; }
    bool isZero(Scalar a) const { return a == 0; }
    Scalar sub(Scalar a, Scalar b) const { return F->subIdx(a, b); }
    Scalar mul(Scalar a, Scalar b) const { return F->mulIdx(a, b); }
    Scalar inv(Scalar a) const { return F->invIdx(a); }
    Scalar from(const FieldElement& e) const { return e.index(); }
    FieldElement to(Scalar a) const { return F->fromIndex(a); }
};

// Scalar policy for the rationals.
struct RationalOps {
    const FieldDescriptor* F;
    using Scalar = mpq_class;
    Scalar zero() const { return mpq_class(0); }
    bool isZero(const Scalar& a) const { return sgn(a) == 0; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar inv(const Scalar& a) const {
        if (sgn(a) == 0) throw DivisionByZeroError("inverse of zero");
        return 1 / a;
    }
    Scalar from(const FieldElement& e) const { return e.rational(); }
    FieldElement to(const Scalar& a) const { return F->fromRational(a); }
};

template <class Ops>
class EchelonImpl {
public:
    using Scalar = typename Ops::Scalar;

    EchelonImpl(Ops ops, std::size_t dim) : ops_(ops), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduce v against the current rows in place.
    void reduceInPlace(std::vector<Scalar>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar& c = v[pivots_[i]];
            if (ops_.isZero(c)) continue;
            Scalar factor = c; // pivot entries are 1
            const std::vector<Scalar>& r = rows_[i];
            for (std::size_t j = pivots_[i]; j < dim_; ++j)
                if (!ops_.isZero(r[j])) v[j] = ops_.sub(v[j], ops_.mul(factor, r[j]));
        }
    }

    bool insert(std::vector<Scalar> v) {
        reduceInPlace(v);
        std::size_t p = 0;
        while (p < dim_ && ops_.isZero(v[p])) ++p;
        if (p == dim_) return false;
        Scalar s = ops_.inv(v[p]);
        for (std::size_t j = p; j < dim_; ++j) v[j] = ops_.mul(v[j], s);
        // Back-eliminate column p from the existing rows.
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Scalar c = rows_[i][p];
            if (ops_.isZero(c)) continue;
            for (std::size_t j = p; j < dim_; ++j)
                if (!ops_.isZero(v[j])) rows_[i][j] = ops_.sub(rows_[i][j], ops_.mul(c, v[j]));
        }
        // Keep rows ordered by pivot column.
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(std::vector<Scalar> v) const {
        reduceInPlace(v);
        for (const Scalar& c : v)
            if (!ops_.isZero(c)) return false;
        return true;
    }

    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

    const Ops& ops() const { return ops_; }
    std::size_t dim() const { return dim_; }

private:
    Ops ops_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace detail

class SpanBasis {
public:
    SpanBasis(const FieldDescriptor* f, std::size_t dimension)
        : f_(f), impl_(make(f, dimension)) {}

    const FieldDescriptor* field() const { return f_; }
    std::size_t dimension() const {
        return std::visit([](auto& m) { return m.dim(); }, impl_);
    }
    std::size_t rank() const {
        return std::visit([](auto& m) { return m.rank(); }, impl_);
    }

    // Add a vector to the span; returns true if the rank grew.
    bool insert(const std::vector<FieldElement>& v) {
        return std::visit([&](auto& m) { return m.insert(pack(m, v)); }, impl_);
    }

    bool contains(const std::vector<FieldElement>& v) const {
        return std::visit([&](auto& m) { return m.contains(pack(m, v)); }, impl_);
    }

    // v minus its projection onto the span along the pivot coordinates: the
    // unique fully reduced representative of v modulo the span.  Zero iff
    // contains(v).
    std::vector<FieldElement> reduce(const std::vector<FieldElement>& v) const {
        return std::visit(
            [&](auto& m) {
                auto row = pack(m, v);
                m.reduceInPlace(row);
                return unpack(m, row);
            },
            impl_);
    }

    // Pivot columns, ascending; one per basis row.
    std::vector<std::size_t> pivots() const {
        return std::visit([](auto& m) { return m.pivots(); }, impl_);
    }

    // The canonical (reduced row-echelon) basis of the span.
    std::vector<std::vector<FieldElement>> rows() const {
        return std::visit(
            [&](auto& m) {
                std::vector<std::vector<FieldElement>> out;
                out.reserve(m.rank());
                for (auto& r : m.rows()) out.push_back(unpack(m, r));
                return out;
            },
            impl_);
    }

    // Canonical basis of the kernel of the matrix whose rows span this space
    // (one vector per non-pivot column, ascending; unit at the free column,
    // minus the column of the echelon rows at the pivots).
    std::vector<std::vector<FieldElement>> kernelBasis() const {
        return std::visit(
            [&](auto& m) {
                std::vector<bool> isPivot(m.dim(), false);
                for (std::size_t p : m.pivots()) isPivot[p] = true;
                std::vector<std::vector<FieldElement>> out;
                for (std::size_t j = 0; j < m.dim(); ++j) {
                    if (isPivot[j]) continue;
                    std::vector<FieldElement> v(m.dim(), f_->zero());
                    v[j] = f_->one();
                    for (std::size_t i = 0; i < m.rank(); ++i)
                        v[m.pivots()[i]] = -m.ops().to(m.rows()[i][j]);
                    out.push_back(std::move(v));
                }
                return out;
            },
            impl_);
    }

private:
    using Fin = detail::EchelonImpl<detail::IndexOps>;
    using Rat = detail::EchelonImpl<detail::RationalOps>;

    static std::variant<Fin, Rat> make(const FieldDescriptor* f, std::size_t dim) {
        if (f->isFinite()) return std::variant<Fin, Rat>(std::in_place_type<Fin>,
                                                         detail::IndexOps{f}, dim);
        return std::variant<Fin, Rat>(std::in_place_type<Rat>, detail::RationalOps{f}, dim);
    }

    template <class M>
    static std::vector<typename M::Scalar> pack(const M& m, const std::vector<FieldElement>& v) {
        if (v.size() != m.dim())
            throw UniverseMismatchError("vector length does not match span dimension");
        std::vector<typename M::Scalar> row;
        row.reserve(v.size());
        for (const FieldElement& e : v) {
            if (e.field() != m.ops().F)
                throw DescriptorMismatchError("vector entries over a different field than the span");
            row.push_back(m.ops().from(e));
        }
        return row;
    }

    template <class M>
    static std::vector<FieldElement> unpack(const M& m, const std::vector<typename M::Scalar>& r) {
        std::vector<FieldElement> v;
        v.reserve(r.size());
        for (const auto& s : r) v.push_back(m.ops().to(s));
        return v;
    }

    const FieldDescriptor* f_;
    std::variant<Fin, Rat> impl_;
};

// Convenience: span of the coordinate vectors of polynomials in a universe.
inline SpanBasis spanOf(const WordUniverse& u, const std::vector<StarPolynomial>& polys,
                        const FieldDescriptor* f) {
    SpanBasis s(f, u.size());
    for (const StarPolynomial& p : polys) s.insert(u.coordinates(p));
    return s;
}

} // namespace starpi

#endif // STARPI_LINALG_HPP

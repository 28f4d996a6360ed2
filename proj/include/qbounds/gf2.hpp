#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qbounds::gf2 {

/// A row vector over GF(2) with at most 64 coordinates; bit i is coordinate i.
using Word = std::uint64_t;

inline int parity(Word w) { return std::popcount(w) & 1; }

/// Incrementally built echelon basis. Each stored row owns a pivot bit that is
/// clear in every other row.
class EchelonBasis {
public:
    /// Reduces v against the basis; zero iff v is in the span.
    Word reduce(Word v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v & pivots_[i]) v ^= rows_[i];
        return v;
    }

    bool contains(Word v) const { return reduce(v) == 0; }

    /// Adds v if independent. Returns false for dependent vectors.
    bool insert(Word v) {
        v = reduce(v);
        if (v == 0) return false;
        Word pivot = v & (~v + 1);
        for (Word& r : rows_)
            if (r & pivot) r ^= v;
        rows_.push_back(v);
        pivots_.push_back(pivot);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Word>& rows() const { return rows_; }
    const std::vector<Word>& pivots() const { return pivots_; }

private:
    std::vector<Word> rows_;
    std::vector<Word> pivots_;
};

inline std::size_t rank(std::span<const Word> rows) {
    EchelonBasis b;
    for (Word r : rows) b.insert(r);
    return b.rank();
}

/// Basis of { v : v . r = 0 for every r in rows } restricted to the columns in
/// `support` (a bit mask). Standard dot product.
std::vector<Word> orthogonal_complement(std::span<const Word> rows, Word support);

/// Visits every element of span(basis) exactly once, starting with 0, in
/// Gray-code order. The callback receives the current combination.
template <class Fn>
void for_each_in_span(std::span<const Word> basis, Fn&& fn) {
    Word w = 0;
    fn(w);
    const std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        w ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        fn(w);
    }
}

}  // namespace qbounds::gf2

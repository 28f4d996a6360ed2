#include "qbounds/gf2.hpp"

namespace qbounds::gf2 {

std::vector<Word> orthogonal_complement(std::span<const Word> rows, Word support) {
    // Reduced row echelon form on the support columns, then read the kernel
    // off the free columns.
    std::vector<Word> ech;
    std::vector<int> pivots;
    for (Word r : rows) {
        r &= support;
        for (std::size_t i = 0; i < ech.size(); ++i)
            if (r >> pivots[i] & 1) r ^= ech[i];
        if (r == 0) continue;
        int p = std::countr_zero(r);
        for (auto& e : ech)
            if (e >> p & 1) e ^= r;
        ech.push_back(r);
        pivots.push_back(p);
    }
    Word pivot_mask = 0;
    for (int p : pivots) pivot_mask |= Word{1} << p;

    std::vector<Word> kernel;
    for (int c = 0; c < 64; ++c) {
        Word bit = Word{1} << c;
        if (!(support & bit) || (pivot_mask & bit)) continue;
        Word v = bit;
        for (std::size_t i = 0; i < ech.size(); ++i)
            if (ech[i] & bit) v |= Word{1} << pivots[i];
        kernel.push_back(v);
    }
    return kernel;
}

}  // namespace qbounds::gf2

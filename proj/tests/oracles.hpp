#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library except for plain data types.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

// A Pauli/GF(4) vector as one symbol per coordinate, symbol = x + 2z.
using Sym = std::vector<int>;

inline Sym symbols(std::uint64_t word, unsigned n) {
    Sym s(n);
    for (unsigned i = 0; i < n; ++i) s[i] = static_cast<int>((word >> i & 1) | ((word >> (32 + i) & 1) << 1));
    return s;
}

inline Sym add(const Sym& a, const Sym& b) {
    Sym c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] ^ b[i];
    return c;
}

inline bool commute(const Sym& a, const Sym& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s ^= ((a[i] & 1) & (b[i] >> 1)) ^ ((a[i] >> 1) & (b[i] & 1));
    return s == 0;
}

inline int weight(const Sym& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](int s) { return s != 0; }));
}

inline std::set<Sym> span(const std::vector<Sym>& gens, unsigned n) {
    std::set<Sym> out{Sym(n, 0)};
    for (const auto& g : gens) {
        std::set<Sym> next = out;
        for (const auto& v : out) next.insert(add(v, g));
        out = std::move(next);
    }
    return out;
}

inline void for_each_vector(unsigned n, const std::function<void(const Sym&)>& fn) {
    Sym v(n, 0);
    while (true) {
        fn(v);
        unsigned i = 0;
        while (i < n && v[i] == 3) v[i++] = 0;
        if (i == n) return;
        ++v[i];
    }
}

struct Params {
    unsigned n = 0, k = 0, d = 0;
    bool degenerate = false;
    std::vector<long> A, B;
};

// Parameters of the stabilizer code with the given generators, by scanning
// all 4^n vectors. Generators must be independent and commuting.
inline Params brute_force(const std::vector<std::uint64_t>& words, unsigned n) {
    std::vector<Sym> gens;
    for (auto w : words) gens.push_back(symbols(w, n));
    auto C = span(gens, n);
    Params p;
    p.n = n;
    p.k = n - static_cast<unsigned>(gens.size());
    p.A.assign(n + 1, 0);
    p.B.assign(n + 1, 0);
    for (const auto& v : C) ++p.A[weight(v)];
    unsigned d_dual = n + 1, d_stab = n + 1;
    for_each_vector(n, [&](const Sym& v) {
        for (const auto& g : gens)
            if (!commute(v, g)) return;
        const int w = weight(v);
        ++p.B[w];
        if (w == 0) return;
        if (C.count(v)) d_stab = std::min<unsigned>(d_stab, w);
        else d_dual = std::min<unsigned>(d_dual, w);
    });
    p.d = p.k == 0 ? d_stab : d_dual;
    p.degenerate = d_stab < p.d;
    return p;
}

// Minimum nonzero weight of the GF(2)-span of words, where each word packs
// one symbol per coordinate: `bits_per_coord[i]` bits for coordinate i.
inline unsigned min_weight_packed(const std::vector<std::uint64_t>& words, const std::vector<unsigned>& bits_per_coord) {
    unsigned best = 0;
    const std::uint64_t count = std::uint64_t{1} << words.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (mask >> i & 1) v ^= words[i];
        unsigned w = 0, shift = 0;
        for (unsigned b : bits_per_coord) {
            if (v >> shift & ((std::uint64_t{1} << b) - 1)) ++w;
            shift += b;
        }
        if (w > 0 && (best == 0 || w < best)) best = w;
    }
    return best;
}

// Minimum nonzero symplectic weight of the span of x|z words of length n.
inline unsigned min_weight_symplectic(const std::vector<std::uint64_t>& words, unsigned n) {
    unsigned best = 0;
    const std::uint64_t count = std::uint64_t{1} << words.size();
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (mask >> i & 1) v ^= words[i];
        const unsigned w = weight(symbols(v, n));
        if (w > 0 && (best == 0 || w < best)) best = w;
    }
    return best;
}

inline mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// P_t(x, n) over q letters from the three-term recurrence
// (t+1) P_{t+1} = ((q-1)(n-t) + t - q x) P_t - (q-1)(n-t+1) P_{t-1}.
inline mpq_class krawtchouk(unsigned t, const mpq_class& x, unsigned n, unsigned q) {
    mpq_class prev = 1;
    if (t == 0) return prev;
    mpq_class cur = mpq_class((q - 1) * n) - q * x;
    for (unsigned s = 1; s < t; ++s) {
        mpq_class next = (mpq_class((q - 1) * (n - s) + s) - q * x) * cur - mpq_class((q - 1) * (n - s + 1)) * prev;
        next /= s + 1;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Number of words of a space with l binary and n_total - l quaternary
// coordinates within Hamming distance e of zero, by enumeration.
inline long mixed_ball_count(unsigned l, unsigned n_total, unsigned e) {
    long count = 0;
    const unsigned bits = l + 2 * (n_total - l);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
        unsigned w = 0;
        for (unsigned i = 0; i < l; ++i) w += v >> i & 1;
        for (unsigned i = 0; i < n_total - l; ++i) w += (v >> (l + 2 * i) & 3) != 0;
        if (w <= e) ++count;
    }
    return count;
}

// Every GF(2)-subspace of the mixed space with l binary and n_total - l
// quaternary coordinates. Each subspace is reached once through its greedy
// basis: every basis vector is the smallest element of its coset of the span
// of the earlier ones and exceeds the previous basis vector.
inline void for_each_mixed_code(unsigned l, unsigned n_total,
                                const std::function<void(unsigned dim, unsigned d)>& fn) {
    const unsigned bits = l + 2 * (n_total - l);
    const std::uint64_t size = std::uint64_t{1} << bits;
    auto wt = [&](std::uint64_t v) {
        unsigned w = 0;
        for (unsigned i = 0; i < l; ++i) w += v >> i & 1;
        for (unsigned i = 0; i < n_total - l; ++i) w += (v >> (l + 2 * i) & 3) != 0;
        return w;
    };
    std::vector<std::uint64_t> elements{0};
    std::function<void(std::uint64_t, unsigned, unsigned)> grow = [&](std::uint64_t last, unsigned dim, unsigned d) {
        fn(dim, d);
        for (std::uint64_t v = last + 1; v < size; ++v) {
            bool minimal = true;
            unsigned coset_min = ~0u;
            for (std::uint64_t t : elements) {
                if ((v ^ t) < v) {
                    minimal = false;
                    break;
                }
                coset_min = std::min(coset_min, wt(v ^ t));
            }
            if (!minimal) continue;
            const std::size_t old = elements.size();
            for (std::size_t i = 0; i < old; ++i) elements.push_back(elements[i] ^ v);
            grow(v, dim + 1, std::min(d, coset_min));
            elements.resize(old);
        }
    };
    grow(0, 0, ~0u);
}

}  // namespace oracle

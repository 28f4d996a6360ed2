#include "qbounds/standard_form.hpp"

#include "qbounds/errors.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace qbounds {

namespace sp = symplectic;

Word permute_coordinates(Word v, const std::vector<unsigned>& permutation) {
    Word x = 0, z = 0;
    const Word vx = sp::x_part(v), vz = sp::z_part(v);
    for (unsigned i = 0; i < permutation.size(); ++i) {
        x |= (vx >> permutation[i] & 1) << i;
        z |= (vz >> permutation[i] & 1) << i;
    }
    return sp::make(x, z);
}

Word unpermute_coordinates(Word v, const std::vector<unsigned>& permutation) {
    Word x = 0, z = 0;
    const Word vx = sp::x_part(v), vz = sp::z_part(v);
    for (unsigned i = 0; i < permutation.size(); ++i) {
        x |= (vx >> i & 1) << permutation[i];
        z |= (vz >> i & 1) << permutation[i];
    }
    return sp::make(x, z);
}

namespace {

Gf4 gf4_inverse(Gf4 s) {
    switch (s) {
        case Gf4::one: return Gf4::one;
        case Gf4::omega: return Gf4::omega2;
        case Gf4::omega2: return Gf4::omega;
        default: throw ParameterError("zero has no inverse in GF(4)");
    }
}

Gf4 gf4_add(Gf4 a, Gf4 b) { return static_cast<Gf4>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b)); }

bool bit(Word half, unsigned i) { return (half >> i & 1) != 0; }

Word swap_columns(Word v, unsigned i, unsigned j) {
    if (i == j) return v;
    Word x = sp::x_part(v), z = sp::z_part(v);
    auto swap_bits = [&](Word w) {
        if (bit(w, i) != bit(w, j)) w ^= (Word{1} << i) | (Word{1} << j);
        return w;
    };
    return sp::make(swap_bits(x), swap_bits(z));
}

}  // namespace

Gf4 Gf4StandardForm::normalized(unsigned row, unsigned col) const {
    Gf4 s = sp::symbol(rows.at(row), col);
    if (col >= k0 && col < k0 + k1) s = gf4_mul(s, gf4_inverse(k1_lines[col - k0]));
    return s;
}

Gf4Matrix Gf4StandardForm::block(unsigned row0, unsigned nrows, unsigned col0, unsigned ncols) const {
    Gf4Matrix out(nrows, std::vector<Gf4>(ncols));
    for (unsigned i = 0; i < nrows; ++i)
        for (unsigned j = 0; j < ncols; ++j) out[i][j] = normalized(row0 + i, col0 + j);
    return out;
}

namespace {

BitMatrix omega_indicator(const Gf4Matrix& m) {
    BitMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (Gf4 s : m[i]) out[i].push_back(s == Gf4::omega ? 1 : 0);
    return out;
}

}  // namespace

BitMatrix Gf4StandardForm::A1() const { return omega_indicator(block(0, k0, k0, k1)); }
BitMatrix Gf4StandardForm::A2() const { return omega_indicator(block(k0, k0, k0, k1)); }
Gf4Matrix Gf4StandardForm::A3() const { return block(2 * k0, k1, k0 + k1, n - k0 - k1); }
Gf4Matrix Gf4StandardForm::B1() const { return block(0, k0, k0 + k1, n - k0 - k1); }
Gf4Matrix Gf4StandardForm::B2() const { return block(k0, k0, k0 + k1, n - k0 - k1); }

AdditiveCode Gf4StandardForm::reassemble() const {
    std::vector<Word> out;
    for (Word r : rows) out.push_back(unpermute_coordinates(r, permutation));
    return AdditiveCode(n, std::move(out));
}

Gf4StandardForm gf4_standard_form(const AdditiveCode& code) {
    const unsigned n = code.n();
    std::vector<Word> rows = code.generators();
    std::vector<bool> remaining(rows.size(), true);
    std::vector<bool> used_col(n, false);
    std::vector<std::size_t> x_rows, z_rows, line_rows;
    std::vector<unsigned> k0_cols, k1_cols;
    std::vector<Gf4> lines;

    auto first_remaining = [&](unsigned col, auto&& accept) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (remaining[i] && accept(sp::symbol(rows[i], col))) return i;
        return std::nullopt;
    };

    // Coordinates where the remaining rows project onto all of GF(4).
    for (unsigned j = 0; j < n; ++j) {
        auto a = first_remaining(j, [](Gf4 s) { return s != Gf4::zero; });
        if (!a) continue;
        Gf4 sa = sp::symbol(rows[*a], j);
        auto b = first_remaining(j, [&](Gf4 s) { return s != Gf4::zero && s != sa; });
        if (!b) continue;
        Gf4 sb = sp::symbol(rows[*b], j);
        Word candidates[3] = {rows[*a], rows[*b], rows[*a] ^ rows[*b]};
        Gf4 syms[3] = {sa, sb, gf4_add(sa, sb)};
        Word xr = 0, zr = 0;
        for (int c = 0; c < 3; ++c) {
            if (syms[c] == Gf4::one) xr = candidates[c];
            if (syms[c] == Gf4::omega) zr = candidates[c];
        }
        rows[*a] = xr;
        rows[*b] = zr;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == *a || i == *b) continue;
            auto s = static_cast<unsigned>(sp::symbol(rows[i], j));
            if (s & 1u) rows[i] ^= xr;
            if (s & 2u) rows[i] ^= zr;
        }
        remaining[*a] = remaining[*b] = false;
        used_col[j] = true;
        x_rows.push_back(*a);
        z_rows.push_back(*b);
        k0_cols.push_back(j);
    }

    // Every other coordinate now carries at most one nonzero symbol among the
    // remaining rows.
    for (unsigned j = 0; j < n; ++j) {
        if (used_col[j]) continue;
        auto a = first_remaining(j, [](Gf4 s) { return s != Gf4::zero; });
        if (!a) continue;
        Gf4 alpha = sp::symbol(rows[*a], j);
        Gf4 alpha_w2 = gf4_mul(alpha, Gf4::omega2);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == *a) continue;
            Gf4 s = sp::symbol(rows[i], j);
            bool pivot_row_block = std::find(x_rows.begin(), x_rows.end(), i) != x_rows.end() ||
                                   std::find(z_rows.begin(), z_rows.end(), i) != z_rows.end();
            if (!pivot_row_block && s != Gf4::zero && s != alpha)
                throw InvariantError("standard form: coordinate carries two symbol lines after reduction");
            if (s == alpha || s == alpha_w2) rows[i] ^= rows[*a];
        }
        remaining[*a] = false;
        used_col[j] = true;
        line_rows.push_back(*a);
        k1_cols.push_back(j);
        lines.push_back(alpha);
    }
    if (std::find(remaining.begin(), remaining.end(), true) != remaining.end())
        throw InvariantError("standard form: rows left without a pivot");

    Gf4StandardForm sf;
    sf.n = n;
    sf.k0 = static_cast<unsigned>(k0_cols.size());
    sf.k1 = static_cast<unsigned>(k1_cols.size());
    sf.k1_lines = lines;
    sf.permutation = k0_cols;
    sf.permutation.insert(sf.permutation.end(), k1_cols.begin(), k1_cols.end());
    for (unsigned j = 0; j < n; ++j)
        if (!used_col[j]) sf.permutation.push_back(j);
    for (auto idx : x_rows) sf.rows.push_back(permute_coordinates(rows[idx], sf.permutation));
    for (auto idx : z_rows) sf.rows.push_back(permute_coordinates(rows[idx], sf.permutation));
    for (auto idx : line_rows) sf.rows.push_back(permute_coordinates(rows[idx], sf.permutation));
    return sf;
}

std::vector<Word> BinaryStandardForm::dual_rows() const {
    std::vector<Word> out = rows;
    auto logical = logical_rows();
    out.insert(out.end(), logical.begin(), logical.end());
    return out;
}

std::vector<Word> BinaryStandardForm::logical_rows() const {
    std::vector<Word> zbar, xbar;
    for (unsigned i = 0; i < k; ++i) {
        Word z = Word{1} << (s + i);
        for (unsigned j = 0; j < s; ++j)
            if (A1[j][i]) z |= Word{1} << j;
        zbar.push_back(sp::make(0, z));

        Word x = Word{1} << (s + i);
        for (unsigned m = 0; m < r; ++m)
            if (D2[m][i]) x |= Word{1} << (s + k + m);
        Word zz = 0;
        for (unsigned j = 0; j < s; ++j)
            if (B2[j][i]) zz |= Word{1} << j;
        xbar.push_back(sp::make(x, zz));
    }
    zbar.insert(zbar.end(), xbar.begin(), xbar.end());
    return zbar;
}

AdditiveCode BinaryStandardForm::reassemble() const {
    std::vector<Word> out;
    for (Word row : rows) out.push_back(unpermute_coordinates(row, permutation));
    return AdditiveCode(n, std::move(out));
}

BinaryStandardForm binary_standard_form(const AdditiveCode& stabilizer) {
    if (!is_self_orthogonal(stabilizer)) throw StructureError("binary standard form needs a self-orthogonal code");
    const unsigned n = stabilizer.n();
    std::vector<Word> rows = stabilizer.generators();
    const auto m = static_cast<unsigned>(rows.size());
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;

    auto swap_cols = [&](unsigned i, unsigned j) {
        if (i == j) return;
        for (auto& row : rows) row = swap_columns(row, i, j);
        std::swap(perm[i], perm[j]);
    };

    // Identity block in the x half.
    unsigned s = 0;
    for (; s < m; ++s) {
        std::optional<std::pair<unsigned, unsigned>> pivot;
        for (unsigned c = s; c < n && !pivot; ++c)
            for (unsigned i = s; i < m; ++i)
                if (bit(sp::x_part(rows[i]), c)) {
                    pivot = {c, i};
                    break;
                }
        if (!pivot) break;
        swap_cols(s, pivot->first);
        std::swap(rows[s], rows[pivot->second]);
        for (unsigned i = 0; i < m; ++i)
            if (i != s && bit(sp::x_part(rows[i]), s)) rows[i] ^= rows[s];
    }

    // Remaining rows live in the z half; reduce them on columns >= s.
    const unsigned r = m - s;
    std::vector<unsigned> z_pivots;
    for (unsigned t = 0; t < r; ++t) {
        std::optional<std::pair<unsigned, unsigned>> pivot;
        for (unsigned c = s; c < n && !pivot; ++c) {
            if (std::find(z_pivots.begin(), z_pivots.end(), c) != z_pivots.end()) continue;
            for (unsigned i = s + t; i < m; ++i)
                if (bit(sp::z_part(rows[i]), c)) {
                    pivot = {c, i};
                    break;
                }
        }
        if (!pivot) throw StructureError("z block of the stabilizer is rank deficient");
        auto [c, i] = *pivot;
        std::swap(rows[s + t], rows[i]);
        for (unsigned o = 0; o < m; ++o)
            if (o != s + t && bit(sp::z_part(rows[o]), c)) rows[o] ^= rows[s + t];
        z_pivots.push_back(c);
    }

    // Non-pivot columns >= s go to the middle block, pivots to the end.
    std::vector<unsigned> order;
    for (unsigned c = 0; c < s; ++c) order.push_back(c);
    for (unsigned c = s; c < n; ++c)
        if (std::find(z_pivots.begin(), z_pivots.end(), c) == z_pivots.end()) order.push_back(c);
    order.insert(order.end(), z_pivots.begin(), z_pivots.end());
    for (auto& row : rows) row = permute_coordinates(row, order);
    std::vector<unsigned> composed(n);
    for (unsigned i = 0; i < n; ++i) composed[i] = perm[order[i]];

    BinaryStandardForm f;
    f.n = n;
    f.s = s;
    f.r = r;
    f.k = n - s - r;
    f.permutation = composed;
    f.rows = rows;
    const unsigned k = f.k;
    auto extract = [&](unsigned row0, unsigned nrows, bool z_half, unsigned col0, unsigned ncols) {
        BitMatrix out(nrows, std::vector<std::uint8_t>(ncols));
        for (unsigned i = 0; i < nrows; ++i) {
            Word half = z_half ? sp::z_part(rows[row0 + i]) : sp::x_part(rows[row0 + i]);
            for (unsigned j = 0; j < ncols; ++j) out[i][j] = bit(half, col0 + j) ? 1 : 0;
        }
        return out;
    };
    f.A1 = extract(0, s, false, s, k);
    f.A2 = extract(0, s, false, s + k, r);
    f.B1 = extract(0, s, true, 0, s);
    f.B2 = extract(0, s, true, s, k);
    f.D1 = extract(s, r, true, 0, s);
    f.D2 = extract(s, r, true, s, k);

    auto dual = f.dual_rows();
    for (Word g : f.rows)
        for (Word h : dual)
            if (sp::product(g, h)) throw InvariantError("dual generator is not orthogonal to the code");
    if (gf2::rank(dual) != n + k) throw InvariantError("dual generators do not have rank n + k");
    return f;
}

StandardForm standard_form(const AdditiveCode& code) {
    StandardForm out{gf4_standard_form(code), std::nullopt};
    if (is_self_orthogonal(code)) out.binary = binary_standard_form(code);
    return out;
}

namespace {

Word drop_leading(Word v, unsigned count) { return sp::make(sp::x_part(v) >> count, sp::z_part(v) >> count); }

}  // namespace

AdditiveCode ComplementaryCode::punctured() const {
    std::vector<Word> out;
    for (Word r : rows) out.push_back(drop_leading(r, k0));
    return AdditiveCode(static_cast<unsigned>(permutation.size()) - k0, std::move(out));
}

AdditiveCode ComplementaryCode::shortened() const {
    const unsigned len = static_cast<unsigned>(permutation.size()) - k0;
    const Word restricted = k1 == 0 ? 0 : (Word{1} << k1) - 1;
    auto signature = [&](Word v) { return (sp::x_part(v) | sp::z_part(v)) & restricted; };
    std::vector<std::pair<Word, Word>> pivots;  // (row, pivot bit)
    std::vector<Word> sub;
    const AdditiveCode mixed = punctured();
    for (Word r : mixed.generators()) {
        for (auto [row, pb] : pivots)
            if (signature(r) & pb) r ^= row;
        Word sig = signature(r);
        if (sig == 0)
            sub.push_back(drop_leading(r, k1));
        else
            pivots.emplace_back(r, sig & (~sig + 1));
    }
    return AdditiveCode(len - k1, std::move(sub));
}

std::optional<ComplementaryCode> complementary_code(const AdditiveCode& stabilizer) {
    if (!is_self_orthogonal(stabilizer)) throw StructureError("code is not self-orthogonal");
    if (stabilizer.rank() == stabilizer.n()) return std::nullopt;
    Gf4StandardForm sf = gf4_standard_form(stabilizer);
    ComplementaryCode out;
    out.k0 = sf.k0;
    out.k1 = sf.k1;
    out.permutation = sf.permutation;
    out.k1_lines = sf.k1_lines;

    std::vector<Word> original;
    for (Word v : logical_basis(stabilizer)) {
        v = permute_coordinates(v, sf.permutation);
        for (unsigned i = 0; i < sf.k0; ++i) {
            auto s = static_cast<unsigned>(sp::symbol(v, i));
            if (s & 1u) v ^= sf.rows[i];
            if (s & 2u) v ^= sf.rows[sf.k0 + i];
        }
        for (unsigned j = 0; j < sf.k1; ++j) {
            Gf4 alpha = sf.k1_lines[j];
            Gf4 s = sp::symbol(v, sf.k0 + j);
            if (s == alpha || s == gf4_mul(alpha, Gf4::omega2)) v ^= sf.rows[2 * sf.k0 + j];
        }
        out.rows.push_back(v);
        original.push_back(unpermute_coordinates(v, sf.permutation));
    }
    out.code = AdditiveCode(stabilizer.n(), std::move(original));
    return out;
}

unsigned binary_minimum_distance(const BinaryCode& code) {
    if (code.generators.size() > kMaxEnumerationRank)
        throw CapacityError("binary code rank exceeds the exhaustive enumeration cap 26");
    int best = std::numeric_limits<int>::max();
    gf2::for_each_in_span(code.generators, [&](Word w) {
        if (w) best = std::min(best, std::popcount(w));
    });
    return code.generators.empty() ? 0u : static_cast<unsigned>(best);
}

std::optional<SCode> binary_s_code(const AdditiveCode& stabilizer) {
    if (!is_self_orthogonal(stabilizer)) throw StructureError("code is not self-orthogonal");
    if (stabilizer.rank() == stabilizer.n()) return std::nullopt;
    BinaryStandardForm f = binary_standard_form(stabilizer);
    const unsigned n = f.n, s = f.s, k = f.k;
    if (2 * k > kMaxEnumerationRank) throw CapacityError("S code rank exceeds the exhaustive enumeration cap 26");

    SCode out;
    out.code.length = n + k;
    for (Word v : f.logical_rows()) {
        Word x = sp::x_part(v), z = sp::z_part(v);
        if ((x & ((Word{1} << s) - 1)) != 0 || (z >> (s + k)) != 0)
            throw InvariantError("logical row has support outside the S-code columns");
        out.code.generators.push_back((x >> s) | (z << (n - s)));
    }
    out.min_distance = binary_minimum_distance(out.code);
    return out;
}

std::string to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::mixed: return "mixed";
        case TargetKind::additive: return "additive";
        case TargetKind::additive_shortened: return "additive_shortened";
        case TargetKind::binary: return "binary_s";
    }
    return "unknown";
}

std::string ReductionTarget::describe() const {
    switch (kind) {
        case TargetKind::mixed:
            return "mixed additive code of lengths " + std::to_string(restricted_length) + " and " +
                   std::to_string(length - restricted_length) + ", dimension " + std::to_string(dimension);
        case TargetKind::additive:
        case TargetKind::additive_shortened:
            return "additive [" + std::to_string(length) + ", " + std::to_string(dimension) + "] code";
        case TargetKind::binary:
            return "binary [" + std::to_string(length) + ", " + std::to_string(dimension) + "] code";
    }
    return {};
}

std::vector<ReductionTarget> reduction_targets(const Gf4StandardForm& sf, unsigned n, unsigned k) {
    if (sf.n != n || 2 * sf.k0 + sf.k1 > n || k != n - 2 * sf.k0 - sf.k1)
        throw ParameterError("reduction targets need k = n - 2*k0 - k1");
    std::vector<ReductionTarget> out;
    if (k == 0) return out;
    const unsigned k0 = sf.k0, k1 = sf.k1;
    out.push_back({TargetKind::mixed, k1, n - k0, 2 * k, std::nullopt, std::nullopt});
    if (k1 == 0) out.push_back({TargetKind::additive, 0, n - k0, 2 * k, std::nullopt, std::nullopt});
    if (k1 > 0 && k1 < 2 * k)
        out.push_back({TargetKind::additive_shortened, 0, n - k0 - k1, 2 * k - k1, std::nullopt, std::nullopt});
    out.push_back({TargetKind::binary, 0, n + k, 2 * k, std::nullopt, std::nullopt});
    return out;
}

std::vector<ReductionTarget> realize_reduction_targets(const AdditiveCode& stabilizer) {
    auto comp = complementary_code(stabilizer);
    if (!comp) return {};
    Gf4StandardForm sf = gf4_standard_form(stabilizer);
    const unsigned k = stabilizer.n() - stabilizer.rank();
    auto targets = reduction_targets(sf, stabilizer.n(), k);
    AdditiveCode mixed = comp->punctured();
    for (auto& t : targets) {
        switch (t.kind) {
            case TargetKind::mixed:
            case TargetKind::additive:
                t.realized_dimension = mixed.rank();
                t.min_distance = minimum_weight(mixed);
                break;
            case TargetKind::additive_shortened: {
                AdditiveCode sub = comp->shortened();
                t.realized_dimension = sub.rank();
                t.min_distance = minimum_weight(sub);
                break;
            }
            case TargetKind::binary: {
                auto sc = binary_s_code(stabilizer);
                t.realized_dimension = static_cast<unsigned>(sc->code.generators.size());
                t.min_distance = sc->min_distance;
                break;
            }
        }
    }
    return targets;
}

}  // namespace qbounds

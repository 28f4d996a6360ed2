#include "qbounds/additive_code.hpp"

#include "qbounds/errors.hpp"
#include "qbounds/krawtchouk.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace qbounds {

namespace sp = symplectic;

Gf4 gf4_mul(Gf4 a, Gf4 b) {
    if (a == Gf4::zero || b == Gf4::zero) return Gf4::zero;
    // Nonzero elements as powers of w: 1 = w^0, w = w^1, w^2 = w^2.
    auto log = [](Gf4 s) { return s == Gf4::one ? 0 : s == Gf4::omega ? 1 : 2; };
    static constexpr Gf4 exp[3] = {Gf4::one, Gf4::omega, Gf4::omega2};
    return exp[(log(a) + log(b)) % 3];
}

char gf4_char(Gf4 s) {
    static constexpr char chars[4] = {'0', '1', 'w', 'x'};
    return chars[static_cast<unsigned>(s)];
}

AdditiveCode::AdditiveCode(unsigned n, std::vector<Word> generators) : n_(n), generators_(std::move(generators)) {
    if (n > kMaxLength) throw ParameterError("code length " + std::to_string(n) + " exceeds the supported maximum 32");
    const Word mask = sp::full_mask(n);
    gf2::EchelonBasis basis;
    for (Word g : generators_) {
        if (g & ~mask) throw ParameterError("generator has bits outside length " + std::to_string(n));
        if (!basis.insert(g)) throw ParameterError("generators are linearly dependent");
    }
}

bool AdditiveCode::contains(Word v) const {
    gf2::EchelonBasis basis;
    for (Word g : generators_) basis.insert(g);
    return basis.contains(v);
}

bool AdditiveCode::same_span(const AdditiveCode& other) const {
    if (n_ != other.n_ || rank() != other.rank()) return false;
    gf2::EchelonBasis basis;
    for (Word g : generators_) basis.insert(g);
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](Word g) { return basis.contains(g); });
}

namespace {

std::string strip_comment(std::string_view line) {
    auto hash = line.find('#');
    std::string s(line.substr(0, hash));
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

bool is_pauli(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }
bool is_gf4(char c) { return c == '0' || c == '1' || c == 'w' || c == 'x'; }

Gf4 symbol_of(char c) {
    switch (c) {
        case 'I':
        case '0': return Gf4::zero;
        case 'X':
        case '1': return Gf4::one;
        case 'Z':
        case 'w': return Gf4::omega;
        default: return Gf4::omega2;  // 'Y' or 'x'
    }
}

}  // namespace

AdditiveCode parse_code(std::string_view text) {
    std::vector<Word> rows;
    std::optional<unsigned> length;
    gf2::EchelonBasis basis;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string line = strip_comment(text.substr(start, end - start));
        start = end + 1;
        ++line_no;

        std::string symbols;
        for (char c : line) {
            if (c == ' ' || c == '\t') continue;
            symbols.push_back(c);
        }
        if (symbols.empty()) continue;

        bool pauli = std::all_of(symbols.begin(), symbols.end(), is_pauli);
        bool field = std::all_of(symbols.begin(), symbols.end(), is_gf4);
        if (!pauli && !field) {
            auto bad = std::find_if(symbols.begin(), symbols.end(), [](char c) { return !is_pauli(c) && !is_gf4(c); });
            if (bad != symbols.end()) throw ParseError(line_no, std::string("unknown symbol '") + *bad + "'");
            throw ParseError(line_no, "row mixes Pauli letters and GF(4) symbols");
        }
        if (symbols.size() > kMaxLength) throw ParseError(line_no, "row longer than the supported maximum 32");
        auto n = static_cast<unsigned>(symbols.size());
        if (length && *length != n)
            throw ParseError(line_no, "row has length " + std::to_string(n) + ", expected " + std::to_string(*length));
        length = n;

        Word v = 0;
        for (unsigned i = 0; i < n; ++i) v = sp::with_symbol(v, i, symbol_of(symbols[i]));
        if (!basis.insert(v)) throw ParseError(line_no, "row is linearly dependent on earlier rows");
        rows.push_back(v);
    }
    if (!length) throw ParseError(line_no, "no generator rows");
    return AdditiveCode(*length, std::move(rows));
}

std::string format_code(const AdditiveCode& code) {
    std::ostringstream out;
    for (Word g : code.generators()) {
        for (unsigned i = 0; i < code.n(); ++i) {
            if (i) out << ' ';
            out << gf4_char(sp::symbol(g, i));
        }
        out << '\n';
    }
    return out.str();
}

std::string pauli_string(Word v, unsigned n) {
    static constexpr char letters[4] = {'I', 'X', 'Z', 'Y'};
    std::string s;
    for (unsigned i = 0; i < n; ++i) s.push_back(letters[static_cast<unsigned>(sp::symbol(v, i))]);
    return s;
}

AdditiveCode symplectic_dual(const AdditiveCode& code) {
    std::vector<Word> swapped;
    swapped.reserve(code.rank());
    for (Word g : code.generators()) swapped.push_back(sp::make(sp::z_part(g), sp::x_part(g)));
    return AdditiveCode(code.n(), gf2::orthogonal_complement(swapped, sp::full_mask(code.n())));
}

bool is_self_orthogonal(const AdditiveCode& code) {
    const auto& g = code.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (sp::product(g[i], g[j])) return false;
    return true;
}

namespace {

void require_enumerable(unsigned rank, const char* what) {
    if (rank > kMaxEnumerationRank)
        throw CapacityError(std::string(what) + " has rank " + std::to_string(rank) +
                            "; exhaustive enumeration is capped at rank 26");
}

}  // namespace

std::vector<Integer> weight_distribution(const AdditiveCode& code) {
    require_enumerable(code.rank(), "code");
    std::vector<std::uint64_t> counts(code.n() + 1, 0);
    gf2::for_each_in_span(code.generators(), [&](Word w) { ++counts[sp::weight(w)]; });
    std::vector<Integer> out;
    out.reserve(counts.size());
    for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

unsigned minimum_weight(const AdditiveCode& code) {
    require_enumerable(code.rank(), "code");
    int best = std::numeric_limits<int>::max();
    gf2::for_each_in_span(code.generators(), [&](Word w) {
        if (w) best = std::min(best, sp::weight(w));
    });
    return code.rank() == 0 ? 0u : static_cast<unsigned>(best);
}

std::vector<Word> logical_basis(const AdditiveCode& stabilizer) {
    AdditiveCode dual = symplectic_dual(stabilizer);
    gf2::EchelonBasis basis;
    for (Word g : stabilizer.generators()) basis.insert(g);
    std::vector<Word> out;
    for (Word g : dual.generators())
        if (basis.insert(g)) out.push_back(g);
    return out;
}

QuantumParams quantum_distance(const AdditiveCode& stabilizer) {
    if (!is_self_orthogonal(stabilizer)) throw StructureError("code is not self-orthogonal");
    const unsigned n = stabilizer.n();
    const unsigned dual_rank = 2 * n - stabilizer.rank();
    require_enumerable(dual_rank, "dual code");

    QuantumParams p;
    p.n = n;
    p.k = n - stabilizer.rank();
    p.K = ipow(2, p.k);

    const unsigned stab_min = minimum_weight(stabilizer);
    if (p.k == 0) {
        p.d = stab_min;
        p.zero_dimension_convention = true;
        p.degenerate = false;
        return p;
    }

    auto logicals = logical_basis(stabilizer);
    int best = std::numeric_limits<int>::max();
    Word logical = 0;
    const std::uint64_t count = std::uint64_t{1} << logicals.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        logical ^= logicals[static_cast<std::size_t>(std::countr_zero(i))];
        gf2::for_each_in_span(stabilizer.generators(),
                              [&](Word c) { best = std::min(best, sp::weight(logical ^ c)); });
    }
    p.d = static_cast<unsigned>(best);
    p.degenerate = stabilizer.rank() > 0 && stab_min < p.d;
    return p;
}

EnumeratorPair enumerators(const AdditiveCode& stabilizer) {
    if (!is_self_orthogonal(stabilizer)) throw StructureError("code is not self-orthogonal");
    const unsigned n = stabilizer.n();
    AdditiveCode dual = symplectic_dual(stabilizer);
    require_enumerable(dual.rank(), "dual code");

    EnumeratorPair e;
    e.A = weight_distribution(stabilizer);
    e.B = weight_distribution(dual);
    e.K = ipow(2, n - stabilizer.rank());

    Rational scale(ipow(2, n) * e.K);
    auto transformed = macwilliams_transform(std::span<const Integer>(e.B), n, 4, scale);
    for (unsigned t = 0; t <= n; ++t)
        if (transformed[t] != Rational(e.A[t]))
            throw InvariantError("enumerator transform identity fails at index " + std::to_string(t));
    return e;
}

}  // namespace qbounds

namespace qbounds {

AdditiveCode random_self_orthogonal_code(unsigned n, unsigned rank, std::mt19937_64& rng) {
    if (rank > n) throw ParameterError("a self-orthogonal code of length n has rank at most n");
    std::vector<Word> gens;
    for (unsigned i = 0; i < rank; ++i) {
        AdditiveCode current(n, gens);
        AdditiveCode dual = symplectic_dual(current);
        gf2::EchelonBasis basis;
        for (Word g : gens) basis.insert(g);
        const auto& dg = dual.generators();
        for (;;) {
            std::uint64_t pick = rng();
            Word v = 0;
            for (std::size_t j = 0; j < dg.size(); ++j)
                if (pick >> (j % 64) & 1) v ^= dg[j];
            if (!basis.contains(v)) {
                gens.push_back(v);
                break;
            }
        }
    }
    return AdditiveCode(n, std::move(gens));
}

}  // namespace qbounds

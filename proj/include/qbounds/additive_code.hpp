#pragma once

#include "qbounds/gf2.hpp"
#include "qbounds/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qbounds {

using gf2::Word;

/// Largest supported code length in GF(4) symbols.
inline constexpr unsigned kMaxLength = 32;
/// Exhaustive scans stop at codes of 2^kMaxEnumerationRank words.
inline constexpr unsigned kMaxEnumerationRank = 26;

/// A GF(4) symbol stored as its binary pair: value = x + 2z, so
/// 0 <-> (0,0), 1 <-> (1,0), w <-> (0,1), w^2 <-> (1,1).
enum class Gf4 : std::uint8_t { zero = 0, one = 1, omega = 2, omega2 = 3 };

/// Multiplication in GF(4).
Gf4 gf4_mul(Gf4 a, Gf4 b);
char gf4_char(Gf4 s);  // '0', '1', 'w', 'x'

/// A symplectic vector over n <= 32 coordinates: bits 0..31 hold the x half,
/// bits 32..63 the z half.
namespace symplectic {

inline constexpr Word kLowHalf = 0xFFFFFFFFull;

inline Word x_part(Word v) { return v & kLowHalf; }
inline Word z_part(Word v) { return v >> 32; }
inline Word make(Word x, Word z) { return (x & kLowHalf) | (z << 32); }

/// (a,b).(a',b') = <a,b'> + <a',b>.
inline int product(Word u, Word v) { return gf2::parity((x_part(u) & z_part(v)) ^ (z_part(u) & x_part(v))); }

/// Number of coordinates carrying a nonzero symbol.
inline int weight(Word v) { return std::popcount(x_part(v) | z_part(v)); }

inline Gf4 symbol(Word v, unsigned i) {
    return static_cast<Gf4>((x_part(v) >> i & 1) | (z_part(v) >> i & 1) << 1);
}

inline Word with_symbol(Word v, unsigned i, Gf4 s) {
    auto raw = static_cast<unsigned>(s);
    Word x = (x_part(v) & ~(Word{1} << i)) | Word{raw & 1u} << i;
    Word z = (z_part(v) & ~(Word{1} << i)) | Word{raw >> 1} << i;
    return make(x, z);
}

/// Mask of all valid bits for length n.
inline Word full_mask(unsigned n) {
    Word half = n >= 32 ? kLowHalf : (Word{1} << n) - 1;
    return make(half, half);
}

}  // namespace symplectic

/// An additive (GF(2)-linear) code over GF(4) held by independent binary
/// symplectic generators. Immutable once built.
class AdditiveCode {
public:
    /// Throws ParameterError for n > kMaxLength, out-of-range bits or
    /// dependent generators.
    AdditiveCode(unsigned n, std::vector<Word> generators);

    unsigned n() const noexcept { return n_; }
    const std::vector<Word>& generators() const noexcept { return generators_; }
    /// log2 of the number of codewords.
    unsigned rank() const noexcept { return static_cast<unsigned>(generators_.size()); }

    bool contains(Word v) const;
    /// Same set of codewords.
    bool same_span(const AdditiveCode& other) const;

private:
    unsigned n_;
    std::vector<Word> generators_;
};

/// Parses a code file. Non-comment lines are either Pauli strings over IXYZ
/// or space-separated GF(4) rows over {0,1,w,x}; '#' starts a comment.
AdditiveCode parse_code(std::string_view text);

/// Renders the generators as GF(4) rows, one per line.
std::string format_code(const AdditiveCode& code);

/// Pauli-string rendering of one vector (X <-> 1, Z <-> w, Y <-> w^2).
std::string pauli_string(Word v, unsigned n);

AdditiveCode symplectic_dual(const AdditiveCode& code);

bool is_self_orthogonal(const AdditiveCode& code);

/// Number of codewords of each symplectic weight; entry 0 is 1.
std::vector<Integer> weight_distribution(const AdditiveCode& code);

/// Minimum nonzero symplectic weight; 0 for the zero code.
unsigned minimum_weight(const AdditiveCode& code);

struct QuantumParams {
    unsigned n = 0;
    unsigned k = 0;
    Integer K;
    unsigned d = 0;
    bool degenerate = false;
    /// True when k = 0 and d is the minimum nonzero weight of C.
    bool zero_dimension_convention = false;
};

/// Parameters of the stabilizer code with stabilizer C: d is the minimum
/// weight over C-perp minus C.
QuantumParams quantum_distance(const AdditiveCode& stabilizer);

struct EnumeratorPair {
    std::vector<Integer> A;  // weight distribution of C
    std::vector<Integer> B;  // weight distribution of C-perp
    Integer K;
};

/// Enumerators of the stabilizer code, with the transform identity
/// A = transform(B) / (2^n K) checked exactly before returning.
EnumeratorPair enumerators(const AdditiveCode& stabilizer);

/// Basis of C-perp modulo C: rows of C-perp independent of C, in order of
/// the dual's generators.
std::vector<Word> logical_basis(const AdditiveCode& stabilizer);

/// Uniformly grown self-orthogonal code: each new generator is drawn from the
/// symplectic dual of the ones before it. Requires rank <= n.
AdditiveCode random_self_orthogonal_code(unsigned n, unsigned rank, std::mt19937_64& rng);

}  // namespace qbounds

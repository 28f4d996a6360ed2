#pragma once

#include "qbounds/additive_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qbounds {

using Gf4Matrix = std::vector<std::vector<Gf4>>;
using BitMatrix = std::vector<std::vector<std::uint8_t>>;

/// Moves coordinate permutation[i] of v to position i.
Word permute_coordinates(Word v, const std::vector<unsigned>& permutation);
/// Inverse of permute_coordinates.
Word unpermute_coordinates(Word v, const std::vector<unsigned>& permutation);

/// GF(4) standard form of type 4^k0 2^k1:
///
///     [ 1      w*a1   b1 ]
///     [ w      w*a2   b2 ]
///     [ 0      1      a3 ]
///
/// Rows are stored in standard coordinates: the first k0 columns are the
/// GF(4) pivots, the next k1 columns the single-symbol pivots, then the rest.
/// A k1 column j only ever carries 0 or multiples of its pivot symbol
/// k1_lines[j]; block accessors divide those columns by k1_lines[j] so they
/// print exactly as above.
struct Gf4StandardForm {
    unsigned n = 0;
    unsigned k0 = 0;
    unsigned k1 = 0;
    std::vector<unsigned> permutation;
    std::vector<Gf4> k1_lines;
    /// 2*k0 + k1 rows: k0 rows with 1 on their pivot, k0 rows with w, k1 rows.
    std::vector<Word> rows;

    /// Entry (row, col) with k1 columns normalised to pivot symbol 1.
    Gf4 normalized(unsigned row, unsigned col) const;
    Gf4Matrix block(unsigned row0, unsigned nrows, unsigned col0, unsigned ncols) const;

    /// 1 where the (normalised) entry of the first/second k0-row block equals w.
    BitMatrix A1() const;
    BitMatrix A2() const;
    Gf4Matrix A3() const;
    Gf4Matrix B1() const;
    Gf4Matrix B2() const;

    /// The code spanned by the rows, mapped back to input coordinates.
    AdditiveCode reassemble() const;
};

/// Binary symplectic form of a self-orthogonal code (x half | z half):
///
///     G = [ I_s  A1  A2 | B1  B2  0   ]
///         [ 0    0   0  | D1  D2  I_r ]
///
/// with column blocks of widths s, k, r in each half.
struct BinaryStandardForm {
    unsigned n = 0;
    unsigned s = 0;
    unsigned k = 0;
    unsigned r = 0;
    std::vector<unsigned> permutation;
    std::vector<Word> rows;  // s + r rows, permuted coordinates
    BitMatrix A1, A2, B1, B2, D1, D2;

    /// Generators of the symplectic dual: the rows of G followed by
    /// [0 0 0 | A1^T I_k 0] and [0 I_k D2^T | B2^T 0 0]. Permuted coordinates.
    std::vector<Word> dual_rows() const;
    /// The last 2k rows of dual_rows().
    std::vector<Word> logical_rows() const;

    AdditiveCode reassemble() const;
};

struct StandardForm {
    Gf4StandardForm gf4;
    /// Present only for self-orthogonal codes.
    std::optional<BinaryStandardForm> binary;
};

/// Deterministic symplectic Gaussian elimination; pivot ties go to the lowest
/// coordinate index.
StandardForm standard_form(const AdditiveCode& code);
Gf4StandardForm gf4_standard_form(const AdditiveCode& code);
/// Throws StructureError for codes that are not self-orthogonal.
BinaryStandardForm binary_standard_form(const AdditiveCode& stabilizer);

/// Generators of C-perp modulo C, reduced against the standard form of C.
struct ComplementaryCode {
    unsigned k0 = 0;
    unsigned k1 = 0;
    std::vector<unsigned> permutation;
    std::vector<Gf4> k1_lines;
    /// 2k rows in standard coordinates: zero on the first k0 coordinates and
    /// in {0, w * k1_lines[j]} on the next k1.
    std::vector<Word> rows;
    /// The rows in input coordinates.
    AdditiveCode code{0, {}};

    /// Mixed code of length n - k0 (first k1 coordinates restricted).
    AdditiveCode punctured() const;
    /// Subcode vanishing on the k1 restricted coordinates, punctured to
    /// length n - k0 - k1. Dimension is at least 2k - k1.
    AdditiveCode shortened() const;
};

/// nullopt when k = 0. Requires a self-orthogonal code.
std::optional<ComplementaryCode> complementary_code(const AdditiveCode& stabilizer);

struct BinaryCode {
    unsigned length = 0;
    std::vector<Word> generators;
};

/// Minimum Hamming weight of the nonzero words (0 for the zero code).
unsigned binary_minimum_distance(const BinaryCode& code);

struct SCode {
    BinaryCode code;
    unsigned min_distance = 0;
};

/// The [n+k, 2k] binary code of the logical rows, with its exhaustive
/// minimum distance. nullopt when k = 0.
std::optional<SCode> binary_s_code(const AdditiveCode& stabilizer);

enum class TargetKind { mixed, additive, additive_shortened, binary };

std::string to_string(TargetKind kind);

/// A classical code whose minimum distance bounds the quantum distance from
/// above.
struct ReductionTarget {
    TargetKind kind = TargetKind::mixed;
    unsigned restricted_length = 0;  // l, mixed codes only
    unsigned length = 0;
    unsigned dimension = 0;  // log2 of the size
    /// Filled by realize_reduction_targets.
    std::optional<unsigned> realized_dimension;
    std::optional<unsigned> min_distance;

    std::string describe() const;
};

/// Parameter-level targets; requires k == n - 2*k0 - k1.
std::vector<ReductionTarget> reduction_targets(const Gf4StandardForm& sf, unsigned n, unsigned k);

/// Builds each target from the code and brute-forces its minimum distance.
/// Empty when k = 0.
std::vector<ReductionTarget> realize_reduction_targets(const AdditiveCode& stabilizer);

}  // namespace qbounds

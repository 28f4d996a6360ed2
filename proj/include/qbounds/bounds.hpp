#pragma once

#include "qbounds/krawtchouk.hpp"
#include "qbounds/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qbounds {

enum class BoundName { singleton, hamming, levenshtein, lp, mixed_hamming, prop2, custom_poly };

std::string to_string(BoundName name);
/// Accepts the names produced by to_string. Throws ParameterError otherwise.
BoundName parse_bound_name(const std::string& text);

/// Outcome of one bound. For bounds on 2^n K, value_on_2nK is the exact upper
/// bound (nullopt when unbounded or not applicable) and
/// k_max = floor(log2(value_on_2nK)) - n.
struct BoundVerdict {
    BoundName name = BoundName::custom_poly;
    unsigned n = 0;
    unsigned d = 0;
    std::optional<Rational> value_on_2nK;
    std::optional<std::int64_t> k_max;
    bool applicable = true;
    std::string reason;
    /// Set when the verdict was evaluated against a concrete code size.
    std::optional<bool> passes;
    /// Additional named values, in insertion order.
    std::vector<std::pair<std::string, std::string>> details;

    /// Whether 2^n K stays within the bound. nullopt when the verdict carries
    /// no value on 2^n K.
    std::optional<bool> admits(const Rational& K) const;
};

/// One entry of the certificate for the sign conditions.
struct ConditionRecord {
    enum class Kind { coefficient, value };
    Kind kind = Kind::coefficient;
    unsigned index = 0;
    Rational value;
    bool satisfied = false;
};

/// A polynomial meeting f_0 > 0, f_i >= 0 for all i, f(0) > 0 and
/// f(i) <= 0 for integers d <= i <= n.
struct FeasiblePolynomial {
    ExactPolynomial f;
    KrawtchoukExpansion expansion;
    unsigned n = 0;
    unsigned d = 0;
    std::vector<ConditionRecord> certificate;
};

struct ConditionReport {
    std::vector<ConditionRecord> records;
    std::vector<ConditionRecord> violations;
    std::optional<FeasiblePolynomial> polynomial;

    bool accepted() const { return polynomial.has_value(); }
};

/// Exact check of every sign condition; the report lists each violated index.
ConditionReport check_conditions(const ExactPolynomial& f, unsigned d);

/// 2^n K <= f(0) / f_0.
BoundVerdict polynomial_bound(const FeasiblePolynomial& fp, BoundName name = BoundName::custom_poly);

/// 4^(n-d+1) prod_{j=d}^{n} (1 - x/j).
ExactPolynomial singleton_polynomial(unsigned n, unsigned d);
/// The polynomial with Krawtchouk coefficients (P_e(i-1, n-1) / V)^2, where
/// V = sum_{s<=e} 3^s C(n,s) and e = floor((d-1)/2).
ExactPolynomial hamming_polynomial(unsigned n, unsigned d);
/// sum_{s<=e} 3^s C(n,s).
Integer hamming_ball(unsigned n, unsigned e);

BoundVerdict singleton_bound(unsigned n, unsigned d);
BoundVerdict hamming_bound(unsigned n, unsigned d);

/// Levenshtein-type bound 2^n K <= L(d), branch chosen by exact comparisons
/// against smallest Krawtchouk roots. At an exact breakpoint both neighbouring
/// branch values are reported and the larger one is used.
BoundVerdict levenshtein_bound(unsigned n, unsigned d);

/// Value of L_k^m(x) = sum_{i<k} C(m,i) 3^i - C(m,k) 3^k P_{k-1}(x-1, m-1) / P_k(x, m).
Rational levenshtein_branch_value(unsigned k, unsigned m, const Rational& x);

/// Exact LP over pure enumerators: does some B >= 0 with B_0 = 1,
/// B_1..B_{d-1} = 0 make A = transform(B) / (2^n K) satisfy A_0 = 1,
/// A_1..A_{d-1} = 0, A_i >= 0?
struct LpVerdict {
    bool feasible = false;
    /// Witness B_0..B_n when feasible.
    std::vector<Rational> witness;
    /// When infeasible: Krawtchouk coefficients c of a polynomial with
    /// c_t >= 0 for t >= d, f(i) <= 0 for i >= d and f(0) < 2^n K c_0.
    std::optional<KrawtchoukExpansion> certificate;
};

inline constexpr unsigned kMaxLpLength = 16;

LpVerdict lp_feasible(unsigned n, const Rational& K, unsigned d);

bool lp_witness_valid(unsigned n, const Rational& K, unsigned d, const std::vector<Rational>& B);
bool lp_certificate_valid(unsigned n, const Rational& K, unsigned d, const KrawtchoukExpansion& c);

/// Largest 2^n K for which lp_feasible holds; nullopt when infeasible for
/// every K.
struct LpMaximum {
    std::optional<Rational> max_2nK;
    std::vector<Rational> witness;
};
LpMaximum lp_maximum(unsigned n, unsigned d);
BoundVerdict lp_bound(unsigned n, unsigned d);

/// sum_{i<=e} sum_{j<=i} C(l,j) 3^(i-j) C(n_total-l, i-j): words within
/// distance e in a mixed space with l restricted coordinates.
Integer mixed_ball(unsigned l, unsigned n_total, unsigned e);

/// Sphere packing for an additive mixed code: ball(e) <= 2^(2 n_total - l - dim).
BoundVerdict mixed_hamming_check(unsigned l, unsigned n_total, unsigned dim, unsigned d);

/// Hamming-type bound for [[n,k,d]] stabilizer codes of type 4^k0 2^k1,
/// degenerate or not. Reports both right-hand sides; the tight one decides.
BoundVerdict prop2_check(unsigned n, unsigned k, unsigned k0, unsigned k1, unsigned d);

}  // namespace qbounds

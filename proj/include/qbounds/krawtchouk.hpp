#pragma once

#include "qbounds/rational.hpp"

#include <compare>
#include <span>
#include <vector>

namespace qbounds {

/// Univariate polynomial with exact rational coefficients over the Hamming
/// scheme H(n, q). coeffs()[i] is the coefficient of x^i; trailing zeros are
/// trimmed and the degree never exceeds n.
class ExactPolynomial {
public:
    ExactPolynomial(std::vector<Rational> power_coeffs, unsigned n, unsigned q = 4);

    /// The constant polynomial c on H(n, q).
    static ExactPolynomial constant(const Rational& c, unsigned n, unsigned q = 4);

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    unsigned n() const noexcept { return n_; }
    unsigned q() const noexcept { return q_; }

    Rational operator()(const Rational& x) const;

    bool operator==(const ExactPolynomial&) const = default;

private:
    std::vector<Rational> coeffs_;
    unsigned n_;
    unsigned q_;
};

/// Coefficients f_0..f_n of f = sum_i f_i P_i(x, n).
struct KrawtchoukExpansion {
    std::vector<Rational> coeffs;
    unsigned n = 0;
    unsigned q = 4;
};

/// P_t(x, n) = sum_j (-1)^j (q-1)^(t-j) C(x, j) C(n-x, t-j), where the
/// binomials are falling-factorial polynomials so x may be any rational.
Rational krawtchouk_eval(unsigned t, const Rational& x, unsigned n, unsigned q = 4);

/// P_t(., n) in the power basis.
ExactPolynomial krawtchouk_polynomial(unsigned t, unsigned n, unsigned q = 4);

/// table[t][i] = P_t(i, n) for integers 0 <= t, i <= n.
std::vector<std::vector<Integer>> krawtchouk_table(unsigned n, unsigned q = 4);

/// Exact change of basis from powers of x to Krawtchouk polynomials.
KrawtchoukExpansion krawtchouk_expand(const ExactPolynomial& f);

/// Inverse of krawtchouk_expand.
ExactPolynomial krawtchouk_synthesize(const KrawtchoukExpansion& e);

/// Closed interval [lo, hi]; lo == hi when the endpoint is exact.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
};

/// Interval of width <= tol holding the smallest real root of P_k(x, n).
/// Bisection driven by exact Sturm counts on [0, n].
RootInterval krawtchouk_smallest_root(unsigned k, unsigned n, unsigned q, const Rational& tol);

/// Exact position of c relative to the smallest root r of P_k(x, n):
/// `less` means c < r.
std::strong_ordering compare_with_smallest_root(const Rational& c, unsigned k, unsigned n, unsigned q = 4);

/// A_t = (1/scale) sum_i B_i P_t(i, n).
std::vector<Rational> macwilliams_transform(std::span<const Rational> dist, unsigned n, unsigned q,
                                            const Rational& scale);
std::vector<Rational> macwilliams_transform(std::span<const Integer> dist, unsigned n, unsigned q,
                                            const Rational& scale);

}  // namespace qbounds

#include "qbounds/krawtchouk.hpp"

#include "qbounds/errors.hpp"

#include <utility>

namespace qbounds {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

void add_scaled(Poly& acc, const Poly& p, const Rational& c) {
    if (acc.size() < p.size()) acc.resize(p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
    trim(acc);
}

Poly derivative(const Poly& p) {
    Poly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
    trim(out);
    return out;
}

/// Remainder of a divided by b (b nonzero).
Poly remainder(Poly a, const Poly& b) {
    const Rational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

/// C(x, j) as a polynomial in x.
Poly binomial_in_x(unsigned j) {
    Poly out{Rational(1)};
    for (unsigned i = 0; i < j; ++i) out = mul(out, Poly{Rational(-static_cast<long>(i)), Rational(1)});
    Rational fact = 1;
    for (unsigned i = 2; i <= j; ++i) fact *= i;
    for (auto& c : out) c /= fact;
    return out;
}

/// C(n - x, m) as a polynomial in x.
Poly binomial_in_complement(unsigned n, unsigned m) {
    Poly out{Rational(1)};
    for (unsigned i = 0; i < m; ++i)
        out = mul(out, Poly{Rational(static_cast<long>(n) - static_cast<long>(i)), Rational(-1)});
    Rational fact = 1;
    for (unsigned i = 2; i <= m; ++i) fact *= i;
    for (auto& c : out) c /= fact;
    return out;
}

Poly krawtchouk_poly(unsigned t, unsigned n, unsigned q) {
    Poly out;
    for (unsigned j = 0; j <= t; ++j) {
        Rational c(ipow(static_cast<std::int64_t>(q) - 1, t - j));
        if (j % 2 == 1) c = -c;
        add_scaled(out, mul(binomial_in_x(j), binomial_in_complement(n, t - j)), c);
    }
    return out;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, derivative(p)};
    while (!chain.back().empty()) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

void check_alphabet(unsigned q) {
    if (q < 2) throw ParameterError("alphabet size q must be at least 2");
}

/// Locates c against the smallest root of p, where p(lo_anchor) != 0 and
/// every root of p exceeds lo_anchor.
std::strong_ordering compare_smallest(const Poly& p, const std::vector<Poly>& chain, const Rational& lo_anchor,
                                      const Rational& c) {
    if (c <= lo_anchor) return std::strong_ordering::less;
    int roots_up_to_c = sign_variations(chain, lo_anchor) - sign_variations(chain, c);
    if (roots_up_to_c == 0) return std::strong_ordering::less;
    if (roots_up_to_c == 1 && eval(p, c) == 0) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
}

}  // namespace

ExactPolynomial::ExactPolynomial(std::vector<Rational> power_coeffs, unsigned n, unsigned q)
    : coeffs_(std::move(power_coeffs)), n_(n), q_(q) {
    check_alphabet(q);
    trim(coeffs_);
    if (degree() > static_cast<int>(n))
        throw ParameterError("polynomial degree " + std::to_string(degree()) + " exceeds n = " + std::to_string(n));
}

ExactPolynomial ExactPolynomial::constant(const Rational& c, unsigned n, unsigned q) {
    return ExactPolynomial({c}, n, q);
}

Rational ExactPolynomial::operator()(const Rational& x) const { return eval(coeffs_, x); }

Rational krawtchouk_eval(unsigned t, const Rational& x, unsigned n, unsigned q) {
    check_alphabet(q);
    if (t > n) throw ParameterError("Krawtchouk degree t exceeds n");
    Rational sum = 0;
    Rational complement = Rational(n) - x;
    for (unsigned j = 0; j <= t; ++j) {
        Rational term = Rational(ipow(static_cast<std::int64_t>(q) - 1, t - j)) * falling_binomial(x, j) *
                        falling_binomial(complement, t - j);
        if (j % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

ExactPolynomial krawtchouk_polynomial(unsigned t, unsigned n, unsigned q) {
    check_alphabet(q);
    if (t > n) throw ParameterError("Krawtchouk degree t exceeds n");
    return ExactPolynomial(krawtchouk_poly(t, n, q), n, q);
}

std::vector<std::vector<Integer>> krawtchouk_table(unsigned n, unsigned q) {
    check_alphabet(q);
    std::vector<std::vector<Integer>> table(n + 1, std::vector<Integer>(n + 1));
    for (unsigned t = 0; t <= n; ++t) {
        for (unsigned i = 0; i <= n; ++i) {
            Integer sum = 0;
            for (unsigned j = 0; j <= t; ++j) {
                Integer term = ipow(static_cast<std::int64_t>(q) - 1, t - j) * binomial(i, j) * binomial(n - i, t - j);
                if (j % 2 == 1)
                    sum -= term;
                else
                    sum += term;
            }
            table[t][i] = sum;
        }
    }
    return table;
}

KrawtchoukExpansion krawtchouk_expand(const ExactPolynomial& f) {
    const unsigned n = f.n();
    const unsigned q = f.q();
    KrawtchoukExpansion out{std::vector<Rational>(n + 1, Rational(0)), n, q};
    Poly rest = f.coeffs();
    // P_t has degree exactly t, so the system is triangular.
    for (int t = f.degree(); t >= 0; --t) {
        if (static_cast<int>(rest.size()) <= t) continue;
        Poly pt = krawtchouk_poly(static_cast<unsigned>(t), n, q);
        Rational c = rest[t] / pt.back();
        out.coeffs[t] = c;
        add_scaled(rest, pt, -c);
    }
    if (!rest.empty()) throw InvariantError("Krawtchouk expansion left a nonzero remainder");
    return out;
}

ExactPolynomial krawtchouk_synthesize(const KrawtchoukExpansion& e) {
    if (e.coeffs.size() != e.n + 1) throw ParameterError("expansion must carry n + 1 coefficients");
    Poly out;
    for (unsigned t = 0; t <= e.n; ++t)
        if (e.coeffs[t] != 0) add_scaled(out, krawtchouk_poly(t, e.n, e.q), e.coeffs[t]);
    return ExactPolynomial(std::move(out), e.n, e.q);
}

RootInterval krawtchouk_smallest_root(unsigned k, unsigned n, unsigned q, const Rational& tol) {
    check_alphabet(q);
    if (k == 0) throw NoRootError("P_0 is constant and has no roots");
    if (k > n) throw ParameterError("root requested for k > n");
    if (tol <= 0) throw ParameterError("tolerance must be positive");

    Poly p = krawtchouk_poly(k, n, q);
    if (p.size() == 2) {
        Rational root = -p[0] / p[1];
        return {root, root};
    }
    auto chain = sturm_chain(p);
    Rational lo = 0;
    Rational hi = n;
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        auto cmp = compare_smallest(p, chain, Rational(0), mid);
        if (cmp == std::strong_ordering::equal) return {mid, mid};
        if (cmp == std::strong_ordering::less)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

std::strong_ordering compare_with_smallest_root(const Rational& c, unsigned k, unsigned n, unsigned q) {
    check_alphabet(q);
    if (k == 0) throw NoRootError("P_0 is constant and has no roots");
    if (k > n) throw ParameterError("root requested for k > n");
    Poly p = krawtchouk_poly(k, n, q);
    return compare_smallest(p, sturm_chain(p), Rational(0), c);
}

std::vector<Rational> macwilliams_transform(std::span<const Rational> dist, unsigned n, unsigned q,
                                            const Rational& scale) {
    if (scale <= 0) throw ParameterError("transform scale must be positive");
    if (dist.size() != n + 1) throw ParameterError("distribution length must be n + 1");
    auto table = krawtchouk_table(n, q);
    std::vector<Rational> out(n + 1);
    for (unsigned t = 0; t <= n; ++t) {
        Rational sum = 0;
        for (unsigned i = 0; i <= n; ++i) sum += dist[i] * Rational(table[t][i]);
        out[t] = sum / scale;
    }
    return out;
}

std::vector<Rational> macwilliams_transform(std::span<const Integer> dist, unsigned n, unsigned q,
                                            const Rational& scale) {
    std::vector<Rational> r(dist.begin(), dist.end());
    return macwilliams_transform(std::span<const Rational>(r), n, q, scale);
}

}  // namespace qbounds

#include "qbounds/bounds.hpp"

#include "qbounds/errors.hpp"
#include "qbounds/simplex.hpp"

#include <array>

namespace qbounds {

namespace {

constexpr std::array<std::pair<BoundName, const char*>, 7> kNames{{
    {BoundName::singleton, "singleton"},
    {BoundName::hamming, "hamming"},
    {BoundName::levenshtein, "levenshtein"},
    {BoundName::lp, "lp"},
    {BoundName::mixed_hamming, "mixed_hamming"},
    {BoundName::prop2, "prop2"},
    {BoundName::custom_poly, "custom_poly"},
}};

void require_nd(unsigned n, unsigned d) {
    if (d < 1 || d > n) throw ParameterError("need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
}

void set_value(BoundVerdict& v, const Rational& value) {
    v.value_on_2nK = value;
    v.k_max = floor_log2(value) - static_cast<std::int64_t>(v.n);
}

BoundVerdict inapplicable(BoundName name, unsigned n, unsigned d, std::string reason) {
    BoundVerdict v;
    v.name = name;
    v.n = n;
    v.d = d;
    v.applicable = false;
    v.reason = std::move(reason);
    return v;
}

Rational scale_of(unsigned n, const Rational& K) { return pow2(n) * K; }

}  // namespace

std::string to_string(BoundName name) {
    for (auto [k, s] : kNames)
        if (k == name) return s;
    return "unknown";
}

BoundName parse_bound_name(const std::string& text) {
    for (auto [k, s] : kNames)
        if (text == s) return k;
    throw ParameterError("unknown bound '" + text + "'");
}

std::optional<bool> BoundVerdict::admits(const Rational& K) const {
    if (!value_on_2nK) return std::nullopt;
    return scale_of(n, K) <= *value_on_2nK;
}

ConditionReport check_conditions(const ExactPolynomial& f, unsigned d) {
    const unsigned n = f.n();
    require_nd(n, d);
    ConditionReport report;
    KrawtchoukExpansion ex = krawtchouk_expand(f);

    auto record = [&](ConditionRecord::Kind kind, unsigned i, const Rational& value, bool ok) {
        ConditionRecord r{kind, i, value, ok};
        report.records.push_back(r);
        if (!ok) report.violations.push_back(r);
    };
    for (unsigned i = 0; i <= n; ++i) {
        const Rational& c = ex.coeffs[i];
        record(ConditionRecord::Kind::coefficient, i, c, i == 0 ? c > 0 : c >= 0);
    }
    Rational f0 = f(Rational(0));
    record(ConditionRecord::Kind::value, 0, f0, f0 > 0);
    for (unsigned i = d; i <= n; ++i) {
        Rational fi = f(Rational(i));
        record(ConditionRecord::Kind::value, i, fi, fi <= 0);
    }

    if (report.violations.empty())
        report.polynomial = FeasiblePolynomial{f, std::move(ex), n, d, report.records};
    return report;
}

BoundVerdict polynomial_bound(const FeasiblePolynomial& fp, BoundName name) {
    BoundVerdict v;
    v.name = name;
    v.n = fp.n;
    v.d = fp.d;
    set_value(v, fp.f(Rational(0)) / fp.expansion.coeffs.at(0));
    return v;
}

ExactPolynomial singleton_polynomial(unsigned n, unsigned d) {
    require_nd(n, d);
    std::vector<Rational> p{Rational(ipow(4, n - d + 1))};
    for (unsigned j = d; j <= n; ++j) {
        // multiply by (1 - x/j)
        std::vector<Rational> next(p.size() + 1, Rational(0));
        Rational inv(1, j);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i] += p[i];
            next[i + 1] -= p[i] * inv;
        }
        p = std::move(next);
    }
    return ExactPolynomial(std::move(p), n);
}

Integer hamming_ball(unsigned n, unsigned e) {
    Integer v = 0;
    for (unsigned s = 0; s <= e && s <= n; ++s) v += ipow(3, s) * binomial(n, s);
    return v;
}

ExactPolynomial hamming_polynomial(unsigned n, unsigned d) {
    require_nd(n, d);
    const unsigned e = (d - 1) / 2;
    Rational V(hamming_ball(n, e));
    KrawtchoukExpansion ex;
    ex.n = n;
    ex.q = 4;
    for (unsigned i = 0; i <= n; ++i) {
        Rational r = krawtchouk_eval(e, Rational(static_cast<long>(i) - 1), n - 1) / V;
        ex.coeffs.push_back(r * r);
    }
    return krawtchouk_synthesize(ex);
}

BoundVerdict singleton_bound(unsigned n, unsigned d) {
    ConditionReport rep = check_conditions(singleton_polynomial(n, d), d);
    if (!rep.accepted()) throw InvariantError("singleton polynomial failed the sign conditions");
    BoundVerdict v = polynomial_bound(*rep.polynomial, BoundName::singleton);
    if (*v.value_on_2nK != Rational(ipow(4, n - d + 1)))
        throw InvariantError("singleton pipeline value differs from 4^(n-d+1)");
    v.details.emplace_back("closed_form_K", to_string(pow2(static_cast<std::int64_t>(n) - 2 * d + 2)));
    return v;
}

BoundVerdict hamming_bound(unsigned n, unsigned d) {
    require_nd(n, d);
    const unsigned e = (d - 1) / 2;
    ConditionReport rep = check_conditions(hamming_polynomial(n, d), d);
    if (!rep.accepted()) throw InvariantError("hamming polynomial failed the sign conditions");
    const auto& f = rep.polynomial->f;
    for (unsigned i = 2 * e + 1; i <= n; ++i)
        if (f(Rational(i)) != 0) throw InvariantError("hamming polynomial does not vanish at " + std::to_string(i));
    BoundVerdict v = polynomial_bound(*rep.polynomial, BoundName::hamming);
    Integer ball = hamming_ball(n, e);
    if (*v.value_on_2nK != Rational(ipow(4, n)) / Rational(ball))
        throw InvariantError("hamming pipeline value differs from 4^n / ball");
    v.details.emplace_back("e", std::to_string(e));
    v.details.emplace_back("ball", to_string(ball));
    if (d % 2 == 0) v.details.emplace_back("even_d", "packing radius floor((d-1)/2) leaves d-1 unused");
    return v;
}

Rational levenshtein_branch_value(unsigned k, unsigned m, const Rational& x) {
    if (k < 1 || k > m) throw ParameterError("levenshtein branch needs 1 <= k <= m");
    Rational sum = 0;
    for (unsigned i = 0; i < k; ++i) sum += Rational(binomial(m, i) * ipow(3, i));
    Rational den = krawtchouk_eval(k, x, m);
    if (den == 0) throw DomainError("P_k vanishes at the evaluation point");
    return sum - Rational(binomial(m, k) * ipow(3, k)) * krawtchouk_eval(k - 1, x - 1, m - 1) / den;
}

BoundVerdict levenshtein_bound(unsigned n, unsigned d) {
    require_nd(n, d);
    if (d < 2) return inapplicable(BoundName::levenshtein, n, d, "requires d >= 2");
    if (n < 3) return inapplicable(BoundName::levenshtein, n, d, "requires n >= 3");

    const Rational x(d);
    const Rational y(d - 1);
    // Branches in decreasing order of x: odd k=1 (x > d_1(n-1)+1), even k=1,
    // odd k=2, ... Each branch lies between two breakpoints d_j(m)+1.
    auto odd_value = [&](unsigned k) -> Rational { return levenshtein_branch_value(k, n, x); };
    auto even_value = [&](unsigned k) -> Rational { return Rational(4) * levenshtein_branch_value(k, n - 1, x); };

    auto make = [&](const Rational& value, const std::string& branch) {
        BoundVerdict v;
        v.name = BoundName::levenshtein;
        v.n = n;
        v.d = d;
        set_value(v, value);
        v.details.emplace_back("branch", branch);
        return v;
    };
    auto boundary = [&](const Rational& above, const std::string& above_name, const std::optional<Rational>& below,
                        const std::string& below_name) {
        Rational value = above;
        if (below && *below > value) value = *below;
        BoundVerdict v = make(value, "boundary");
        v.reason = "d sits exactly on a branch breakpoint; the larger neighbouring value is used";
        v.details.emplace_back(above_name, to_string(above));
        if (below) v.details.emplace_back(below_name, to_string(*below));
        return v;
    };

    for (unsigned k = 1; k <= n - 1; ++k) {
        // odd branch k: d_k(n-1)+1 < x < d_{k-1}(n-2)+1
        auto lower = compare_with_smallest_root(y, k, n - 1);
        if (lower == std::strong_ordering::greater)
            return make(odd_value(k), "odd k=" + std::to_string(k));
        if (lower == std::strong_ordering::equal) {
            std::optional<Rational> below;
            if (k <= n - 2) below = even_value(k);
            return boundary(odd_value(k), "odd_k" + std::to_string(k), below, "even_k" + std::to_string(k));
        }
        // even branch k: d_k(n-2)+1 < x < d_k(n-1)+1
        if (k > n - 2) break;
        auto lower_even = compare_with_smallest_root(y, k, n - 2);
        if (lower_even == std::strong_ordering::greater)
            return make(even_value(k), "even k=" + std::to_string(k));
        if (lower_even == std::strong_ordering::equal) {
            std::optional<Rational> below;
            if (k + 1 <= n - 1) below = odd_value(k + 1);
            return boundary(even_value(k), "even_k" + std::to_string(k), below, "odd_k" + std::to_string(k + 1));
        }
    }
    return inapplicable(BoundName::levenshtein, n, d, "d lies below every branch");
}

namespace {

void require_lp(unsigned n, unsigned d) {
    if (n > kMaxLpLength)
        throw CapacityError("LP length " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxLpLength));
    require_nd(n, d);
}

/// Rows t = 1..n of the pure-code system over x_i = B_i, i = d..n.
/// Equalities for t < d, >= for t >= d, each with rhs -P_t(0).
std::vector<LinearConstraint> pure_rows(unsigned n, unsigned d, const std::vector<std::vector<Integer>>& P) {
    std::vector<LinearConstraint> rows;
    for (unsigned t = 1; t <= n; ++t) {
        LinearConstraint c;
        for (unsigned i = d; i <= n; ++i) c.coeffs.emplace_back(P[t][i]);
        c.relation = t < d ? Relation::equal : Relation::greater_equal;
        c.rhs = Rational(-P[t][0]);
        rows.push_back(std::move(c));
    }
    return rows;
}

std::vector<Rational> witness_from(unsigned n, unsigned d, const std::vector<Rational>& x) {
    std::vector<Rational> B(n + 1, Rational(0));
    B[0] = 1;
    for (unsigned i = d; i <= n; ++i) B[i] = x[i - d];
    return B;
}

/// Maximises S c_0 - f(0) over the box |c_t| <= 1 subject to c_t >= 0 for
/// t >= d and f(i) <= 0 for i >= d. Positive optimum means infeasibility.
std::pair<Rational, KrawtchoukExpansion> farkas(unsigned n, unsigned d, const Rational& S,
                                                const std::vector<std::vector<Integer>>& P) {
    // Variables: p_t, m_t for t < d (c_t = p_t - m_t), then c_t for t >= d.
    const std::size_t nv = 2 * d + (n + 1 - d);
    auto col_plus = [&](unsigned t) { return t < d ? 2 * t : 2 * d + (t - d); };
    LinearProgram lp;
    lp.num_vars = nv;
    lp.objective.assign(nv, Rational(0));
    for (unsigned t = 0; t <= n; ++t) {
        Rational w = -Rational(P[t][0]);
        if (t == 0) w += S;
        lp.objective[col_plus(t)] += w;
        if (t < d) lp.objective[col_plus(t) + 1] -= w;
    }
    for (unsigned i = d; i <= n; ++i) {
        LinearConstraint c;
        c.coeffs.assign(nv, Rational(0));
        for (unsigned t = 0; t <= n; ++t) {
            c.coeffs[col_plus(t)] += Rational(P[t][i]);
            if (t < d) c.coeffs[col_plus(t) + 1] -= Rational(P[t][i]);
        }
        c.relation = Relation::less_equal;
        c.rhs = 0;
        lp.constraints.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < nv; ++j) {
        LinearConstraint c;
        c.coeffs.assign(nv, Rational(0));
        c.coeffs[j] = 1;
        c.relation = Relation::less_equal;
        c.rhs = 1;
        lp.constraints.push_back(std::move(c));
    }
    LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::optimal) throw SolverError("certificate LP did not reach an optimum");
    KrawtchoukExpansion cert;
    cert.n = n;
    cert.q = 4;
    for (unsigned t = 0; t <= n; ++t) {
        Rational c = sol.x[col_plus(t)];
        if (t < d) c -= sol.x[col_plus(t) + 1];
        cert.coeffs.push_back(c);
    }
    return {sol.value, std::move(cert)};
}

}  // namespace

LpVerdict lp_feasible(unsigned n, const Rational& K, unsigned d) {
    require_lp(n, d);
    if (K <= 0) throw ParameterError("K must be positive");
    const Rational S = scale_of(n, K);
    auto P = krawtchouk_table(n);

    LinearProgram lp;
    lp.num_vars = n + 1 - d;
    lp.objective.assign(lp.num_vars, Rational(0));
    LinearConstraint total;
    total.coeffs.assign(lp.num_vars, Rational(1));
    total.relation = Relation::equal;
    total.rhs = S - 1;
    lp.constraints.push_back(std::move(total));
    for (auto& row : pure_rows(n, d, P)) lp.constraints.push_back(std::move(row));
    LpSolution sol = solve_lp(lp);

    auto [gap, cert] = farkas(n, d, S, P);
    const bool feasible = sol.status == LpStatus::optimal;
    if (feasible == (gap > 0)) throw InvariantError("LP feasibility and its certificate disagree");

    LpVerdict v;
    v.feasible = feasible;
    if (feasible) {
        v.witness = witness_from(n, d, sol.x);
        if (!lp_witness_valid(n, K, d, v.witness)) throw InvariantError("LP witness failed verification");
    } else {
        if (!lp_certificate_valid(n, K, d, cert)) throw InvariantError("LP certificate failed verification");
        v.certificate = std::move(cert);
    }
    return v;
}

bool lp_witness_valid(unsigned n, const Rational& K, unsigned d, const std::vector<Rational>& B) {
    require_nd(n, d);
    if (B.size() != n + 1 || B[0] != 1) return false;
    for (unsigned i = 1; i <= n; ++i) {
        if (B[i] < 0) return false;
        if (i < d && B[i] != 0) return false;
    }
    auto A = macwilliams_transform(std::span<const Rational>(B), n, 4, scale_of(n, K));
    if (A[0] != 1) return false;
    for (unsigned t = 1; t <= n; ++t) {
        if (A[t] < 0) return false;
        if (t < d && A[t] != 0) return false;
    }
    return true;
}

bool lp_certificate_valid(unsigned n, const Rational& K, unsigned d, const KrawtchoukExpansion& c) {
    require_nd(n, d);
    if (c.coeffs.size() != n + 1) return false;
    for (unsigned t = d; t <= n; ++t)
        if (c.coeffs[t] < 0) return false;
    auto P = krawtchouk_table(n);
    auto f = [&](unsigned i) {
        Rational s = 0;
        for (unsigned t = 0; t <= n; ++t) s += c.coeffs[t] * Rational(P[t][i]);
        return s;
    };
    for (unsigned i = d; i <= n; ++i)
        if (f(i) > 0) return false;
    return f(0) < scale_of(n, K) * c.coeffs[0];
}

LpMaximum lp_maximum(unsigned n, unsigned d) {
    require_lp(n, d);
    auto P = krawtchouk_table(n);
    LinearProgram lp;
    lp.num_vars = n + 1 - d;
    lp.objective.assign(lp.num_vars, Rational(1));
    lp.constraints = pure_rows(n, d, P);
    LpSolution sol = solve_lp(lp);
    LpMaximum out;
    if (sol.status == LpStatus::unbounded) throw InvariantError("pure LP is unbounded");
    if (sol.status == LpStatus::infeasible) return out;
    out.max_2nK = sol.value + 1;
    out.witness = witness_from(n, d, sol.x);
    return out;
}

BoundVerdict lp_bound(unsigned n, unsigned d) {
    LpMaximum m = lp_maximum(n, d);
    if (!m.max_2nK) return inapplicable(BoundName::lp, n, d, "no pure enumerator exists for any K");
    BoundVerdict v;
    v.name = BoundName::lp;
    v.n = n;
    v.d = d;
    set_value(v, *m.max_2nK);
    v.details.emplace_back("scope", "nondegenerate codes");
    return v;
}

Integer mixed_ball(unsigned l, unsigned n_total, unsigned e) {
    if (l > n_total) throw ParameterError("need l <= n_total");
    Integer v = 0;
    for (unsigned i = 0; i <= e; ++i)
        for (unsigned j = 0; j <= i; ++j) v += binomial(l, j) * ipow(3, i - j) * binomial(n_total - l, i - j);
    return v;
}

BoundVerdict mixed_hamming_check(unsigned l, unsigned n_total, unsigned dim, unsigned d) {
    if (l > n_total) throw ParameterError("need l <= n_total");
    if (dim > 2 * n_total - l) throw ParameterError("need dim <= 2 n_total - l");
    if (d < 1) throw ParameterError("need d >= 1");
    const unsigned e = (d - 1) / 2;
    Integer ball = mixed_ball(l, n_total, e);
    Integer rhs = ipow(2, 2 * n_total - l - dim);
    BoundVerdict v;
    v.name = BoundName::mixed_hamming;
    v.n = n_total;
    v.d = d;
    v.passes = ball <= rhs;
    v.details.emplace_back("l", std::to_string(l));
    v.details.emplace_back("dim", std::to_string(dim));
    v.details.emplace_back("e", std::to_string(e));
    v.details.emplace_back("ball", to_string(ball));
    v.details.emplace_back("rhs", to_string(rhs));
    if (d % 2 == 0) v.details.emplace_back("even_d", "packing radius floor((d-1)/2) leaves d-1 unused");
    return v;
}

BoundVerdict prop2_check(unsigned n, unsigned k, unsigned k0, unsigned k1, unsigned d) {
    if (2 * k0 + k1 > n || k != n - 2 * k0 - k1)
        throw ParameterError("need k = n - 2 k0 - k1 with all terms nonnegative");
    BoundVerdict v = mixed_hamming_check(k1, n - k0, 2 * k, d);
    v.name = BoundName::prop2;
    v.n = n;
    Integer ball(v.details[3].second);
    Integer stated_rhs = ipow(2, 2 * k0 + 3 * k1);
    v.details.emplace_back("rhs_stated", to_string(stated_rhs));
    v.details.emplace_back("passes_stated", ball <= stated_rhs ? "true" : "false");
    if (k1 > 0) v.details.emplace_back("rhs_differs", "stated form larger by 4^k1 = " + to_string(ipow(4, k1)));
    return v;
}

}  // namespace qbounds

#include <doctest.h>

#include "oracles.hpp"
#include "qbounds/errors.hpp"
#include "qbounds/krawtchouk.hpp"

#include <cmath>
#include <random>

using namespace qbounds;

TEST_CASE("evaluation matches the three-term recurrence") {
    for (unsigned q : {2u, 4u})
        for (unsigned n = 0; n <= 9; ++n)
            for (unsigned t = 0; t <= n; ++t) {
                for (int i = 0; i <= static_cast<int>(n); ++i)
                    CHECK(krawtchouk_eval(t, i, n, q) == oracle::krawtchouk(t, i, n, q));
                const Rational x = make_rational(7, 3);
                CHECK(krawtchouk_eval(t, x, n, q) == oracle::krawtchouk(t, x, n, q));
                CHECK(krawtchouk_polynomial(t, n, q)(x) == oracle::krawtchouk(t, x, n, q));
            }
}

TEST_CASE("table and known values") {
    auto P = krawtchouk_table(5);
    CHECK(P[1][0] == 15);
    CHECK(P[1][1] == 11);
    CHECK(P[5][5] == -1);
    CHECK(P[0][3] == 1);
}

TEST_CASE("expansion round trip") {
    std::mt19937_64 rng(3);
    for (int c = 0; c < 50; ++c) {
        unsigned n = 1 + rng() % 8;
        std::vector<Rational> coeffs(rng() % (n + 1) + 1);
        for (auto& a : coeffs) a = make_rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
        ExactPolynomial f(coeffs, n);
        auto e = krawtchouk_expand(f);
        CHECK(krawtchouk_synthesize(e) == f);
        // f(i) = sum_t f_t P_t(i).
        for (unsigned i = 0; i <= n; ++i) {
            mpq_class s = 0;
            for (unsigned t = 0; t <= n; ++t) s += e.coeffs[t] * oracle::krawtchouk(t, i, n, 4);
            CHECK(s == f(i));
        }
    }
}

TEST_CASE("polynomials of degree above n are rejected") {
    CHECK_THROWS(ExactPolynomial({1, 1, 1}, 1));
}

TEST_CASE("smallest root of P_1 is exact") {
    // P_1(x) = (q-1) n - q x.
    auto r = krawtchouk_smallest_root(1, 6, 4, make_rational(1, 1000));
    CHECK(r.exact());
    CHECK(r.lo == make_rational(9, 2));
}

TEST_CASE("smallest root of P_2 matches the quadratic formula") {
    for (unsigned q : {2u, 4u})
        for (unsigned n = 2; n <= 12; ++n) {
            // Power coefficients of P_2 from the recurrence at three points.
            double p0 = oracle::krawtchouk(2, 0, n, q).get_d();
            double p1 = oracle::krawtchouk(2, 1, n, q).get_d();
            double p2 = oracle::krawtchouk(2, 2, n, q).get_d();
            double a = (p2 - 2 * p1 + p0) / 2, b = p1 - p0 - a, c = p0;
            const double disc = std::sqrt(b * b - 4 * a * c);
            const double root = std::min((-b - disc) / (2 * a), (-b + disc) / (2 * a));
            auto r = krawtchouk_smallest_root(2, n, q, make_rational(1, 1000000));
            CHECK(r.lo.get_d() <= root + 1e-9);
            CHECK(r.hi.get_d() >= root - 1e-9);
            CHECK((r.hi - r.lo) <= make_rational(1, 1000000));
            CHECK(compare_with_smallest_root(r.lo, 2, n, q) != std::strong_ordering::greater);
            CHECK(compare_with_smallest_root(r.hi + make_rational(1, 100000), 2, n, q) ==
                  std::strong_ordering::greater);
        }
}

TEST_CASE("integer roots compare as equal") {
    // P_1(x, 4) over GF(4) vanishes at x = 3.
    CHECK(compare_with_smallest_root(3, 1, 4, 4) == std::strong_ordering::equal);
    CHECK(compare_with_smallest_root(make_rational(5, 2), 1, 4, 4) == std::strong_ordering::less);
}

TEST_CASE("transform of a code distribution and involution") {
    // The [[5,1,3]] enumerators.
    std::vector<Integer> B{1, 0, 0, 30, 15, 18};
    auto A = macwilliams_transform(std::span<const Integer>(B), 5, 4, 64);
    std::vector<Rational> expect{1, 0, 0, 0, 15, 0};
    CHECK(A == expect);
    std::mt19937_64 rng(5);
    for (int c = 0; c < 100; ++c) {
        unsigned n = 1 + rng() % 10;
        std::vector<Rational> dist(n + 1);
        for (auto& x : dist) x = make_rational(static_cast<long>(rng() % 201) - 100, 1 + rng() % 13);
        auto once = macwilliams_transform(std::span<const Rational>(dist), n, 4, 1);
        auto back = macwilliams_transform(std::span<const Rational>(once), n, 4, pow2(2 * n));
        CHECK(back == dist);
    }
}

#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include "qbounds/bounds.hpp"
#include "qbounds/errors.hpp"

using namespace qbounds;

TEST_CASE("bound names round trip") {
    for (auto b : {BoundName::singleton, BoundName::hamming, BoundName::levenshtein, BoundName::lp,
                   BoundName::mixed_hamming, BoundName::prop2, BoundName::custom_poly})
        CHECK(parse_bound_name(to_string(b)) == b);
    CHECK_THROWS_AS(parse_bound_name("plotkin"), ParameterError);
}

TEST_CASE("sign conditions report every violation") {
    // f(x) = x on n = 3, d = 2: f(0) = 0, f(2), f(3) > 0 and f_1 = -1/4.
    ExactPolynomial f({0, 1}, 3);
    auto rep = check_conditions(f, 2);
    CHECK_FALSE(rep.accepted());
    unsigned values = 0, coeffs = 0;
    for (const auto& v : rep.violations) (v.kind == ConditionRecord::Kind::value ? values : coeffs)++;
    CHECK(values == 3);
    CHECK(coeffs == 1);
    auto ok = check_conditions(singleton_polynomial(5, 3), 3);
    REQUIRE(ok.accepted());
    CHECK(polynomial_bound(*ok.polynomial).value_on_2nK == Rational(64));
}

TEST_CASE("singleton closed form") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            auto v = singleton_bound(n, d);
            CHECK(*v.value_on_2nK == Rational(ipow(4, n - d + 1)));
            CHECK(*v.k_max == static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d) + 2);
        }
    CHECK_THROWS_AS(singleton_bound(3, 4), ParameterError);
    CHECK_THROWS_AS(singleton_bound(3, 0), ParameterError);
}

TEST_CASE("hamming value is 4^n over the ball") {
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned d = 1; d <= n; ++d) {
            const unsigned e = (d - 1) / 2;
            const long ball = oracle::mixed_ball_count(0, n, e);
            CHECK(hamming_ball(n, e) == ball);
            CHECK(*hamming_bound(n, d).value_on_2nK == Rational(ipow(4, n)) / Rational(ball));
        }
    auto v = hamming_bound(5, 3);
    CHECK(v.admits(2) == true);
    CHECK(v.admits(4) == false);
}

TEST_CASE("levenshtein") {
    CHECK_FALSE(levenshtein_bound(5, 1).applicable);
    CHECK_FALSE(levenshtein_bound(2, 2).applicable);
    auto v = levenshtein_bound(5, 3);
    CHECK(*v.value_on_2nK == 76);
    // Exact breakpoint: both neighbouring branches are reported and agree
    // with the Singleton value.
    auto b = levenshtein_bound(5, 4);
    CHECK(*b.value_on_2nK == 16);
    // Never below the pure LP optimum.
    for (unsigned n = 3; n <= 8; ++n)
        for (unsigned d = 2; d <= n; ++d) {
            auto lev = levenshtein_bound(n, d);
            auto m = lp_maximum(n, d);
            if (lev.value_on_2nK && m.max_2nK) CHECK(*m.max_2nK <= *lev.value_on_2nK);
        }
}

TEST_CASE("LP feasibility, witnesses and certificates") {
    auto yes = lp_feasible(5, 2, 3);
    REQUIRE(yes.feasible);
    CHECK(lp_witness_valid(5, 2, 3, yes.witness));
    CHECK(lp_witness_valid(5, 2, 3, {1, 0, 0, 30, 15, 18}));
    CHECK_FALSE(lp_witness_valid(5, 2, 3, {1, 0, 0, 30, 15, 19}));
    auto no = lp_feasible(5, 4, 3);
    REQUIRE_FALSE(no.feasible);
    REQUIRE(no.certificate);
    CHECK(lp_certificate_valid(5, 4, 3, *no.certificate));
    CHECK_FALSE(lp_certificate_valid(5, 2, 3, *no.certificate));
    auto m = lp_maximum(5, 3);
    CHECK(*m.max_2nK == 64);
    CHECK(lp_bound(5, 3).k_max == 1);
    CHECK_FALSE(lp_feasible(5, make_rational(129, 64), 3).feasible);
    CHECK_THROWS_AS(lp_feasible(17, 1, 3), CapacityError);
    CHECK_THROWS_AS(lp_feasible(5, 0, 3), ParameterError);
}

TEST_CASE("fixture enumerators are LP witnesses for nondegenerate fixtures") {
    for (const char* name : {"five_qubit.code", "steane.code", "four_two_two.code"}) {
        auto C = load_fixture(name);
        auto p = quantum_distance(C);
        auto e = enumerators(C);
        std::vector<Rational> B(e.B.begin(), e.B.end());
        CAPTURE(name);
        CHECK(lp_witness_valid(p.n, Rational(p.K), p.d, B));
        CHECK(lp_feasible(p.n, Rational(p.K), p.d).feasible);
    }
}

TEST_CASE("mixed ball by enumeration") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned l = 0; l <= std::min(n, 3u); ++l)
            for (unsigned e = 0; e <= n; ++e) CHECK(mixed_ball(l, n, e) == oracle::mixed_ball_count(l, n, e));
    CHECK_THROWS_AS(mixed_ball(3, 2, 1), ParameterError);
}

TEST_CASE("mixed sphere packing and its quantum form") {
    // The [[5,1,3]] reduction target: l = 0, length 3, dimension 2, distance 3.
    auto v = mixed_hamming_check(0, 3, 2, 3);
    CHECK(*v.passes);
    auto too_big = mixed_hamming_check(0, 3, 4, 3);
    CHECK_FALSE(*too_big.passes);
    auto p = prop2_check(5, 1, 2, 0, 3);
    CHECK(*p.passes);
    CHECK_THROWS_AS(prop2_check(5, 1, 1, 0, 3), ParameterError);
}

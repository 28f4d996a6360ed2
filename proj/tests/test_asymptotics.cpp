#include <doctest.h>

#include "qbounds/asymptotics.hpp"
#include "qbounds/errors.hpp"

#include <cmath>
#include <sstream>

using namespace qbounds;

namespace {

void check_shape(const Curve& c) {
    REQUIRE(c.points.size() >= 2);
    CHECK(c.points.front().delta == doctest::Approx(0));
    for (std::size_t i = 1; i < c.points.size(); ++i) {
        CHECK(c.points[i].delta >= c.points[i - 1].delta);
        CHECK(c.points[i].rate <= c.points[i - 1].rate + 1e-9);
    }
    CHECK(c.points.back().delta == c.terminal.delta);
}

}  // namespace

TEST_CASE("entropy") {
    CHECK(entropy_q(0, 4) == 0);
    CHECK(entropy_q(0.75, 4) == doctest::Approx(1));
    CHECK(entropy_q(0.5, 2) == doctest::Approx(1));
    CHECK(entropy_q(0.1, 2) == doctest::Approx(-0.1 * std::log2(0.1) - 0.9 * std::log2(0.9)));
    CHECK_THROWS_AS(entropy_q(1.5, 4), DomainError);
    CHECK_THROWS_AS(entropy_q(-0.1, 4), DomainError);
}

TEST_CASE("gamma endpoints and involution") {
    CHECK(gamma_q(0, 4) == doctest::Approx(0.75));
    CHECK(gamma_q(0.75, 4) == doctest::Approx(0).epsilon(1e-12));
    CHECK(gamma_q(0.5, 2) == doctest::Approx(0));
    for (double x = 0; x <= 0.75; x += 0.05) CHECK(gamma_q(gamma_q(x, 4), 4) == doctest::Approx(x).epsilon(1e-9));
    CHECK_THROWS_AS(gamma_q(2, 4), DomainError);
}

TEST_CASE("monotone solver") {
    double r = solve_monotone([](double x) { return x * x; }, 2, 0, 2, 1e-12);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK_THROWS_AS(solve_monotone([](double x) { return x; }, 5, 0, 1, 1e-9), SolverError);
}

TEST_CASE("curve ids") {
    CHECK(parse_curve_id("B") == CurveId::B_nondeg_general);
    CHECK(parse_curve_id("fig2") == CurveId::fig2_family);
    CHECK(parse_curve_id(to_string(CurveId::E_gf4_complementary)) == CurveId::E_gf4_complementary);
    CHECK_THROWS_AS(parse_curve_id("Z"), ParameterError);
}

TEST_CASE("terminal points") {
    CurveOptions o;
    auto B = make_curve(CurveId::B_nondeg_general, o);
    auto E = make_curve(CurveId::E_gf4_complementary, o);
    auto D = make_curve(CurveId::D_binary_complementary, o);
    auto H = make_curve(CurveId::hamming_degenerate, o);
    CHECK(std::abs(B.terminal.delta - 0.316) <= 1e-3);
    CHECK(std::abs(E.terminal.delta - 0.375) <= 1e-3);
    CHECK(D.terminal.delta == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(H.terminal.delta == doctest::Approx(0.75).epsilon(1e-6));
    for (const auto* c : {&B, &E, &D, &H}) check_shape(*c);
}

TEST_CASE("curve B is the parametric entropy curve") {
    auto B = curve_nondeg_general(50);
    for (const auto& p : B.points) {
        // Recover x from delta through the involution and compare.
        double x = gamma_q(p.delta, 4);
        CHECK(p.rate == doctest::Approx(std::max(0.0, 2 * entropy_q(x, 4) - 1)).epsilon(1e-6));
    }
}

TEST_CASE("fig2 family") {
    CurveOptions zero;
    zero.kappa1 = 0;
    auto f0 = make_curve(CurveId::fig2_family, zero);
    auto E = make_curve(CurveId::E_gf4_complementary, zero);
    REQUIRE(f0.points.size() == E.points.size());
    for (std::size_t i = 0; i < E.points.size(); ++i) {
        CHECK(f0.points[i].delta == E.points[i].delta);
        CHECK(f0.points[i].rate == E.points[i].rate);
    }
    CurveOptions k;
    k.kappa1 = 0.2;
    auto f = make_curve(CurveId::fig2_family, k);
    CHECK(f.terminal.rate == doctest::Approx(0.1));
    check_shape(f);
}

TEST_CASE("degenerate hamming curve and the halved radius") {
    CHECK(hamming_degenerate_rate(0) == doctest::Approx(1));
    double printed = hamming_degenerate_rate(0.2);
    double halved = hamming_degenerate_rate(0.2, true);
    CHECK(halved > printed);
    // rate = (1 - h)/(1 + h) with h = H_4(delta/(1+rate)).
    double h = entropy_q(0.2 / (1 + printed), 4);
    CHECK(printed == doctest::Approx((1 - h) / (1 + h)).epsilon(1e-8));
}

TEST_CASE("classical bound from CSV") {
    std::istringstream in("delta,rate\n0,1\n0.25,0.5\n0.5,0\n");
    auto c = ClassicalBound::from_csv(in, "table");
    CHECK_FALSE(c.stand_in());
    CHECK(c(0.125) == doctest::Approx(0.75));
    CHECK(c(0.6) == 0);
    CurveOptions o;
    o.classical = c;
    auto C = make_curve(CurveId::C_external_reference, o);
    check_shape(C);
    CHECK_THROWS_AS(make_curve(CurveId::C_external_reference, CurveOptions{}), ParameterError);

    std::istringstream bad_header("x,y\n0,1\n");
    CHECK_THROWS_AS(ClassicalBound::from_csv(bad_header, "bad"), ParseError);
    std::istringstream unordered("delta,rate\n0.5,0\n0.1,1\n");
    CHECK_THROWS_AS(ClassicalBound::from_csv(unordered, "bad"), ParseError);
    std::istringstream junk("delta,rate\n0,abc\n");
    try {
        ClassicalBound::from_csv(junk, "bad");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("first LP stand-in") {
    auto b = ClassicalBound::first_lp(4);
    CHECK(b.stand_in());
    CHECK(b(0) == doctest::Approx(1));
    CHECK(b(0.75) == 0);
    CHECK(b(0.9) == 0);
}

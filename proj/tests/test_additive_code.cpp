#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include "qbounds/errors.hpp"

#include <json.hpp>

#include <random>

using namespace qbounds;

namespace {

std::vector<long> as_ll(const std::vector<Integer>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

TEST_CASE("symbol encoding") {
    using namespace symplectic;
    Word v = 0;
    v = with_symbol(v, 0, Gf4::one);
    v = with_symbol(v, 2, Gf4::omega);
    v = with_symbol(v, 3, Gf4::omega2);
    CHECK(symbol(v, 0) == Gf4::one);
    CHECK(symbol(v, 1) == Gf4::zero);
    CHECK(weight(v) == 3);
    CHECK(pauli_string(v, 4) == "XIZY");
    CHECK(gf4_mul(Gf4::omega, Gf4::omega) == Gf4::omega2);
    CHECK(gf4_mul(Gf4::omega, Gf4::omega2) == Gf4::one);
}

TEST_CASE("parsing Pauli and GF(4) rows") {
    auto a = parse_code("XZZXI\nIXZZX # comment\n\nXIXZZ\nZXIXZ\n");
    CHECK(a.n() == 5);
    CHECK(a.rank() == 4);
    auto b = parse_code(format_code(a));
    CHECK(a.same_span(b));
    CHECK(parse_code("w w").n() == 2);
    CHECK_THROWS_AS(parse_code("XZQ"), ParseError);
    CHECK_THROWS_AS(parse_code("XX\nXXX"), ParseError);
    CHECK_THROWS_AS(parse_code("XX\nXX"), ParseError);
    CHECK_THROWS_AS(parse_code("# nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_code("X1"), ParseError);
}

TEST_CASE("invalid fixtures") {
    CHECK_THROWS_AS(load_fixture("invalid/bad_symbol.code"), ParseError);
    CHECK_THROWS_AS(load_fixture("invalid/ragged.code"), ParseError);
    auto ac = load_fixture("invalid/anticommuting.code");
    CHECK_FALSE(is_self_orthogonal(ac));
    CHECK_THROWS_AS(quantum_distance(ac), StructureError);
}

TEST_CASE("length cap") {
    CHECK_THROWS_AS(AdditiveCode(33, {}), ParameterError);
    CHECK_THROWS_AS(AdditiveCode(2, {symplectic::make(4, 0)}), ParameterError);
}

TEST_CASE("fixtures agree with the brute-force manifest") {
    auto manifest = nlohmann::json::parse(read_text(fixture_path("manifest.json")));
    REQUIRE(manifest["fixtures"].size() >= 6);
    for (const auto& entry : manifest["fixtures"]) {
        const std::string file = entry["file"];
        CAPTURE(file);
        auto C = load_fixture(file);
        auto p = quantum_distance(C);
        auto e = enumerators(C);
        CHECK(p.n == entry["n"].get<unsigned>());
        CHECK(p.k == entry["k"].get<unsigned>());
        CHECK(p.d == entry["d"].get<unsigned>());
        CHECK(p.degenerate == entry["degenerate"].get<bool>());
        CHECK(as_ll(e.A) == entry["A"].get<std::vector<long>>());
        CHECK(as_ll(e.B) == entry["B"].get<std::vector<long>>());
    }
}

TEST_CASE("random codes against the in-test brute force") {
    std::mt19937_64 rng(19);
    for (int c = 0; c < 60; ++c) {
        unsigned n = 1 + rng() % 6;
        unsigned rank = rng() % (n + 1);
        auto C = random_self_orthogonal_code(n, rank, rng);
        CHECK(is_self_orthogonal(C));
        CHECK(C.rank() == rank);
        if (rank == 0) continue;
        auto bf = oracle::brute_force(C.generators(), n);
        auto p = quantum_distance(C);
        auto e = enumerators(C);
        CAPTURE(format_code(C));
        CHECK(p.k == bf.k);
        CHECK(p.d == bf.d);
        CHECK(p.degenerate == bf.degenerate);
        CHECK(as_ll(e.A) == bf.A);
        CHECK(as_ll(e.B) == bf.B);
        CHECK(as_ll(weight_distribution(C)) == bf.A);
        auto dual = symplectic_dual(C);
        CHECK(dual.rank() == 2 * n - rank);
        for (Word g : C.generators()) CHECK(dual.contains(g));
        CHECK(logical_basis(C).size() == 2 * bf.k);
    }
}

TEST_CASE("zero-dimension convention") {
    auto p = quantum_distance(load_fixture("bell_pair.code"));
    CHECK(p.k == 0);
    CHECK(p.d == 2);
    CHECK(p.zero_dimension_convention);
}

TEST_CASE("degenerate Shor code") {
    auto p = quantum_distance(load_fixture("shor.code"));
    CHECK(p.n == 9);
    CHECK(p.d == 3);
    CHECK(p.degenerate);
}

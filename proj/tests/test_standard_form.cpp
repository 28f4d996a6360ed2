#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

#include "qbounds/errors.hpp"
#include "qbounds/gf2.hpp"
#include "qbounds/standard_form.hpp"

#include <random>

using namespace qbounds;

namespace {

AdditiveCode random_additive(unsigned n, unsigned rank, std::mt19937_64& rng) {
    gf2::EchelonBasis basis;
    std::vector<Word> gens;
    while (gens.size() < rank) {
        Word v = rng() & symplectic::full_mask(n);
        if (basis.insert(v)) gens.push_back(v);
    }
    return AdditiveCode(n, gens);
}

std::vector<AdditiveCode> sample_codes(bool self_orthogonal, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<AdditiveCode> out;
    while (static_cast<int>(out.size()) < count) {
        unsigned n = 1 + rng() % 7;
        if (self_orthogonal) out.push_back(random_self_orthogonal_code(n, rng() % (n + 1), rng));
        else out.push_back(random_additive(n, rng() % (2 * n + 1), rng));
    }
    return out;
}

}  // namespace

TEST_CASE("coordinate permutations invert") {
    std::vector<unsigned> perm{2, 0, 3, 1};
    Word v = symplectic::make(0b1011, 0b0110);
    CHECK(unpermute_coordinates(permute_coordinates(v, perm), perm) == v);
    CHECK(symplectic::symbol(permute_coordinates(v, perm), 0) == symplectic::symbol(v, 2));
}

TEST_CASE("GF(4) standard form shape and span") {
    for (const auto& C : sample_codes(false, 200, 23)) {
        CAPTURE(format_code(C));
        auto sf = gf4_standard_form(C);
        CHECK(2 * sf.k0 + sf.k1 == C.rank());
        CHECK(sf.rows.size() == C.rank());
        CHECK(sf.reassemble().same_span(C));
        const Gf4 w = Gf4::omega;
        for (unsigned r = 0; r < sf.rows.size(); ++r)
            for (unsigned c = 0; c < sf.k0 + sf.k1; ++c) {
                Gf4 x = sf.normalized(r, c);
                if (c < sf.k0) {
                    Gf4 expect = Gf4::zero;
                    if (r == c) expect = Gf4::one;
                    if (r == sf.k0 + c) expect = w;
                    CHECK(x == expect);
                } else if (r < 2 * sf.k0) {
                    CHECK((x == Gf4::zero || x == w));
                } else {
                    CHECK(x == (r - 2 * sf.k0 == c - sf.k0 ? Gf4::one : Gf4::zero));
                }
            }
        // k1 columns carry only 0, their pivot symbol or w times it.
        for (unsigned j = 0; j < sf.k1; ++j)
            for (Word row : sf.rows) {
                Gf4 s = symplectic::symbol(row, sf.k0 + j);
                const Gf4 line = sf.k1_lines[j];
                CHECK((s == Gf4::zero || s == line || s == gf4_mul(w, line)));
            }
        CHECK(sf.A1().size() == sf.k0);
        CHECK(sf.A3().size() == sf.k1);
    }
}

TEST_CASE("GF(4)-linear codes have no single-symbol pivots") {
    auto sf = gf4_standard_form(load_fixture("five_qubit.code"));
    CHECK(sf.k0 == 2);
    CHECK(sf.k1 == 0);
    auto omega = gf4_standard_form(load_fixture("omega_pair.code"));
    CHECK(omega.k0 == 0);
    CHECK(omega.k1 == 1);
}

TEST_CASE("binary standard form") {
    for (const auto& C : sample_codes(true, 150, 29)) {
        CAPTURE(format_code(C));
        auto bf = binary_standard_form(C);
        CHECK(bf.s + bf.r == C.rank());
        CHECK(bf.n == bf.s + bf.k + bf.r);
        CHECK(bf.reassemble().same_span(C));
        auto dual_rows = bf.dual_rows();
        CHECK(dual_rows.size() == C.rank() + 2 * bf.k);
        CHECK(gf2::rank(dual_rows) == dual_rows.size());
        for (Word a : dual_rows)
            for (Word b : bf.rows) CHECK(symplectic::product(a, b) == 0);
    }
    CHECK_THROWS_AS(binary_standard_form(load_fixture("invalid/anticommuting.code")), StructureError);
}

TEST_CASE("complementary code completes C to its dual") {
    for (const auto& C : sample_codes(true, 150, 31)) {
        CAPTURE(format_code(C));
        auto comp = complementary_code(C);
        const unsigned k = C.n() - C.rank();
        if (k == 0) {
            CHECK_FALSE(comp.has_value());
            continue;
        }
        REQUIRE(comp.has_value());
        CHECK(comp->rows.size() == 2 * k);
        auto dual = symplectic_dual(C);
        gf2::EchelonBasis all;
        for (Word g : C.generators()) all.insert(g);
        for (Word r : comp->code.generators()) {
            CHECK(dual.contains(r));
            CHECK(all.insert(r));
        }
        CHECK(all.rank() == C.n() + k);
        CHECK(comp->punctured().n() == C.n() - comp->k0);
        CHECK(comp->shortened().n() == C.n() - comp->k0 - comp->k1);
        CHECK(comp->shortened().rank() + comp->k1 >= 2 * k);
    }
}

TEST_CASE("S code of the [[4,2,2]] fixture") {
    auto s = binary_s_code(load_fixture("four_two_two.code"));
    REQUIRE(s.has_value());
    CHECK(s->code.length == 6);
    CHECK(s->code.generators.size() == 4);
    CHECK(s->min_distance >= 2);
    CHECK_FALSE(binary_s_code(load_fixture("bell_pair.code")).has_value());
}

TEST_CASE("reduction targets bound the distance") {
    for (const auto& C : sample_codes(true, 80, 37)) {
        const unsigned k = C.n() - C.rank();
        if (k == 0) continue;
        auto p = quantum_distance(C);
        auto targets = realize_reduction_targets(C);
        CHECK_FALSE(targets.empty());
        for (const auto& t : targets) {
            CAPTURE(t.describe());
            CHECK(*t.min_distance >= p.d);
            CHECK(*t.realized_dimension >= t.dimension);
        }
        auto s = binary_s_code(C);
        std::vector<unsigned> bits(s->code.length, 1);
        CHECK(oracle::min_weight_packed(s->code.generators, bits) == s->min_distance);
        CHECK(s->min_distance >= p.d);
    }
}

TEST_CASE("binary minimum distance") {
    BinaryCode rep{5, {0b11111}};
    CHECK(binary_minimum_distance(rep) == 5);
    BinaryCode hamming{7, {0b1000110, 0b0100101, 0b0010011, 0b0001111}};
    CHECK(binary_minimum_distance(hamming) == 3);
    CHECK(binary_minimum_distance(BinaryCode{3, {}}) == 0);
}

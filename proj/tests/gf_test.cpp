#include "zetaforge/gf.hpp"

#include <random>

#include "doctest.h"

using namespace zetaforge;

TEST_CASE("prime field construction picks the smallest generator") {
    Field F5 = Field::make(5, 1);
    CHECK(F5.q() == 5);
    CHECK(F5.generator() == 2);  // 2 has order 4 mod 5
    CHECK(F5.pow(F5.generator(), 4) == F5.one());
}

TEST_CASE("extension modulus is the first irreducible in coefficient order") {
    Field F9 = Field::make(3, 2);
    CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    // x * x = -1 = 2 in F_9
    elem_t x = F9.from_coords({0, 1});
    CHECK(F9.mul(x, x) == F9.embed(2));
}

TEST_CASE("composite characteristic is rejected") {
    CHECK_THROWS_WITH_AS(Field::make(4, 1), doctest::Contains("NotPrime"), Error);
}

TEST_CASE("field too large for the enumeration bound is rejected") {
    CHECK_THROWS_WITH_AS(Field::make(2, 21), doctest::Contains("NoFieldTooLarge"), Error);
    CHECK_THROWS_WITH_AS(Field::make(1031, 2), doctest::Contains("NoFieldTooLarge"), Error);
}

TEST_CASE("inverses and Lagrange") {
    Field F5 = Field::make(5, 1);
    CHECK(F5.inv(2) == 3);
    CHECK_THROWS_WITH_AS(F5.inv(0), doctest::Contains("DivisionByZero"), Error);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 2}, {7, 1}, {3, 2}, {2, 4}, {5, 2}}) {
        Field F = Field::make(p, n);
        CHECK(F.pow(F.generator(), (long long)(F.q() - 1)) == F.one());
        CHECK(F.pow(F.generator(), -1) == F.inv(F.generator()));
    }
}

TEST_CASE("discrete log is the inverse of exponentiation") {
    Field F5 = Field::make(5, 1);
    CHECK(F5.dlog(1) == 0);
    CHECK(F5.dlog(F5.generator()) == 1);
    CHECK(F5.dlog(4) == 2);  // 2^2 = 4
    CHECK_THROWS_WITH_AS(F5.dlog(0), doctest::Contains("ZeroArgument"), Error);
    Field F27 = Field::make(3, 3);
    for (std::uint64_t x = 1; x < F27.q(); ++x)
        CHECK(F27.exp(F27.dlog(elem_t(x))) == elem_t(x));
}

TEST_CASE("field axioms: exhaustive triples for q <= 9, random above") {
    std::mt19937 rng(7);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1},
             {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5},
             {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}}) {
        Field F = Field::make(p, n);
        const std::uint64_t q = F.q();
        auto check_triple = [&](elem_t a, elem_t b, elem_t c) {
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        };
        if (q <= 9) {
            for (std::uint64_t a = 0; a < q; ++a)
                for (std::uint64_t b = 0; b < q; ++b)
                    for (std::uint64_t c = 0; c < q; ++c) check_triple(elem_t(a), elem_t(b), elem_t(c));
        } else {
            std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
            for (int i = 0; i < 200; ++i)
                check_triple(elem_t(dist(rng)), elem_t(dist(rng)), elem_t(dist(rng)));
        }
        for (std::uint64_t a = 1; a < q; ++a) {
            CHECK(F.mul(elem_t(a), F.inv(elem_t(a))) == F.one());
            if (q > 100) break;
        }
    }
}

TEST_CASE("construction is deterministic") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {7, 2}, {2, 6}}) {
        Field a = Field::make(p, n);
        Field b = Field::make(p, n);
        CHECK(a.modulus() == b.modulus());
        CHECK(a.generator() == b.generator());
    }
}

TEST_CASE("supplied modulus is validated") {
    std::vector<std::uint32_t> reducible{0, 0, 1};  // x^2
    CHECK_THROWS_WITH_AS(Field::make(3, 2, &reducible), doctest::Contains("ReducibleModulus"), Error);
    std::vector<std::uint32_t> irreducible{2, 2, 1};  // x^2 + 2x + 2, no root mod 3
    Field F = Field::make(3, 2, &irreducible);
    CHECK(F.modulus() == irreducible);
    CHECK(F.pow(F.generator(), 8) == F.one());
}

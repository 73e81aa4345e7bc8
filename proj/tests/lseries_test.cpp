#include "zetaforge/lseries.hpp"

#include <numeric>

#include "doctest.h"
#include "zetaforge/variety.hpp"
#include "zetaforge/zeta.hpp"

using namespace zetaforge;

TEST_CASE("reduction classification") {
    IntegerCurve c{-1, 0};  // y^2 = x^3 - x, disc = 64
    CHECK(c.discriminant() == 64);
    CHECK(reduce_mod_p(c, 5).good);
    CHECK_FALSE(reduce_mod_p(c, 2).good);
    CHECK_FALSE(reduce_mod_p(c, 3).good);
    CHECK_THROWS_WITH_AS(reduce_mod_p(c, 6), doctest::Contains("NotPrime"), Error);
    IntegerCurve sing{0, 0};
    CHECK_THROWS_WITH_AS(reduce_mod_p(sing, 5), doctest::Contains("SingularCurve"), Error);
}

TEST_CASE("local factors of y^2 = x^3 - x") {
    IntegerCurve c{-1, 0};
    CHECK(local_factor(c, 5).ap == -2);
    CHECK(local_factor(c, 7).ap == 0);   // p = 3 mod 4: supersingular
    CHECK(local_factor(c, 13).ap == 6);
    CHECK_THROWS_WITH_AS(local_factor(c, 3), doctest::Contains("BadPrime"), Error);
}

TEST_CASE("local factor reproduces extension counts through the zeta machinery") {
    IntegerCurve c{-1, 0};
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 19ull}) {
        LocalFactor lf = local_factor(c, p);
        RationalZeta z = RationalZeta::make(
            PolyQ{1, -lf.ap, (long)p}, PolyQ{mpq_class(1), mpq_class(-(long)(p + 1)), mpq_class((long)p)});
        auto counts = counts_from_zeta(z, 2);
        for (unsigned n = 1; n <= 2; ++n) {
            Field F = Field::make(p, n);
            CHECK(counts[n - 1] == count_elliptic(-1, 0, F));
        }
    }
}

TEST_CASE("Dirichlet expansion with the bad-prime policy") {
    IntegerCurve c{-1, 0};
    auto factors = local_factors_up_to(c, 1000);
    auto a = dirichlet_expand(c, factors, 1000);
    CHECK(a[1] == 1);
    CHECK(a[3] == 0);
    CHECK(a[5] == -2);
    CHECK(a[7] == 0);
    CHECK(a[13] == 6);
    CHECK(a[15] == 0);
    CHECK(a[25] == -1);  // a_5^2 - 5
    // multiplicativity over all coprime pairs with product <= 1000
    for (std::uint64_t mm = 2; mm <= 500; ++mm)
        for (std::uint64_t nn = mm + 1; mm * nn <= 1000; ++nn)
            if (std::gcd(mm, nn) == 1) CHECK(a[mm * nn] == a[mm] * a[nn]);
    // Hecke recursion at good prime powers
    CHECK(a[125] == a[5] * a[25] - 5 * a[5]);
    CHECK(a[169] == a[13] * a[13] - 13);
}

TEST_CASE("missing factor is detected") {
    IntegerCurve c{-1, 0};
    auto factors = local_factors_up_to(c, 10);
    CHECK_THROWS_WITH_AS(dirichlet_expand(c, factors, 20), doctest::Contains("MissingPrime"), Error);
}

TEST_CASE("exact Euler partial values") {
    IntegerCurve c{-1, 0};
    auto factors = local_factors_up_to(c, 5);
    std::map<std::uint64_t, LocalFactor> none;
    CHECK(euler_partial_value(none, 2, 100) == 1);
    CHECK(euler_partial_value(factors, 2, 5) == mpq_class(125, 136));
    CHECK_THROWS_WITH_AS(euler_partial_value(factors, 1, 5), doctest::Contains("OutOfRegion"), Error);
}

TEST_CASE("Hasse bound holds for every good reduction in the small grid") {
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b) {
            IntegerCurve c{a, b};
            if (c.discriminant() == 0) continue;
            for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
                if (!reduce_mod_p(c, p).good) continue;
                LocalFactor lf = local_factor(c, p);
                CHECK(mpz_class(lf.ap) * lf.ap <= 4 * mpz_class((unsigned long)p));
            }
        }
}

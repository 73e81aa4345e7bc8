#include "zetaforge/characters.hpp"

#include <random>

#include "doctest.h"

using namespace zetaforge;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<mpz_class>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
    CHECK(euler_phi(48) == 16);
    CHECK(cyclotomic_polynomial(48).size() == 17);
}

TEST_CASE("ring arithmetic in Z[zeta_m]") {
    // zeta_3^3 = 1, 1 + zeta_3 + zeta_3^2 = 0
    auto z = CyclotomicInt::root_power(3, 1);
    CHECK(z * z * z == CyclotomicInt::from_integer(3, 1));
    auto sum = CyclotomicInt::from_integer(3, 1) + z + z * z;
    CHECK(sum.is_zero());
    // conjugation is an involution and fixes integers
    auto w = CyclotomicInt::root_power(12, 5) + CyclotomicInt::from_integer(12, 7);
    CHECK(w.conj().conj() == w);
    CHECK(CyclotomicInt::from_integer(12, -4).conj() == CyclotomicInt::from_integer(12, -4));
    // norm of 1 - zeta_5: product over conjugates is 5
    auto a = CyclotomicInt::from_integer(5, 1) - CyclotomicInt::root_power(5, 1);
    CyclotomicInt prod = CyclotomicInt::from_integer(5, 1);
    for (unsigned k = 1; k < 5; ++k)
        prod = prod * (CyclotomicInt::from_integer(5, 1) - CyclotomicInt::root_power(5, k));
    CHECK(prod.to_integer() == 5);
}

TEST_CASE("character values and multiplicativity") {
    Field F7 = Field::make(7, 1);
    CHECK(F7.generator() == 3);
    MultChar chi(F7, 3, 1);  // cubic character, chi(3) = zeta_3
    CHECK(chi.eval(3) == CyclotomicInt::root_power(3, 1));
    CHECK(chi.eval(0).is_zero());
    CHECK(chi.eval(1) == CyclotomicInt::from_integer(3, 1));

    std::mt19937 rng(11);
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        Field F = Field::make(p, n);
        std::uniform_int_distribution<std::uint64_t> dist(1, F.q() - 1);
        for (std::uint64_t m : prime_factors_u64(F.q() - 1)) {
            MultChar c(F, std::uint32_t(m), 1);
            for (int i = 0; i < 1000; ++i) {
                elem_t a = elem_t(dist(rng)), b = elem_t(dist(rng));
                CHECK(c.eval(F.mul(a, b)) == c.eval(a) * c.eval(b));
            }
        }
    }
}

TEST_CASE("quadratic Jacobi sum over F_5") {
    Field F5 = Field::make(5, 1);
    MultChar eta(F5, 2, 1);
    auto J = jacobi_sum({eta, eta});
    CHECK(J.conductor() == 2);
    CHECK(J.to_integer() == -1);
}

TEST_CASE("cubic Jacobi sum over F_7 has norm 7") {
    Field F7 = Field::make(7, 1);
    MultChar chi(F7, 3, 1);
    auto J = jacobi_sum({chi, chi});
    // J = -1 - 3 zeta_3
    CHECK(J == CyclotomicInt::from_integer(3, -1) -
                   CyclotomicInt::root_power(3, 1) * mpz_class(3));
    CHECK((J * J.conj()).to_integer() == 7);
}

TEST_CASE("trivial characters are rejected") {
    Field F5 = Field::make(5, 1);
    MultChar eps(F5, 4, 0), eta(F5, 2, 1);
    CHECK(eps.is_trivial());
    CHECK_THROWS_WITH_AS(jacobi_sum({eps, eta}), doctest::Contains("TrivialCharacter"), Error);
}

TEST_CASE("J * conj(J) = q for every pair with nontrivial product, q <= 49") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4},
             {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5}, {37, 1},
             {41, 1}, {43, 1}, {47, 1}, {7, 2}}) {
        Field F = Field::make(p, n);
        const std::uint32_t m = std::uint32_t(F.q() - 1);
        for (std::uint32_t i = 1; i < m; ++i) {
            for (std::uint32_t j = 1; j < m; ++j) {
                MultChar c1(F, m, i), c2(F, m, j);
                if ((i + j) % m == 0) {
                    // chi * conj(chi): |J| = 1, J = -chi(-1)
                    auto J = jacobi_sum({c1, c2});
                    CHECK((J * J.conj()).to_integer() == 1);
                    continue;
                }
                auto J = jacobi_sum({c1, c2});
                CHECK((J * J.conj()).to_integer() == mpz_class((unsigned long)F.q()));
            }
        }
    }
}

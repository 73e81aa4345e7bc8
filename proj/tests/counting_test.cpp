#include "zetaforge/variety.hpp"

#include "doctest.h"

using namespace zetaforge;

namespace {

// y^2 = x^3 + ax + b as an affine spec (terms moved to one side)
VarietySpec weierstrass_affine(long long a, long long b, std::uint64_t p) {
    VarietySpec s;
    s.ambient = Ambient::Affine;
    s.coords = 2;
    s.p = p;
    s.equations = {{
        {1, {0, 2}},   // y^2
        {-1, {3, 0}},  // -x^3
        {-a, {1, 0}},  // -ax
        {-b, {0, 0}},  // -b
    }};
    return s;
}

VarietySpec diagonal_projective(std::vector<long long> coeffs, unsigned m, std::uint64_t p) {
    VarietySpec s;
    s.ambient = Ambient::Projective;
    s.coords = unsigned(coeffs.size());
    s.p = p;
    Equation eq;
    for (unsigned i = 0; i < coeffs.size(); ++i) {
        PolynomialTerm t;
        t.coeff = coeffs[i];
        t.exponents.assign(coeffs.size(), 0);
        t.exponents[i] = m;
        eq.push_back(t);
    }
    s.equations = {eq};
    return s;
}

}  // namespace

TEST_CASE("affine counts match hand enumeration") {
    VarietySpec circle;  // x^2 + y^2 = 0 over F_3
    circle.ambient = Ambient::Affine;
    circle.coords = 2;
    circle.p = 3;
    circle.equations = {{{1, {2, 0}}, {1, {0, 2}}}};
    Field F3 = Field::make(3, 1);
    CHECK(count_affine(circle, F3) == 1);

    VarietySpec empty;
    empty.ambient = Ambient::Affine;
    empty.coords = 2;
    empty.p = 2;
    Field F4 = Field::make(2, 2);
    CHECK(count_affine(empty, F4) == 16);

    Field F5 = Field::make(5, 1);
    CHECK(count_affine(weierstrass_affine(-1, 0, 5), F5) == 7);
}

TEST_CASE("projective counts") {
    Field F3 = Field::make(3, 1);
    CHECK(count_projective(diagonal_projective({1, 1, 1}, 2, 3), F3) == 4);

    VarietySpec p2;  // empty system in P^2
    p2.ambient = Ambient::Projective;
    p2.coords = 3;
    p2.p = 7;
    Field F7 = Field::make(7, 1);
    CHECK(count_projective(p2, F7) == 1 + 7 + 49);

    // Fermat cubic over F_7 within the Hasse window around q+1
    mpz_class n = count_projective(diagonal_projective({1, 1, 1}, 3, 7), F7);
    CHECK(n == 9);
    mpz_class dev = n - 8;
    CHECK(dev * dev <= 4 * 7);
}

TEST_CASE("non-homogeneous projective equations are rejected") {
    VarietySpec bad;
    bad.ambient = Ambient::Projective;
    bad.coords = 2;
    bad.p = 5;
    bad.equations = {{{1, {2, 0}}, {1, {0, 1}}}};
    Field F5 = Field::make(5, 1);
    CHECK_THROWS_WITH_AS(count_projective(bad, F5), doctest::Contains("NotHomogeneous"), Error);
}

TEST_CASE("budget is enforced on candidate tuples") {
    VarietySpec s = weierstrass_affine(1, 1, 5);
    Field F25 = Field::make(5, 2);
    CountOptions opts;
    opts.budget = 100;  // 625 candidates needed
    CHECK_THROWS_WITH_AS(count_affine(s, F25, opts), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("count_series over the extension tower") {
    VarietySpec p1;  // P^1 over F_2
    p1.ambient = Ambient::Projective;
    p1.coords = 2;
    p1.p = 2;
    CountSeries s = count_series(p1, 4);
    CHECK(s.counts == std::vector<mpz_class>{3, 5, 9, 17});

    VarietySpec point;  // affine r = 0: the single empty tuple
    point.ambient = Ambient::Affine;
    point.coords = 0;
    point.p = 5;
    CHECK(count_series(point, 3).counts == std::vector<mpz_class>{1, 1, 1});

    // projective closure y^2 z = x^3 + x z^2 + z^3 over F_5
    VarietySpec w;
    w.ambient = Ambient::Projective;
    w.coords = 3;
    w.p = 5;
    w.equations = {{{1, {0, 2, 1}}, {-1, {3, 0, 0}}, {-1, {1, 0, 2}}, {-1, {0, 0, 3}}}};
    CHECK(count_series(w, 2).counts == std::vector<mpz_class>{9, 27});
}

TEST_CASE("elliptic fiber counting agrees with the projective closure") {
    for (long long a = -2; a <= 2; ++a) {
        for (long long b = -2; b <= 2; ++b) {
            for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
                if ((4 * a * a * a + 27 * b * b) % (long long)p == 0) continue;
                Field F = Field::make(p, 1);
                VarietySpec w;
                w.ambient = Ambient::Projective;
                w.coords = 3;
                w.p = p;
                w.equations = {{{1, {0, 2, 1}}, {-1, {3, 0, 0}}, {-a, {1, 0, 2}}, {-b, {0, 0, 3}}}};
                CHECK(count_elliptic(a, b, F) == count_projective(w, F));
            }
        }
    }
    Field F5 = Field::make(5, 1);
    CHECK(count_elliptic(1, 1, F5) == 9);
    CHECK(count_elliptic(-1, 0, F5) == 8);
    CHECK_THROWS_WITH_AS(count_elliptic(0, 0, F5), doctest::Contains("SingularCurve"), Error);
    Field F3 = Field::make(3, 1);
    CHECK_THROWS_WITH_AS(count_elliptic(1, 1, F3), doctest::Contains("BadCharacteristic"), Error);
}

TEST_CASE("partitioned enumeration is independent of thread count") {
    VarietySpec s = weierstrass_affine(1, 1, 7);
    Field F49 = Field::make(7, 2);
    CountOptions one, four;
    four.threads = 4;
    CHECK(count_affine(s, F49, one) == count_affine(s, F49, four));
    CountOptions three;
    three.threads = 3;
    CHECK(count_projective(diagonal_projective({1, 1, 1, 1}, 2, 5), Field::make(5, 1), one) ==
          count_projective(diagonal_projective({1, 1, 1, 1}, 2, 5), Field::make(5, 1), three));
}

TEST_CASE("projective/affine cone gluing") {
    for (std::uint64_t p : {3ull, 5ull, 7ull}) {
        Field F = Field::make(p, 1);
        VarietySpec proj = diagonal_projective({1, 1, 1}, 3, p);
        VarietySpec cone = proj;
        cone.ambient = Ambient::Affine;
        mpz_class np = count_projective(proj, F);
        mpz_class na = count_affine(cone, F);
        CHECK(np == (na - 1) / mpz_class((unsigned long)(p - 1)));
    }
}

TEST_CASE("diagonal character-sum count equals brute force") {
    // x^2 + y^2 = 0 over F_3
    Field F3 = Field::make(3, 1);
    CHECK(count_diagonal_charsum({F3.embed(1), F3.embed(1)}, {2, 2}, F3.zero(), F3) == 1);

    // x^3 + y^3 = 1 over F_7: brute force says 6
    Field F7 = Field::make(7, 1);
    CHECK(count_diagonal_charsum({F7.embed(1), F7.embed(1)}, {3, 3}, F7.one(), F7) == 6);

    // linear equations: hyperplane has q^r points
    Field F9 = Field::make(3, 2);
    CHECK(count_diagonal_charsum({F9.one(), F9.one(), F9.one()}, {1, 1, 1}, F9.embed(2), F9) == 81);

    // exhaustive oracle-equality grid, q <= 13, all exponent pairs m | q-1
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        Field F = Field::make(p, n);
        std::vector<std::uint64_t> divisors;
        for (std::uint64_t m = 1; m <= F.q() - 1; ++m)
            if ((F.q() - 1) % m == 0) divisors.push_back(m);
        for (std::uint64_t m0 : divisors) {
            for (std::uint64_t m1 : divisors) {
                for (elem_t b : {F.zero(), F.one(), F.embed(2)}) {
                    mpz_class brute = 0;
                    for (std::uint64_t x = 0; x < F.q(); ++x)
                        for (std::uint64_t y = 0; y < F.q(); ++y) {
                            elem_t lhs = F.add(F.pow(elem_t(x), (long long)m0),
                                               F.mul(F.embed(2), F.pow(elem_t(y), (long long)m1)));
                            if (lhs == b) ++brute;
                        }
                    CHECK(count_diagonal_charsum({F.one(), F.embed(2)}, {m0, m1}, b, F) == brute);
                }
            }
        }
    }
}

TEST_CASE("closed point degrees by Mobius inversion") {
    CountSeries p1;
    p1.q = 2;
    p1.counts = {3, 5, 9};
    CHECK(closed_point_degrees(p1) == std::vector<mpz_class>{3, 1, 2});

    CountSeries point;
    point.q = 5;
    point.counts = {1, 1, 1};
    CHECK(closed_point_degrees(point) == std::vector<mpz_class>{1, 0, 0});

    CountSeries bad;
    bad.q = 2;
    bad.counts = {3, 4};
    CHECK_THROWS_WITH_AS(closed_point_degrees(bad), doctest::Contains("NonIntegralOrbit"), Error);

    // b_e >= 0 and integral for genuinely counted varieties
    VarietySpec w;
    w.ambient = Ambient::Projective;
    w.coords = 3;
    w.p = 5;
    w.equations = {{{1, {0, 2, 1}}, {-1, {3, 0, 0}}, {-1, {1, 0, 2}}, {-1, {0, 0, 3}}}};
    auto b = closed_point_degrees(count_series(w, 4));
    for (const auto& v : b) CHECK(v >= 0);
}

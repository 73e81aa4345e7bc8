#include "zetaforge/weil.hpp"

#include <complex>
#include <random>

#include "doctest.h"

using namespace zetaforge;

namespace {

RationalZeta zeta_of(std::vector<long> num, std::vector<long> den) {
    PolyQ n, d;
    for (long v : num) n.push_back(mpq_class(v));
    for (long v : den) d.push_back(mpq_class(v));
    return RationalZeta::make(n, d);
}

// independent floating-point oracle: companion-free Durand-Kerner root moduli
bool float_all_moduli(const PolyZ& monic, double target, double tol) {
    using C = std::complex<double>;
    std::size_t m = monic.size() - 1;
    std::vector<double> c(m + 1);
    for (std::size_t i = 0; i <= m; ++i) c[i] = monic[m - i].get_d();  // high-to-low
    auto eval = [&](C z) {
        C acc = 0;
        for (std::size_t i = 0; i <= m; ++i) acc = acc * z + c[i];
        return acc;
    };
    std::vector<C> z(m);
    for (std::size_t i = 0; i < m; ++i) z[i] = std::pow(C(0.4, 0.9), double(i + 1));
    for (int it = 0; it < 1000; ++it) {
        double worst = 0;
        for (std::size_t i = 0; i < m; ++i) {
            C d = 1;
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) d *= z[i] - z[j];
            C delta = eval(z[i]) / d;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-13) break;
    }
    for (auto& r : z)
        if (std::abs(std::abs(r) - target) > tol * target) return false;
    return true;
}

}  // namespace

TEST_CASE("functional equation on standard cases") {
    auto p1 = check_functional_equation(zeta_of({1}, {1, -3, 2}), 1, 2);
    CHECK(p1.holds);
    CHECK(p1.sign == 1);
    CHECK(p1.chi == 2);

    auto ell = check_functional_equation(zeta_of({1, 3, 5}, {1, -6, 5}), 1, 5);
    CHECK(ell.holds);
    CHECK(ell.sign == 1);
    CHECK(ell.chi == 0);

    auto bad = check_functional_equation(zeta_of({1, 1}, {1, -1}), 1, 2);
    CHECK_FALSE(bad.holds);

    // genus 2: chi = -2, numerator degree 4
    auto g2 = check_functional_equation(zeta_of({1, 0, 0, 0, 49}, {1, -8, 7}), 1, 7);
    CHECK(g2.holds);
    CHECK(g2.chi == -2);

    // P^3: chi = 4
    PolyQ den{1};
    long qs[] = {1, 3, 9, 27};
    for (long v : qs) den = poly_mul(den, PolyQ{mpq_class(1), mpq_class(-v)});
    auto p3 = check_functional_equation(RationalZeta::make(PolyQ{1}, den), 3, 3);
    CHECK(p3.holds);
    CHECK(p3.chi == 4);
}

TEST_CASE("integrality check") {
    CHECK(check_integrality(zeta_of({1, 3, 5}, {1, -6, 5})));
    CHECK(check_integrality(zeta_of({1}, {1})));
    RationalZeta half;
    half.num = PolyQ{1, mpq_class(1, 2)};
    half.den = PolyQ{1, -1};
    CHECK_FALSE(check_integrality(half));
}

TEST_CASE("Riemann hypothesis verdicts, weight 1 exact") {
    auto good = check_riemann_hypothesis({1, 3, 5}, 1, 5);
    CHECK(good.ok);
    CHECK(good.method == "exact-sturm");

    auto bad = check_riemann_hypothesis({1, -5, 5}, 1, 5);
    CHECK_FALSE(bad.ok);
    CHECK(bad.method == "exact-sturm");

    // supersingular genus-2 numerator with h-roots at the 4q boundary
    auto boundary = check_riemann_hypothesis({1, 0, 0, 0, 49}, 1, 7);
    CHECK(boundary.ok);

    // sqrt(q) roots themselves: 1 - 9T^2 has inverse roots +-3 = +-sqrt(9)
    auto ss = check_riemann_hypothesis({1, 0, -9}, 1, 9);
    CHECK(ss.ok);

    auto notdual = check_riemann_hypothesis({1, -1, 0, 0, 25}, 1, 5);
    CHECK_FALSE(notdual.ok);
    CHECK(notdual.witness.find("NotSelfDual") != std::string::npos);
}

TEST_CASE("Riemann hypothesis verdicts, other weights") {
    auto w2 = check_riemann_hypothesis({1, -5}, 2, 5);
    CHECK(w2.ok);
    CHECK(w2.method == "exact-sturm");

    auto w0 = check_riemann_hypothesis({1, -1}, 0, 5);
    CHECK(w0.ok);

    auto w2bad = check_riemann_hypothesis({1, -3}, 2, 5);
    CHECK_FALSE(w2bad.ok);

    // weight 3 over q = 2: q^{3/2} irrational -> certified numeric path
    // 1 - 16T^2 + ... use P with inverse roots of modulus 2sqrt(2):
    // (1 - 8T^2)(1 + 8T^2)? simpler: P(T) = 1 + 8T^2 has roots +-i/(2sqrt2)
    auto w3 = check_riemann_hypothesis({1, 0, 8}, 3, 2);
    CHECK(w3.ok);
    CHECK(w3.method == "numeric-certified");
    auto w3bad = check_riemann_hypothesis({1, 0, 4}, 3, 2);
    CHECK_FALSE(w3bad.ok);
}

TEST_CASE("point bounds") {
    CountSeries s;
    s.q = 5;
    s.counts = {9, 27};
    CHECK(check_point_bounds(s, 1, 5));
    CountSeries bad;
    bad.q = 5;
    bad.counts = {20};
    CHECK_FALSE(check_point_bounds(bad, 1, 5));
    CountSeries p1;
    p1.q = 4;
    p1.counts = {5, 17, 65};
    CHECK(check_point_bounds(p1, 0, 4));
}

TEST_CASE("Weil number classification") {
    auto yes = classify_weil_number({5, 3, 1}, 5);  // T^2 + 3T + 5
    CHECK(yes.is_weil);
    auto no = classify_weil_number({5, -5, 1}, 5);  // T^2 - 5T + 5
    CHECK_FALSE(no.is_weil);
    auto lin = classify_weil_number({-3, 1}, 9);  // T - 3
    CHECK(lin.is_weil);
    CHECK_THROWS_WITH_AS(classify_weil_number({5, 3, 2}, 5), doctest::Contains("NotMonic"), Error);
    CHECK_THROWS_WITH_AS(classify_weil_number({0, 3, 1}, 5), doctest::Contains("ZeroRoot"), Error);
}

TEST_CASE("classifier agrees with the floating-point oracle on 200 random polynomials") {
    std::mt19937 rng(123);
    int checked = 0;
    while (checked < 200) {
        unsigned g = 1 + rng() % 3;  // degree 2g <= 6
        long q = std::vector<long>{2, 3, 5, 7, 9, 13}[rng() % 6];
        // random self-dual P -> monic f by reversal
        PolyZ c(2 * g + 1, mpz_class(0));
        c[0] = 1;
        for (unsigned i = 1; i <= g; ++i) c[i] = long(rng() % 13) - 6;
        for (unsigned i = 0; i < g; ++i) {
            mpz_class f = 1;
            for (unsigned t = 0; t < g - i; ++t) f *= q;
            c[2 * g - i] = f * c[i];
        }
        PolyZ f(c.rbegin(), c.rend());  // monic, roots are the inverse roots of P
        if (f[0] == 0) continue;
        auto verdict = classify_weil_number(f, q);
        bool oracle = float_all_moduli(f, std::sqrt(double(q)), 1e-6);
        CHECK(verdict.is_weil == oracle);
        ++checked;
    }
}

TEST_CASE("weight split and full report") {
    auto ell = zeta_of({1, 3, 5}, {1, -6, 5});
    auto split = split_weights(ell, 1, 5);
    REQUIRE(split.has_value());
    CHECK(split->factors[0] == PolyZ{1, -1});
    CHECK(split->factors[1] == PolyZ{1, 3, 5});
    CHECK(split->factors[2] == PolyZ{1, -5});
    auto betti = betti_profile(*split, std::vector<long>{1, 2, 1});
    CHECK(betti.matches);

    auto rep = verify_zeta(ell, 1, 5, std::vector<long>{1, 2, 1});
    CHECK(rep.conjectures_hold());
    CHECK(rep.w2.chi == 0);
    CHECK(rep.w5.matches);

    auto tampered = verify_zeta(zeta_of({1, 6, 5}, {1, -6, 5}), 1, 5);
    CHECK_FALSE(tampered.conjectures_hold());
    CHECK(tampered.w2.holds);  // 1+6T+5T^2 is self-dual, only W4 breaks
    CHECK_FALSE(tampered.w4_all);
}

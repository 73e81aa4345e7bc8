#pragma once

#include <optional>
#include <string>

#include "zetaforge/zeta.hpp"

namespace zetaforge {

struct FunctionalEquation {
    bool holds = false;
    int sign = 0;  // +1 / -1 when holds, 0 otherwise
    long chi = 0;  // deg(den) - deg(num), derived, never demanded as input
    std::string note;
};

// W2: exact polynomial-identity check of Z(V, 1/q^d T) = +-q^{d chi/2} T^chi Z(V,T).
FunctionalEquation check_functional_equation(const RationalZeta& z, unsigned d, const mpz_class& q);

// W3: integer coefficients and constant terms 1.
bool check_integrality(const RationalZeta& z);

struct RhVerdict {
    bool ok = false;
    std::string method;  // "exact-sturm" or "numeric-certified"
    std::string witness;
};

// W4 for a single weight-r factor: every inverse root must have modulus
// q^{r/2}. Exact (Sturm-based) whenever q^{r/2} is rational or r = 1;
// numeric with certified radii otherwise.
RhVerdict check_riemann_hypothesis(const PolyZ& p, unsigned weight, const mpz_class& q);

// (N_n - q^n - 1)^2 <= 4 g^2 q^n for every provided n, exact integers.
bool check_point_bounds(const CountSeries& series, unsigned g, const mpz_class& q);

struct WeilNumberVerdict {
    PolyZ polynomial;
    mpz_class q;
    bool is_weil = false;
    std::string witness;
};

// Monic integer f: all complex roots of modulus exactly sqrt(q)?
WeilNumberVerdict classify_weil_number(const PolyZ& f, const mpz_class& q);

struct BettiReport {
    std::vector<long> degrees;  // B_r = deg P_r
    std::optional<std::vector<long>> expected;
    bool matches = true;  // vacuously true without an expected profile
};

BettiReport betti_profile(const WeilFactorization& f,
                          const std::optional<std::vector<long>>& expected = std::nullopt);

// Recognize the weight structure of a zeta function: denominator splits as
// prod (1 - q^i T)^{b_{2i}}, numerator is the single middle-weight factor.
// Returns nullopt when the factors cannot be separated this way (general
// weight separation needs the Riemann hypothesis and is out of scope).
std::optional<WeilFactorization> split_weights(const RationalZeta& z, unsigned d, const mpz_class& q);

struct WeilReport {
    bool w1_rational = false;
    long num_deg = 0, den_deg = 0;
    FunctionalEquation w2;
    bool w3_integral = false;
    struct FactorVerdict {
        unsigned weight = 0;
        PolyZ poly;
        RhVerdict verdict;
    };
    std::vector<FactorVerdict> w4;
    bool w4_all = false;
    std::string w4_note;
    BettiReport w5;

    bool conjectures_hold() const { return w1_rational && w2.holds && w3_integral && w4_all; }
};

// Full W1-W5 verdict bundle for an already-reconstructed zeta.
WeilReport verify_zeta(const RationalZeta& z, unsigned d, const mpz_class& q,
                       const std::optional<std::vector<long>>& expected_betti = std::nullopt);

}  // namespace zetaforge

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zetaforge/gf.hpp"

namespace zetaforge {

struct PolynomialTerm {
    long long coeff = 0;
    std::vector<std::uint32_t> exponents;  // one entry per coordinate
};

using Equation = std::vector<PolynomialTerm>;

enum class Ambient { Affine, Projective };

// Affine or projective system of integer-coefficient equations over a prime
// field; coefficients are reduced mod p on use and lifted to extensions
// through the prime subfield.
struct VarietySpec {
    Ambient ambient = Ambient::Affine;
    unsigned coords = 0;  // number of coordinates (projective dimension + 1)
    std::vector<Equation> equations;
    std::uint64_t p = 0;  // base field characteristic (prime field, n = 1)
    std::string label;

    void validate() const;  // homogeneity, exponent arity, primality
};

struct CountSeries {
    mpz_class q;
    std::vector<mpz_class> counts;  // N_1..N_k
};

inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

struct CountOptions {
    std::uint64_t budget = kDefaultTupleBudget;
    unsigned threads = 1;
};

// Exact number of solutions over ext; candidate-tuple budget is enforced
// before any enumeration starts. Empty systems are full ambient spaces and
// consume no budget.
mpz_class count_affine(const VarietySpec& spec, const Field& ext, const CountOptions& opts = {});
mpz_class count_projective(const VarietySpec& spec, const Field& ext, const CountOptions& opts = {});

// N_1..N_k over the extension tower F_{p^m}; each extension is constructed
// independently (coefficients embed through the prime subfield).
CountSeries count_series(const VarietySpec& spec, unsigned k, const CountOptions& opts = {});

// |E(F)| for y^2 = x^3 + ax + b, point at infinity included.
std::uint64_t count_elliptic(long long a, long long b, const Field& F);

// N_1..N_k for the smooth Weierstrass model via the O(q) fiber count.
CountSeries elliptic_count_series(long long a, long long b, std::uint64_t p, unsigned k,
                                  std::uint64_t field_bound = kFieldEnumerationBound);

// Affine count of a_0 X_0^{m_0} + ... + a_r X_r^{m_r} = b computed purely by
// character sums: fiber counts expand over characters of order dividing
// gcd(m_i, q-1) and the convolution contracts into Jacobi-sum terms.
mpz_class count_diagonal_charsum(const std::vector<elem_t>& coeffs,
                                 const std::vector<std::uint64_t>& exponents, elem_t b,
                                 const Field& F);

// Mobius inversion of N_n = sum_{e | n} e * b_e; throws NonIntegralOrbit when
// the series is not of point-count type.
std::vector<mpz_class> closed_point_degrees(const CountSeries& series);

}  // namespace zetaforge

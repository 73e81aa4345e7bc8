#pragma once

#include <optional>

#include "zetaforge/poly.hpp"
#include "zetaforge/variety.hpp"

namespace zetaforge {

// Truncated power series over Q; coeffs[i] multiplies T^i, order = size-1.
struct PowerSeriesQ {
    std::vector<mpq_class> coeffs;
    unsigned order() const { return coeffs.empty() ? 0 : unsigned(coeffs.size() - 1); }
};

// Z(V,T) as a reduced ratio with both constant terms 1. Coefficients are
// rationals so that non-integral candidates can be represented and rejected
// by the integrality check instead of crashing upstream.
struct RationalZeta {
    PolyQ num{mpq_class(1)};
    PolyQ den{mpq_class(1)};

    // Normalizes: reduces to lowest terms and scales constant terms to 1.
    static RationalZeta make(PolyQ num, PolyQ den);
    bool is_integral() const { return poly_is_integral(num) && poly_is_integral(den); }
};

struct WeilFactorization {
    unsigned d = 0;   // dimension
    mpz_class q;
    std::vector<PolyZ> factors;  // P_r for r = 0..2d
};

// Z = exp(sum N_n T^n / n) truncated at T^order.
PowerSeriesQ zeta_series_from_counts(const CountSeries& series, unsigned order);

// log of a series with constant term 1, to the same truncation order.
PowerSeriesQ series_log(const PowerSeriesQ& z);

// N_n = (power sums of denominator inverse roots) - (numerator ditto),
// exact Newton identities; integral for any well-formed zeta.
std::vector<mpz_class> counts_from_zeta(const RationalZeta& z, unsigned k);
std::vector<mpq_class> counts_from_zeta_q(const RationalZeta& z, unsigned k);

// Minimal-degree rational function reproducing the entire count series, by
// exact linear algebra on the series coefficients; candidates are searched
// with the smallest denominator degree first, then the smallest numerator
// degree. Throws NoRationalFit when no candidate within the caps fits.
RationalZeta reconstruct_rational(const CountSeries& series, unsigned max_num_deg,
                                  unsigned max_den_deg);

// Degree-2g curve numerator from N_1..N_g: Newton solve for c_1..c_g, then
// c_{2g-i} = q^{g-i} c_i from the functional equation. Supplying more than g
// counts over-determines the system; the extras are cross-checked.
PolyZ curve_numerator_from_counts(unsigned g, const mpz_class& q,
                                  const std::vector<mpz_class>& counts);

// P_r(T) with inverse roots the r-fold products of the inverse roots of P_1,
// via the characteristic polynomial of the r-th compound of the companion
// matrix, all in exact integer arithmetic. deg P_r = C(2g, r).
PolyZ abelian_exterior_factor(const PolyZ& p1, unsigned r);

// Z = prod_{r odd} P_r / prod_{r even} P_r, reduced to lowest terms.
RationalZeta assemble_alternating_product(const WeilFactorization& factors);

// #{(a_0..a_r) : a_i in [1, m-1], sum a_i = 0 mod m} -- the middle Betti
// number of the degree-m diagonal hypersurface in P^r.
mpz_class diagonal_middle_degree(unsigned m, unsigned r);

}  // namespace zetaforge

#pragma once

#include <gmpxx.h>

#include <vector>

namespace zetaforge {

// Dense polynomials, coefficient of T^i at index i, trailing zeros trimmed.
using PolyZ = std::vector<mpz_class>;
using PolyQ = std::vector<mpq_class>;

long poly_degree(const PolyZ& a);
long poly_degree(const PolyQ& a);
void poly_trim(PolyZ& a);
void poly_trim(PolyQ& a);

PolyQ to_q(const PolyZ& a);
// Requires all denominators 1.
PolyZ to_z(const PolyQ& a);
bool poly_is_integral(const PolyQ& a);

PolyZ poly_add(const PolyZ& a, const PolyZ& b);
PolyZ poly_sub(const PolyZ& a, const PolyZ& b);
PolyZ poly_mul(const PolyZ& a, const PolyZ& b);
PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const mpq_class& s);

mpq_class poly_eval(const PolyQ& a, const mpq_class& x);
PolyQ poly_derivative(const PolyQ& a);

// Euclidean division a = q*b + r over Q, deg r < deg b.
void poly_divrem(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem);
// Monic gcd over Q (1 for coprime inputs).
PolyQ poly_gcd(PolyQ a, PolyQ b);
// Exact division over Z; throws std::logic_error on nonzero remainder.
PolyZ poly_divexact(const PolyZ& a, const PolyZ& b);
// True iff b divides a exactly over Q.
bool poly_divides(const PolyQ& b, const PolyQ& a);

// a / gcd(a, a'): same roots, all simple.
PolyQ poly_squarefree_part(const PolyQ& a);

// Power sums s_1..s_k of the inverse roots of P = 1 + c_1 T + ..., via
// Newton's identities on the coefficients (no root extraction). P(0) may be
// any nonzero rational; the recursion only uses ratios against c_0.
std::vector<mpq_class> inverse_root_power_sums(const PolyQ& p, unsigned k);

}  // namespace zetaforge

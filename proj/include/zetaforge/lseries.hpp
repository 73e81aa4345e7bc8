#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zetaforge {

// y^2 = x^3 + ax + b over Q.
struct IntegerCurve {
    long long a = 0;
    long long b = 0;
    mpz_class discriminant() const {
        mpz_class A(a), B(b);
        return -16 * (4 * A * A * A + 27 * B * B);
    }
};

struct Reduction {
    bool good = false;
    std::string reason;  // set when skipped
};

struct LocalFactor {
    std::uint64_t p = 0;
    long long ap = 0;
    // good factor is 1 - ap T + p T^2
};

// good iff p > 3 and p does not divide the discriminant; everything else is
// skipped with a reason (bad-reduction typology is out of scope).
Reduction reduce_mod_p(const IntegerCurve& curve, std::uint64_t p);

// a_p = p + 1 - |E(F_p)| from the exact fiber count; Hasse bound asserted.
LocalFactor local_factor(const IntegerCurve& curve, std::uint64_t p);

// All good local factors with p <= pmax.
std::map<std::uint64_t, LocalFactor> local_factors_up_to(const IntegerCurve& curve,
                                                         std::uint64_t pmax);

// a_1..a_N by the Hecke recursion a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}}
// and multiplicativity; bad/skipped primes contribute factor 1 (their prime
// powers get coefficient 0). Every good prime <= N must appear.
std::vector<long long> dirichlet_expand(const IntegerCurve& curve,
                                        const std::map<std::uint64_t, LocalFactor>& factors,
                                        std::uint64_t N);

// prod_{p <= P good} 1 / (1 - a_p p^{-s} + p^{1-2s}) as an exact rational;
// s is restricted to integers >= 2, the edge of the convergence region.
mpq_class euler_partial_value(const std::map<std::uint64_t, LocalFactor>& factors, long s,
                              std::uint64_t pmax);

}  // namespace zetaforge

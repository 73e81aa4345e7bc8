#include "zetaforge/lseries.hpp"

#include "zetaforge/errors.hpp"
#include "zetaforge/variety.hpp"

namespace zetaforge {

Reduction reduce_mod_p(const IntegerCurve& curve, std::uint64_t p) {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p));
    Reduction r;
    if (p == 2 || p == 3) {
        r.reason = "characteristic " + std::to_string(p) + " excluded by policy";
        return r;
    }
    mpz_class disc = curve.discriminant();
    if (disc == 0) fail(Errc::SingularCurve, "discriminant vanishes over Q");
    if (mpz_divisible_ui_p(disc.get_mpz_t(), (unsigned long)p)) {
        r.reason = "prime divides the discriminant";
        return r;
    }
    r.good = true;
    return r;
}

LocalFactor local_factor(const IntegerCurve& curve, std::uint64_t p) {
    Reduction red = reduce_mod_p(curve, p);
    if (!red.good) fail(Errc::BadPrime, std::to_string(p) + ": " + red.reason);
    Field F = Field::make(p, 1);
    std::uint64_t n = count_elliptic(curve.a, curve.b, F);
    LocalFactor lf;
    lf.p = p;
    lf.ap = (long long)(p + 1) - (long long)n;
    if (mpz_class(lf.ap) * lf.ap > 4 * mpz_class((unsigned long)p))
        throw std::logic_error("Hasse bound violated by exact count");
    return lf;
}

std::map<std::uint64_t, LocalFactor> local_factors_up_to(const IntegerCurve& curve,
                                                         std::uint64_t pmax) {
    std::map<std::uint64_t, LocalFactor> out;
    for (std::uint64_t p = 2; p <= pmax; ++p) {
        if (!is_prime_u64(p)) continue;
        if (reduce_mod_p(curve, p).good) out.emplace(p, local_factor(curve, p));
    }
    return out;
}

std::vector<long long> dirichlet_expand(const IntegerCurve& curve,
                                        const std::map<std::uint64_t, LocalFactor>& factors,
                                        std::uint64_t N) {
    std::vector<long long> a(N + 1, 0);
    if (N >= 1) a[1] = 1;
    // prime powers first, then one multiplicative sieve pass
    std::vector<std::uint64_t> smallest_prime(N + 1, 0);
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (smallest_prime[p]) continue;
        for (std::uint64_t v = p; v <= N; v += p)
            if (!smallest_prime[v]) smallest_prime[v] = p;
    }
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (smallest_prime[p] != p) continue;  // not prime
        bool good = reduce_mod_p(curve, p).good;
        long long ap = 0;
        if (good) {
            auto it = factors.find(p);
            if (it == factors.end())
                fail(Errc::MissingPrime, "good prime " + std::to_string(p) + " has no local factor");
            ap = it->second.ap;
        }
        // a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}} at good p; 0 at skipped p
        long long prev = 1, cur = ap;
        std::uint64_t pk = p;
        while (pk <= N) {
            a[pk] = good ? cur : 0;
            if (pk > N / p) break;
            long long nxt = good ? ap * cur - (long long)p * prev : 0;
            prev = cur;
            cur = nxt;
            pk *= p;
        }
    }
    for (std::uint64_t n = 2; n <= N; ++n) {
        std::uint64_t p = smallest_prime[n], pk = 1, rest = n;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        if (rest != 1) a[n] = a[pk] * a[rest];
    }
    return a;
}

mpq_class euler_partial_value(const std::map<std::uint64_t, LocalFactor>& factors, long s,
                              std::uint64_t pmax) {
    if (s < 2) fail(Errc::OutOfRegion, "exact evaluation needs integer s >= 2");
    mpq_class prod = 1;
    for (const auto& [p, lf] : factors) {
        if (p > pmax) break;
        mpz_class ps = 1;  // p^s
        for (long i = 0; i < s; ++i) ps *= (unsigned long)p;
        // 1 - a_p p^{-s} + p^{1-2s} = (p^{2s} - a_p p^s + p) / p^{2s}
        mpz_class p2s = ps * ps;
        mpq_class denom = mpq_class(p2s - lf.ap * ps + (unsigned long)p) / mpq_class(p2s);
        prod /= denom;
    }
    return prod;
}

}  // namespace zetaforge

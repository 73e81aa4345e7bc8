#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "zetaforge/errors.hpp"

namespace zetaforge {

// Elements of F_{p^n} are packed coefficient vectors w.r.t. the power basis
// of the modulus: index = c_0 + c_1*p + ... + c_{n-1}*p^{n-1}.
using elem_t = std::uint32_t;

// Upper bound on q = p^n; discrete-log tables are built eagerly, so larger
// fields are rejected instead of silently degrading.
inline constexpr std::uint64_t kFieldEnumerationBound = std::uint64_t(1) << 20;

class Field {
  public:
    // Deterministic construction: the modulus (when not supplied) is the first
    // irreducible monic of degree n in coefficient-vector order, the generator
    // the smallest element of multiplicative order q-1 in the same order.
    static Field make(std::uint64_t p, unsigned n,
                      const std::vector<std::uint32_t>* modulus = nullptr,
                      std::uint64_t enumeration_bound = kFieldEnumerationBound);

    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    std::uint64_t q() const { return q_; }
    elem_t generator() const { return generator_; }
    // Monic modulus, length n+1, constant coefficient first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    elem_t zero() const { return 0; }
    elem_t one() const { return 1 % q_; }
    // Integer constants land in the prime subfield.
    elem_t embed(long long c) const;

    std::vector<std::uint32_t> coords(elem_t a) const;
    elem_t from_coords(const std::vector<std::uint32_t>& c) const;

    elem_t add(elem_t a, elem_t b) const;
    elem_t sub(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    elem_t inv(elem_t a) const {
        if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
        std::uint64_t e = log_[a];
        return exp_[e == 0 ? 0 : q_ - 1 - e];
    }
    // Negative exponents mean inverse powers; pow(0, 0) = 1 by convention.
    elem_t pow(elem_t a, long long e) const;

    // dlog(x) = k with generator^k = x; total on nonzero elements.
    std::uint64_t dlog(elem_t a) const {
        if (a == 0) fail(Errc::ZeroArgument, "discrete log of zero");
        return log_[a];
    }
    elem_t exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

    bool same_field(const Field& other) const { return this == &other; }

    // Prime factorization of q-1, ascending, used for order checks.
    const std::vector<std::uint64_t>& unit_group_prime_factors() const { return q1_factors_; }

  private:
    Field() = default;

    elem_t slow_mul(elem_t a, elem_t b) const;
    elem_t slow_pow(elem_t a, std::uint64_t e) const;

    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    elem_t generator_ = 0;
    std::vector<elem_t> exp_;          // exp_[k] = generator^k, k in [0, q-1)
    std::vector<std::uint32_t> log_;   // log_[x] for x != 0
    std::vector<std::uint64_t> q1_factors_;
};

bool is_prime_u64(std::uint64_t v);
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t v);

// True iff the monic polynomial (constant coefficient first, length deg+1)
// is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint64_t p);

}  // namespace zetaforge

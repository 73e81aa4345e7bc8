#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "zetaforge/errors.hpp"

namespace zetaforge {

// Element of Z[zeta_m] represented canonically in Z[x]/Phi_m(x):
// coeffs has length deg Phi_m = phi(m), low degree first.
class CyclotomicInt {
  public:
    CyclotomicInt() : m_(1) {}
    explicit CyclotomicInt(std::uint32_t m);  // zero of conductor m
    static CyclotomicInt from_integer(std::uint32_t m, const mpz_class& v);
    // zeta_m^k, k arbitrary (reduced mod m then mod Phi_m)
    static CyclotomicInt root_power(std::uint32_t m, std::uint64_t k);
    // Reduce a length-m exponent-counter vector (coefficient of zeta_m^j at
    // position j) into the canonical basis.
    static CyclotomicInt from_power_counts(std::uint32_t m, const std::vector<mpz_class>& counts);

    std::uint32_t conductor() const { return m_; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integer() const;      // lies in Z
    mpz_class to_integer() const; // requires is_integer()

    // Embed into Z[zeta_M] for m | M.
    CyclotomicInt lift(std::uint32_t M) const;

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt operator*(const mpz_class& s) const;
    bool operator==(const CyclotomicInt& o) const;

    // Complex conjugation: zeta_m -> zeta_m^{-1}.
    CyclotomicInt conj() const;

  private:
    std::uint32_t m_;
    std::vector<mpz_class> c_;
};

// m-th cyclotomic polynomial, integer coefficients low-to-high.
std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t m);

unsigned long euler_phi(std::uint32_t m);

}  // namespace zetaforge

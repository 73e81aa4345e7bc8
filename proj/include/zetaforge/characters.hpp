#pragma once

#include <cstdint>
#include <vector>

#include "zetaforge/cyclotomic.hpp"
#include "zetaforge/gf.hpp"

namespace zetaforge {

// Multiplicative character of F_q^* with values in Z[zeta_m], m | q-1:
// chi(generator) = zeta_m^index, chi(0) = 0 by convention.
class MultChar {
  public:
    MultChar(const Field& field, std::uint32_t order, std::uint32_t index);

    const Field& field() const { return *field_; }
    std::uint32_t order() const { return m_; }
    std::uint32_t index() const { return index_; }
    bool is_trivial() const { return index_ == 0; }

    CyclotomicInt eval(elem_t x) const;
    // Exponent e with chi(x) = zeta_m^e; requires x != 0.
    std::uint32_t eval_exponent(elem_t x) const;

  private:
    const Field* field_;
    std::uint32_t m_;
    std::uint32_t index_;
};

// J(chi_1,...,chi_k) = sum over x_1+...+x_k = 1 of prod chi_i(x_i), computed
// exactly in Z[zeta_M] with M = lcm of the character orders. All characters
// must be nontrivial and live on the same field; k >= 2.
CyclotomicInt jacobi_sum(const std::vector<MultChar>& chars);

}  // namespace zetaforge

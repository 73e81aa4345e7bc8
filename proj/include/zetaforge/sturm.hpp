#pragma once

#include "zetaforge/poly.hpp"

namespace zetaforge {

// Sturm chain of p (p should be squarefree for root counting).
std::vector<PolyQ> sturm_chain(const PolyQ& p);

// Number of distinct real roots of a squarefree polynomial.
long count_real_roots(const PolyQ& squarefree);

// Number of distinct real roots of a squarefree polynomial in the open
// interval (a, +infinity); a root exactly at a is not counted.
long count_real_roots_above(const PolyQ& squarefree, const mpq_class& a);

}  // namespace zetaforge

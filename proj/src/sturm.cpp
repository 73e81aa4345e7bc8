#include "zetaforge/sturm.hpp"

namespace zetaforge {

std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    PolyQ a = p;
    poly_trim(a);
    if (a.empty()) return chain;
    chain.push_back(a);
    PolyQ b = poly_derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        PolyQ q, r;
        poly_divrem(a, b, q, r);
        for (auto& c : r) c = -c;
        a = std::move(b);
        b = std::move(r);
    }
    return chain;
}

namespace {

int sign_of(const mpq_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

long variations(const std::vector<int>& signs) {
    long var = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

long variations_at(const std::vector<PolyQ>& chain, const mpq_class& x) {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sign_of(poly_eval(p, x)));
    return variations(signs);
}

long variations_at_infinity(const std::vector<PolyQ>& chain, bool positive) {
    std::vector<int> signs;
    for (const auto& p : chain) {
        long d = poly_degree(p);
        if (d < 0) {
            signs.push_back(0);
            continue;
        }
        int s = sign_of(p[d]);
        if (!positive && d % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

}  // namespace

long count_real_roots(const PolyQ& squarefree) {
    if (poly_degree(squarefree) <= 0) return 0;
    auto chain = sturm_chain(squarefree);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

long count_real_roots_above(const PolyQ& squarefree, const mpq_class& a) {
    if (poly_degree(squarefree) <= 0) return 0;
    auto chain = sturm_chain(squarefree);
    return variations_at(chain, a) - variations_at_infinity(chain, true);
}

}  // namespace zetaforge

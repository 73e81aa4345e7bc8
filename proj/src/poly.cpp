#include "zetaforge/poly.hpp"

#include <stdexcept>

namespace zetaforge {

namespace {
template <class P>
long degree_impl(const P& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return long(i);
    return -1;
}
template <class P>
void trim_impl(P& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
template <class P>
P add_impl(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim_impl(r);
    return r;
}
template <class P>
P sub_impl(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim_impl(r);
    return r;
}
template <class P>
P mul_impl(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim_impl(r);
    return r;
}
}  // namespace

long poly_degree(const PolyZ& a) { return degree_impl(a); }
long poly_degree(const PolyQ& a) { return degree_impl(a); }
void poly_trim(PolyZ& a) { trim_impl(a); }
void poly_trim(PolyQ& a) { trim_impl(a); }

PolyQ to_q(const PolyZ& a) {
    PolyQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpq_class(a[i]);
    return r;
}

PolyZ to_z(const PolyQ& a) {
    PolyZ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].get_den() != 1) throw std::logic_error("polynomial is not integral");
        r[i] = a[i].get_num();
    }
    return r;
}

bool poly_is_integral(const PolyQ& a) {
    for (const auto& c : a)
        if (c.get_den() != 1) return false;
    return true;
}

PolyZ poly_add(const PolyZ& a, const PolyZ& b) { return add_impl(a, b); }
PolyZ poly_sub(const PolyZ& a, const PolyZ& b) { return sub_impl(a, b); }
PolyZ poly_mul(const PolyZ& a, const PolyZ& b) { return mul_impl(a, b); }
PolyQ poly_add(const PolyQ& a, const PolyQ& b) { return add_impl(a, b); }
PolyQ poly_sub(const PolyQ& a, const PolyQ& b) { return sub_impl(a, b); }
PolyQ poly_mul(const PolyQ& a, const PolyQ& b) { return mul_impl(a, b); }

PolyQ poly_scale(const PolyQ& a, const mpq_class& s) {
    PolyQ r = a;
    for (auto& c : r) c *= s;
    poly_trim(r);
    return r;
}

mpq_class poly_eval(const PolyQ& a, const mpq_class& x) {
    mpq_class r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

PolyQ poly_derivative(const PolyQ& a) {
    if (a.size() <= 1) return {};
    PolyQ r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * mpq_class((unsigned long)i);
    poly_trim(r);
    return r;
}

void poly_divrem(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem) {
    long db = poly_degree(b);
    if (db < 0) throw std::logic_error("division by zero polynomial");
    rem = a;
    poly_trim(rem);
    long da = poly_degree(rem);
    if (da < db) {
        quot.clear();
        return;
    }
    quot.assign(std::size_t(da - db + 1), mpq_class(0));
    while ((da = poly_degree(rem)) >= db) {
        mpq_class c = rem[da] / b[db];
        quot[da - db] = c;
        for (long i = 0; i <= db; ++i) rem[da - db + i] -= c * b[i];
        poly_trim(rem);
        if (rem.empty()) break;
    }
    poly_trim(quot);
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        PolyQ q, r;
        poly_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    long d = poly_degree(a);
    if (d < 0) return a;
    mpq_class lead = a[d];
    for (auto& c : a) c /= lead;
    return a;
}

PolyZ poly_divexact(const PolyZ& a, const PolyZ& b) {
    PolyQ q, r;
    poly_divrem(to_q(a), to_q(b), q, r);
    if (!r.empty()) throw std::logic_error("polynomial division not exact");
    return to_z(q);
}

bool poly_divides(const PolyQ& b, const PolyQ& a) {
    if (poly_degree(a) < 0) return true;
    if (poly_degree(b) < 0) return false;
    PolyQ q, r;
    poly_divrem(a, b, q, r);
    return r.empty();
}

PolyQ poly_squarefree_part(const PolyQ& a) {
    if (poly_degree(a) <= 0) return a;
    PolyQ g = poly_gcd(a, poly_derivative(a));
    if (poly_degree(g) <= 0) return a;
    PolyQ q, r;
    poly_divrem(a, g, q, r);
    return q;
}

std::vector<mpq_class> inverse_root_power_sums(const PolyQ& p, unsigned k) {
    long deg = poly_degree(p);
    if (deg < 0 || p[0] == 0) throw std::logic_error("power sums need a nonzero constant term");
    std::vector<mpq_class> e(std::size_t(deg) + 1, mpq_class(0));
    for (long i = 0; i <= deg; ++i) e[i] = p[i] / p[0];
    std::vector<mpq_class> s(k + 1, mpq_class(0));
    for (unsigned n = 1; n <= k; ++n) {
        mpq_class acc = (n <= unsigned(deg)) ? mpq_class(e[n] * (long)n) : mpq_class(0);
        for (unsigned i = 1; i < n && i <= unsigned(deg); ++i) acc += e[i] * s[n - i];
        s[n] = -acc;
    }
    s.erase(s.begin());
    return s;
}

}  // namespace zetaforge

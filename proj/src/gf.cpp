#include "zetaforge/gf.hpp"

#include <algorithm>
#include <numeric>

namespace zetaforge {

bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % d == 0) return v == d;
    }
    for (std::uint64_t d = 41; d * d <= v; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // dense, constant first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m (m monic), in place over F_p
void mod_reduce(Poly& a, const Poly& m, std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t c = a.back();
        std::size_t off = a.size() - 1 - dm;
        if (c != 0) {
            for (std::size_t i = 0; i < dm; ++i) {
                std::uint64_t t = a[off + i] + (p - (c * m[i]) % p);
                a[off + i] = std::uint32_t(t % p);
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0 && a.size() > dm) a.pop_back();
    }
    trim(a);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        }
    }
    mod_reduce(r, m, p);
    return r;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    mod_reduce(base, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic, then reduce a mod b
        std::uint64_t inv = 1;
        {
            // Fermat inverse of leading coefficient
            std::uint64_t lc = b.back(), e = p - 2, acc = 1, base = lc;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            inv = acc;
        }
        Poly bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) bm[i] = std::uint32_t(b[i] * inv % p);
        mod_reduce(a, bm, p);
        std::swap(a, b);
        trim(b);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint64_t p) {
    Poly f = poly;
    trim(f);
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Rabin test: x^{p^deg} == x (mod f) and gcd(x^{p^{deg/l}} - x, f) = 1
    // for every prime l | deg.
    Poly x{0, 1};
    Poly t = x;
    mod_reduce(t, f, p);
    std::vector<Poly> frob_chain;  // frob_chain[k] = x^{p^{k+1}} mod f
    Poly cur = t;
    for (std::size_t k = 0; k < deg; ++k) {
        cur = powmod(cur, p, f, p);
        frob_chain.push_back(cur);
    }
    Poly xr = x;
    mod_reduce(xr, f, p);
    if (frob_chain[deg - 1] != xr) return false;
    for (std::uint64_t l : prime_factors_u64(deg)) {
        Poly d = frob_chain[deg / l - 1];
        // d - x
        Poly diff = d;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = std::uint32_t((diff[1] + p - 1) % p);
        trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

Field Field::make(std::uint64_t p, unsigned n, const std::vector<std::uint32_t>* modulus,
                  std::uint64_t enumeration_bound) {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, "characteristic " + std::to_string(p));
    if (n == 0) fail(Errc::NotPrime, "extension degree must be positive");
    // q = p^n with overflow guard
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > enumeration_bound / p + 1) fail(Errc::NoFieldTooLarge, "p^n exceeds enumeration bound");
        q *= p;
    }
    if (q > enumeration_bound)
        fail(Errc::NoFieldTooLarge,
             "q = " + std::to_string(q) + " > bound " + std::to_string(enumeration_bound));

    Field F;
    F.p_ = p;
    F.n_ = n;
    F.q_ = q;

    if (modulus) {
        Poly m = *modulus;
        if (m.size() != n + 1 || m.back() != 1) fail(Errc::ReducibleModulus, "modulus must be monic of degree n");
        for (auto& c : m)
            if (c >= p) fail(Errc::ReducibleModulus, "modulus coefficient out of range");
        if (n > 1 && !is_irreducible_mod_p(m, p)) fail(Errc::ReducibleModulus, "supplied modulus factors over F_p");
        F.modulus_ = m;
    } else if (n == 1) {
        F.modulus_ = {0, 1};  // x
    } else {
        // first irreducible monic in coefficient-vector order
        bool found = false;
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            Poly cand(n + 1);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < n; ++i) {
                cand[i] = std::uint32_t(v % p);
                v /= p;
            }
            cand[n] = 1;
            if (is_irreducible_mod_p(cand, p)) {
                F.modulus_ = cand;
                found = true;
                break;
            }
        }
        if (!found) fail(Errc::ReducibleModulus, "no irreducible modulus found");  // unreachable
    }

    F.q1_factors_ = prime_factors_u64(q - 1);

    // smallest generator in coefficient-vector order
    elem_t gen = 0;
    for (std::uint64_t cand = 1; cand < q; ++cand) {
        bool ok = true;
        for (std::uint64_t l : F.q1_factors_) {
            if (F.slow_pow(elem_t(cand), (q - 1) / l) == F.one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = elem_t(cand);
            break;
        }
    }
    if (gen == 0 && q > 2) fail(Errc::ReducibleModulus, "no generator found");  // unreachable for fields
    if (q == 2) gen = 1;
    F.generator_ = gen;

    F.exp_.assign(q - 1, 0);
    F.log_.assign(q, 0);
    elem_t acc = F.one();
    for (std::uint64_t k = 0; k < q - 1; ++k) {
        F.exp_[k] = acc;
        F.log_[acc] = std::uint32_t(k);
        acc = F.slow_mul(acc, gen);
    }
    if (acc != F.one()) fail(Errc::ReducibleModulus, "generator order check failed");  // unreachable
    return F;
}

elem_t Field::embed(long long c) const {
    long long r = c % (long long)p_;
    if (r < 0) r += (long long)p_;
    return elem_t(r);
}

std::vector<std::uint32_t> Field::coords(elem_t a) const {
    std::vector<std::uint32_t> c(n_);
    std::uint64_t v = a;
    for (unsigned i = 0; i < n_; ++i) {
        c[i] = std::uint32_t(v % p_);
        v /= p_;
    }
    return c;
}

elem_t Field::from_coords(const std::vector<std::uint32_t>& c) const {
    std::uint64_t r = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) fail(Errc::FieldMismatch, "coordinate out of range");
        r = r * p_ + c[i];
    }
    if (r >= q_) fail(Errc::FieldMismatch, "element index out of range");
    return elem_t(r);
}

elem_t Field::add(elem_t a, elem_t b) const {
    if (n_ == 1) {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return elem_t(s);
    }
    std::uint64_t r = 0, pw = 1;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        a = elem_t(a / p_);
        b = elem_t(b / p_);
        std::uint64_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * pw;
        pw *= p_;
    }
    return elem_t(r);
}

elem_t Field::neg(elem_t a) const {
    if (n_ == 1) return a == 0 ? 0 : elem_t(p_ - a);
    std::uint64_t r = 0, pw = 1;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t d = a % p_;
        a = elem_t(a / p_);
        r += (d == 0 ? 0 : p_ - d) * pw;
        pw *= p_;
    }
    return elem_t(r);
}

elem_t Field::sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

elem_t Field::pow(elem_t a, long long e) const {
    if (a == 0) {
        if (e == 0) return one();
        if (e < 0) fail(Errc::DivisionByZero, "negative power of zero");
        return 0;
    }
    long long m = (long long)(q_ - 1);
    long long r = e % m;
    if (r < 0) r += m;
    std::uint64_t k = log_[a] * std::uint64_t(r) % (q_ - 1);
    return exp_[k];
}

elem_t Field::slow_mul(elem_t a, elem_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return elem_t(std::uint64_t(a) * b % p_);
    Poly pa = coords(a), pb = coords(b);
    Poly r = mulmod(pa, pb, modulus_, p_);
    r.resize(n_, 0);
    std::uint64_t idx = 0;
    for (std::size_t i = n_; i-- > 0;) idx = idx * p_ + r[i];
    return elem_t(idx);
}

elem_t Field::slow_pow(elem_t a, std::uint64_t e) const {
    elem_t r = one(), base = a;
    while (e) {
        if (e & 1) r = slow_mul(r, base);
        base = slow_mul(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace zetaforge

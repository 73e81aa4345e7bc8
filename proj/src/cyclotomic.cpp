#include "zetaforge/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace zetaforge {

unsigned long euler_phi(std::uint32_t m) {
    unsigned long r = m;
    std::uint32_t v = m;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= v; ++d) {
        if (v % d == 0) {
            r -= r / d;
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) r -= r / v;
    return r;
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// exact division of a by b (b with unit leading coefficient), throws on
// nonzero remainder
ZPoly zdivexact(ZPoly a, const ZPoly& b) {
    ztrim(a);
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("cyclotomic division not exact");
    ZPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
    }
    for (const auto& v : a)
        if (v != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

struct Ring {
    std::uint32_t m;
    unsigned long phi;
    ZPoly Phi;                      // Phi_m, monic, degree phi
    std::vector<ZPoly> power_rep;   // x^j mod Phi_m for j in [0, 2*phi-1)
};

const Ring& ring_for(std::uint32_t m) {
    static std::mutex mu;
    static std::map<std::uint32_t, Ring> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    Ring r;
    r.m = m;
    r.Phi = cyclotomic_polynomial(m);
    r.phi = r.Phi.size() - 1;
    std::size_t need = 2 * r.phi > 1 ? 2 * r.phi - 1 : 1;
    r.power_rep.resize(need);
    ZPoly cur{1};
    for (std::size_t j = 0; j < need; ++j) {
        ZPoly rep = cur;
        rep.resize(r.phi, 0);
        r.power_rep[j] = rep;
        // cur <- cur * x mod Phi
        ZPoly nxt(cur.size() + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) nxt[i + 1] = cur[i];
        while (nxt.size() > r.phi) {
            mpz_class c = nxt.back();
            std::size_t off = nxt.size() - 1 - r.phi;
            if (c != 0)
                for (std::size_t i = 0; i <= r.phi; ++i) nxt[off + i] -= c * r.Phi[i];
            nxt.pop_back();
        }
        nxt.resize(r.phi, 0);
        cur = nxt;
    }
    return cache.emplace(m, std::move(r)).first->second;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t m) {
    if (m == 1) return {-1, 1};  // x - 1
    // (x^m - 1) / prod_{d | m, d < m} Phi_d
    ZPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d == 0) num = zdivexact(num, cyclotomic_polynomial(d));
    }
    return num;
}

CyclotomicInt::CyclotomicInt(std::uint32_t m) : m_(m) { c_.assign(ring_for(m).phi, 0); }

CyclotomicInt CyclotomicInt::from_integer(std::uint32_t m, const mpz_class& v) {
    CyclotomicInt r(m);
    r.c_[0] = v;
    return r;
}

CyclotomicInt CyclotomicInt::root_power(std::uint32_t m, std::uint64_t k) {
    const Ring& R = ring_for(m);
    std::uint64_t e = k % m;
    if (e < R.power_rep.size()) {
        CyclotomicInt r(m);
        r.c_ = R.power_rep[e];
        return r;
    }
    std::vector<mpz_class> counts(m, 0);
    counts[e] = 1;
    return from_power_counts(m, counts);
}

CyclotomicInt CyclotomicInt::from_power_counts(std::uint32_t m, const std::vector<mpz_class>& counts) {
    const Ring& R = ring_for(m);
    CyclotomicInt r(m);
    // x^j for j >= phi reduces through x^m = 1 first when j >= table size
    for (std::uint32_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0) continue;
        std::uint32_t e = j % m;
        if (e < R.power_rep.size()) {
            for (std::size_t i = 0; i < R.phi; ++i) r.c_[i] += counts[j] * R.power_rep[e][i];
        } else {
            // reduce x^e mod Phi by long division on the fly
            ZPoly t(e + 1, 0);
            t[e] = counts[j];
            while (t.size() > R.phi) {
                mpz_class c = t.back();
                std::size_t off = t.size() - 1 - R.phi;
                if (c != 0)
                    for (std::size_t i = 0; i <= R.phi; ++i) t[off + i] -= c * R.Phi[i];
                t.pop_back();
            }
            t.resize(R.phi, 0);
            for (std::size_t i = 0; i < R.phi; ++i) r.c_[i] += t[i];
        }
    }
    return r;
}

bool CyclotomicInt::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool CyclotomicInt::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpz_class CyclotomicInt::to_integer() const {
    if (!is_integer()) throw std::logic_error("cyclotomic value is not a rational integer");
    return c_.empty() ? mpz_class(0) : c_[0];
}

CyclotomicInt CyclotomicInt::lift(std::uint32_t M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) fail(Errc::FieldMismatch, "conductor does not divide target conductor");
    std::uint32_t step = M / m_;
    std::vector<mpz_class> counts(M, 0);
    // write as combination of zeta_m^j = zeta_M^{j*step}
    for (std::size_t j = 0; j < c_.size(); ++j) counts[(j * step) % M] = c_[j];
    return from_power_counts(M, counts);
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (m_ != o.m_) fail(Errc::FieldMismatch, "conductor mismatch in cyclotomic add");
    CyclotomicInt r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    if (m_ != o.m_) fail(Errc::FieldMismatch, "conductor mismatch in cyclotomic add");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (m_ != o.m_) fail(Errc::FieldMismatch, "conductor mismatch in cyclotomic sub");
    CyclotomicInt r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (m_ != o.m_) fail(Errc::FieldMismatch, "conductor mismatch in cyclotomic mul");
    const Ring& R = ring_for(m_);
    if (R.phi == 0) return *this;
    std::vector<mpz_class> conv(2 * R.phi - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) conv[i + j] += c_[i] * o.c_[j];
    }
    CyclotomicInt r(m_);
    for (std::size_t k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        for (std::size_t i = 0; i < R.phi; ++i) r.c_[i] += conv[k] * R.power_rep[k][i];
    }
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const mpz_class& s) const {
    CyclotomicInt r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const { return m_ == o.m_ && c_ == o.c_; }

CyclotomicInt CyclotomicInt::conj() const {
    std::vector<mpz_class> counts(m_, 0);
    for (std::size_t j = 0; j < c_.size(); ++j) counts[(m_ - j) % m_] += c_[j];
    return from_power_counts(m_, counts);
}

}  // namespace zetaforge

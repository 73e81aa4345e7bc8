#include "zetaforge/variety.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "zetaforge/characters.hpp"

namespace zetaforge {

void VarietySpec::validate() const {
    if (!is_prime_u64(p)) fail(Errc::NotPrime, "base characteristic " + std::to_string(p));
    if (coords == 0 && ambient == Ambient::Projective)
        fail(Errc::NotHomogeneous, "projective space needs at least one coordinate");
    for (const auto& eq : equations) {
        long long degree = -1;
        for (const auto& term : eq) {
            if (term.exponents.size() != coords)
                fail(Errc::SchemaError, "exponent vector arity does not match coordinate count");
            if (ambient == Ambient::Projective) {
                long long total = 0;
                for (auto e : term.exponents) total += e;
                if (degree < 0) degree = total;
                if (total != degree)
                    fail(Errc::NotHomogeneous, "projective equation mixes total degrees " +
                                                   std::to_string(degree) + " and " + std::to_string(total));
            }
        }
    }
}

namespace {

// Per-field evaluation tables for one spec: embedded coefficients plus
// x -> x^e lookup for every exponent that occurs.
struct Evaluator {
    const Field& F;
    struct Term {
        elem_t coeff;
        // (coordinate, power-table row) pairs, zero exponents dropped
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    };
    std::vector<std::vector<Term>> equations;
    std::vector<std::vector<elem_t>> powers;  // powers[row][x] = x^e_row

    Evaluator(const VarietySpec& spec, const Field& field) : F(field) {
        if (field.p() != spec.p) fail(Errc::CharacteristicMismatch, "extension has different characteristic");
        std::map<std::uint32_t, std::uint32_t> exp_row;
        for (const auto& eq : spec.equations) {
            std::vector<Term> teq;
            for (const auto& t : eq) {
                Term term;
                term.coeff = F.embed(t.coeff);
                if (term.coeff == 0) continue;
                for (std::uint32_t j = 0; j < t.exponents.size(); ++j) {
                    std::uint32_t e = t.exponents[j];
                    if (e == 0) continue;
                    auto it = exp_row.find(e);
                    if (it == exp_row.end()) it = exp_row.emplace(e, std::uint32_t(exp_row.size())).first;
                    term.factors.emplace_back(j, it->second);
                }
                teq.push_back(std::move(term));
            }
            equations.push_back(std::move(teq));
        }
        powers.resize(exp_row.size());
        for (const auto& [e, row] : exp_row) {
            auto& tab = powers[row];
            tab.resize(F.q());
            for (std::uint64_t x = 0; x < F.q(); ++x) tab[x] = F.pow(elem_t(x), e);
        }
    }

    bool satisfied(const std::vector<elem_t>& x) const {
        for (const auto& eq : equations) {
            elem_t acc = 0;
            for (const auto& t : eq) {
                elem_t v = t.coeff;
                for (const auto& [var, row] : t.factors) {
                    v = F.mul(v, powers[row][x[var]]);
                    if (v == 0) break;
                }
                acc = F.add(acc, v);
            }
            if (acc != 0) return false;
        }
        return true;
    }
};

// Count assignments extending `prefix` by `free_vars` arbitrary coordinates.
std::uint64_t count_block(const Evaluator& ev, std::vector<elem_t> prefix, unsigned free_vars,
                          std::uint64_t first_lo, std::uint64_t first_hi) {
    const std::uint64_t q = ev.F.q();
    if (free_vars == 0) return ev.satisfied(prefix) ? 1 : 0;
    if (first_lo >= first_hi) return 0;
    std::vector<elem_t> x = prefix;
    x.resize(prefix.size() + free_vars, 0);
    std::uint64_t cnt = 0;
    const std::size_t base = prefix.size();
    x[base] = elem_t(first_lo);
    while (true) {
        if (ev.satisfied(x)) ++cnt;
        // odometer over the free block, most significant digit first
        std::size_t i = base + free_vars;
        while (i-- > base) {
            std::uint64_t lim = (i == base) ? first_hi : q;
            if (std::uint64_t(x[i]) + 1 < lim) {
                x[i] = elem_t(x[i] + 1);
                std::fill(x.begin() + i + 1, x.end(), 0);
                break;
            }
            if (i == base) return cnt;
        }
    }
    return cnt;
}

std::uint64_t count_assignments(const Evaluator& ev, const std::vector<elem_t>& prefix,
                                unsigned free_vars, unsigned threads) {
    const std::uint64_t q = ev.F.q();
    if (free_vars == 0 || threads <= 1 || q < 2 * threads)
        return count_block(ev, prefix, free_vars, 0, q);
    // Partition the first free coordinate; chunk sums are recombined in
    // index order, so the result is independent of the partition count.
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = q * t / threads, hi = q * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] { partial[t] = count_block(ev, prefix, free_vars, lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

mpz_class pow_mpz(std::uint64_t base, unsigned e) {
    mpz_class r = 1, b = mpz_class((unsigned long)base);
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

void check_budget(const mpz_class& candidates, std::uint64_t budget) {
    if (candidates > budget)
        fail(Errc::BudgetExceeded, "enumeration would visit " + candidates.get_str() +
                                       " candidate tuples (budget " + std::to_string(budget) + ")");
}

}  // namespace

mpz_class count_affine(const VarietySpec& spec, const Field& ext, const CountOptions& opts) {
    spec.validate();
    unsigned vars = spec.coords;
    if (spec.equations.empty()) return pow_mpz(ext.q(), vars);  // full ambient space
    check_budget(pow_mpz(ext.q(), vars), opts.budget);
    Evaluator ev(spec, ext);
    return count_assignments(ev, {}, vars, opts.threads);
}

mpz_class count_projective(const VarietySpec& spec, const Field& ext, const CountOptions& opts) {
    spec.validate();
    if (spec.ambient != Ambient::Projective)
        fail(Errc::NotHomogeneous, "projective count requires a projective spec");
    const unsigned vars = spec.coords;
    const std::uint64_t q = ext.q();
    if (spec.equations.empty()) {
        mpz_class total = 0;
        for (unsigned i = 0; i < vars; ++i) total += pow_mpz(q, i);
        return total;  // 1 + q + ... + q^{vars-1}
    }
    mpz_class candidates = 0;
    for (unsigned i = 0; i < vars; ++i) candidates += pow_mpz(q, vars - 1 - i);
    check_budget(candidates, opts.budget);
    Evaluator ev(spec, ext);
    // representatives: first nonzero coordinate normalized to 1
    mpz_class total = 0;
    for (unsigned i = 0; i < vars; ++i) {
        std::vector<elem_t> prefix(i + 1, 0);
        prefix[i] = ext.one();
        total += count_assignments(ev, prefix, vars - 1 - i, opts.threads);
    }
    return total;
}

CountSeries count_series(const VarietySpec& spec, unsigned k, const CountOptions& opts) {
    spec.validate();
    CountSeries out;
    out.q = (unsigned long)spec.p;
    for (unsigned n = 1; n <= k; ++n) {
        Field ext = Field::make(spec.p, n);
        out.counts.push_back(spec.ambient == Ambient::Projective ? count_projective(spec, ext, opts)
                                                                 : count_affine(spec, ext, opts));
    }
    return out;
}

std::uint64_t count_elliptic(long long a, long long b, const Field& F) {
    if (F.p() == 2 || F.p() == 3) fail(Errc::BadCharacteristic, "Weierstrass counting needs char > 3");
    elem_t ea = F.embed(a), eb = F.embed(b);
    // disc = -16(4a^3 + 27b^2)
    elem_t disc = F.add(F.mul(F.embed(4), F.pow(ea, 3)), F.mul(F.embed(27), F.mul(eb, eb)));
    disc = F.mul(F.embed(-16), disc);
    if (disc == 0) fail(Errc::SingularCurve, "discriminant vanishes");
    std::vector<std::uint32_t> sq(F.q(), 0);
    for (std::uint64_t y = 0; y < F.q(); ++y) ++sq[F.mul(elem_t(y), elem_t(y))];
    std::uint64_t n = 1;  // point at infinity
    for (std::uint64_t x = 0; x < F.q(); ++x) {
        elem_t rhs = F.add(F.add(F.pow(elem_t(x), 3), F.mul(ea, elem_t(x))), eb);
        n += sq[rhs];
    }
    return n;
}

CountSeries elliptic_count_series(long long a, long long b, std::uint64_t p, unsigned k,
                                  std::uint64_t field_bound) {
    CountSeries out;
    out.q = (unsigned long)p;
    for (unsigned n = 1; n <= k; ++n) {
        Field ext = Field::make(p, n, nullptr, field_bound);
        out.counts.push_back((unsigned long)count_elliptic(a, b, ext));
    }
    return out;
}

namespace {

// #{(u_1..u_t) : u_i != 0, sum u_i = b} -- the all-trivial-character block.
mpz_class nonzero_tuples_with_sum(std::uint64_t q, unsigned t, bool b_is_zero) {
    mpz_class qm1 = mpz_class((unsigned long)(q - 1));
    mpz_class pw = 1;
    for (unsigned i = 0; i < t; ++i) pw *= qm1;
    mpz_class sgn = (t % 2 == 0) ? 1 : -1;
    mpz_class num = b_is_zero ? pw + sgn * qm1 : pw - sgn;
    mpz_class r = num / (unsigned long)q;
    return r;
}

}  // namespace

mpz_class count_diagonal_charsum(const std::vector<elem_t>& coeffs,
                                 const std::vector<std::uint64_t>& exponents, elem_t b,
                                 const Field& F) {
    const std::size_t k = coeffs.size();
    if (exponents.size() != k) fail(Errc::FieldMismatch, "coefficient/exponent arity mismatch");
    const std::uint64_t q = F.q();
    std::vector<std::uint64_t> d(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs[i] == 0) fail(Errc::FieldMismatch, "diagonal coefficients must be nonzero");
        if (exponents[i] == 0) fail(Errc::FieldMismatch, "exponents must be positive");
        d[i] = std::gcd(exponents[i], q - 1);  // x -> x^m and x -> x^d have equal fibers
    }
    std::uint64_t L = 1;
    for (auto di : d) L = std::lcm(L, di);
    const std::uint32_t m = std::uint32_t(L);

    // chi(g) = zeta_L^t for t = (L/d_i) * j, j in [0, d_i)
    const std::uint64_t dlog_neg1 = (q == 2) ? 0 : F.dlog(F.neg(F.one())) % L;
    std::vector<std::uint64_t> dlog_ainv(k);
    for (std::size_t i = 0; i < k; ++i) dlog_ainv[i] = F.dlog(F.inv(coeffs[i])) % L;
    const bool b_zero = (b == 0);
    const std::uint64_t dlog_b_red = b_zero ? 0 : F.dlog(b) % L;

    // Jacobi sums memoized on the sorted multiset of zeta_L-exponents.
    std::map<std::vector<std::uint32_t>, CyclotomicInt> jmemo;
    auto jacobi_of = [&](std::vector<std::uint32_t> ts) -> CyclotomicInt {
        std::sort(ts.begin(), ts.end());
        auto it = jmemo.find(ts);
        if (it != jmemo.end()) return it->second;
        std::vector<MultChar> chars;
        chars.reserve(ts.size());
        for (auto t : ts) chars.emplace_back(F, m, t);
        CyclotomicInt v = jacobi_sum(chars);
        jmemo.emplace(std::move(ts), v);
        return v;
    };

    CyclotomicInt total(m);
    std::vector<std::size_t> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t(1) << i)) subset.push_back(i);
        const std::size_t s = subset.size();
        // iterate character tuples (j_i), j_i in [0, d_i)
        std::vector<std::uint64_t> j(s, 0);
        while (true) {
            std::vector<std::uint32_t> nontriv;  // zeta_L-exponents of the nontrivial characters
            std::uint64_t tsum = 0;              // exponent of the product character
            std::uint64_t wexp = 0;              // exponent of prod chi_i(a_i^{-1})
            for (std::size_t u = 0; u < s; ++u) {
                std::uint64_t t = (L / d[subset[u]]) * j[u] % L;
                if (t != 0) nontriv.push_back(std::uint32_t(t));
                tsum = (tsum + t) % L;
                wexp = (wexp + t * dlog_ainv[subset[u]]) % L;
            }
            const std::size_t nchars = nontriv.size();
            const unsigned ntriv = unsigned(s - nchars);

            CyclotomicInt val(m);
            if (nchars == 0) {
                val = CyclotomicInt::from_integer(m, nonzero_tuples_with_sum(q, unsigned(s), b_zero));
            } else {
                mpz_class sgn = (ntriv % 2 == 0) ? 1 : -1;  // each trivial factor peels to -1
                if (!b_zero) {
                    std::uint64_t be = tsum * dlog_b_red % L;
                    CyclotomicInt core = (nchars >= 2) ? jacobi_of(nontriv)
                                                       : CyclotomicInt::from_integer(m, 1);
                    val = (CyclotomicInt::root_power(m, be) * core) * sgn;
                } else if (tsum != 0) {
                    // product character nontrivial: the zero-sum sum vanishes
                } else if (nchars >= 2) {
                    std::uint64_t pe = 0;  // (prod of all but last)(-1)
                    for (std::size_t u = 0; u + 1 < nchars; ++u) pe = (pe + nontriv[u] * dlog_neg1) % L;
                    std::vector<std::uint32_t> head(nontriv.begin(), nontriv.end() - 1);
                    CyclotomicInt core = (head.size() >= 2) ? jacobi_of(head)
                                                            : CyclotomicInt::from_integer(m, 1);
                    val = (CyclotomicInt::root_power(m, pe) * core) *
                          (sgn * mpz_class((unsigned long)(q - 1)));
                }
                // nchars == 1 with trivial product is impossible; zero stands
            }
            if (!val.is_zero()) total += CyclotomicInt::root_power(m, wexp) * val;

            // odometer over character indices
            std::size_t u = s;
            bool done = true;
            while (u-- > 0) {
                if (++j[u] < d[subset[u]]) {
                    std::fill(j.begin() + u + 1, j.end(), 0);
                    done = false;
                    break;
                }
            }
            if (done || s == 0) break;
        }
    }
    mpz_class n = total.to_integer();
    if (n < 0) throw std::logic_error("negative diagonal count");
    return n;
}

std::vector<mpz_class> closed_point_degrees(const CountSeries& series) {
    const std::size_t k = series.counts.size();
    if (k == 0) fail(Errc::InsufficientCounts, "empty count series");
    auto mobius = [](unsigned v) -> int {
        int mu = 1;
        for (unsigned d = 2; d * d <= v; ++d) {
            if (v % d == 0) {
                v /= d;
                if (v % d == 0) return 0;
                mu = -mu;
            }
        }
        if (v > 1) mu = -mu;
        return mu;
    };
    std::vector<mpz_class> b(k);
    for (unsigned e = 1; e <= k; ++e) {
        mpz_class acc = 0;
        for (unsigned dd = 1; dd <= e; ++dd) {
            if (e % dd) continue;
            int mu = mobius(e / dd);
            if (mu) acc += mu * series.counts[dd - 1];
        }
        if (acc % e != 0)
            fail(Errc::NonIntegralOrbit, "orbit count at degree " + std::to_string(e) + " is not integral");
        b[e - 1] = acc / e;
    }
    return b;
}

}  // namespace zetaforge

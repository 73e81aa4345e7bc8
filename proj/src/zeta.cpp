#include "zetaforge/zeta.hpp"

#include <algorithm>

#include "zetaforge/errors.hpp"

namespace zetaforge {

PowerSeriesQ zeta_series_from_counts(const CountSeries& series, unsigned order) {
    if (series.counts.size() < order)
        fail(Errc::InsufficientCounts, "need N_1..N_" + std::to_string(order) + ", have " +
                                           std::to_string(series.counts.size()));
    // Z' = (sum N_n T^{n-1}) Z  =>  k z_k = sum_{n=1}^{k} N_n z_{k-n}
    PowerSeriesQ z;
    z.coeffs.assign(order + 1, mpq_class(0));
    z.coeffs[0] = 1;
    for (unsigned k = 1; k <= order; ++k) {
        mpq_class acc = 0;
        for (unsigned n = 1; n <= k; ++n) acc += mpq_class(series.counts[n - 1]) * z.coeffs[k - n];
        z.coeffs[k] = acc / mpq_class((unsigned long)k);
    }
    return z;
}

PowerSeriesQ series_log(const PowerSeriesQ& zs) {
    if (zs.coeffs.empty() || zs.coeffs[0] != 1)
        throw std::logic_error("series_log needs constant term 1");
    const unsigned order = zs.order();
    PowerSeriesQ l;
    l.coeffs.assign(order + 1, mpq_class(0));
    // k z_k = sum_{j=1}^{k} j l_j z_{k-j}
    for (unsigned k = 1; k <= order; ++k) {
        mpq_class acc = mpq_class((unsigned long)k) * zs.coeffs[k];
        for (unsigned j = 1; j < k; ++j) acc -= mpq_class((unsigned long)j) * l.coeffs[j] * zs.coeffs[k - j];
        l.coeffs[k] = acc / mpq_class((unsigned long)k);
    }
    return l;
}

RationalZeta RationalZeta::make(PolyQ num, PolyQ den) {
    poly_trim(num);
    poly_trim(den);
    if (poly_degree(den) < 0 || poly_degree(num) < 0)
        throw std::logic_error("zeta numerator/denominator must be nonzero");
    PolyQ g = poly_gcd(num, den);
    if (poly_degree(g) > 0) {
        PolyQ q, r;
        poly_divrem(num, g, q, r);
        num = q;
        poly_divrem(den, g, q, r);
        den = q;
    }
    if (num[0] == 0 || den[0] == 0)
        throw std::logic_error("zeta constant terms must be nonzero");
    mpq_class scale = den[0];
    num = poly_scale(num, 1 / scale);
    den = poly_scale(den, 1 / scale);
    if (num[0] != 1)
        throw std::logic_error("zeta does not have Z(0) = 1");
    RationalZeta z;
    z.num = std::move(num);
    z.den = std::move(den);
    return z;
}

std::vector<mpq_class> counts_from_zeta_q(const RationalZeta& z, unsigned k) {
    std::vector<mpq_class> sd = inverse_root_power_sums(z.den, k);
    std::vector<mpq_class> sn = inverse_root_power_sums(z.num, k);
    std::vector<mpq_class> out(k);
    for (unsigned i = 0; i < k; ++i) out[i] = sd[i] - sn[i];
    return out;
}

std::vector<mpz_class> counts_from_zeta(const RationalZeta& z, unsigned k) {
    auto qs = counts_from_zeta_q(z, k);
    std::vector<mpz_class> out(k);
    for (unsigned i = 0; i < k; ++i) {
        if (qs[i].get_den() != 1) throw std::logic_error("count series of zeta is not integral");
        out[i] = qs[i].get_num();
    }
    return out;
}

namespace {

// Nullspace basis of a rows x cols rational matrix, via reduced row echelon.
std::vector<std::vector<mpq_class>> nullspace(std::vector<std::vector<mpq_class>> M, unsigned cols) {
    std::vector<long> pivot_of_col(cols, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < cols && row < M.size(); ++col) {
        unsigned sel = row;
        while (sel < M.size() && M[sel][col] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[sel], M[row]);
        mpq_class inv = 1 / M[row][col];
        for (unsigned j = col; j < cols; ++j) M[row][j] *= inv;
        for (unsigned i = 0; i < M.size(); ++i) {
            if (i == row || M[i][col] == 0) continue;
            mpq_class f = M[i][col];
            for (unsigned j = col; j < cols; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<mpq_class>> basis;
    for (unsigned f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<mpq_class> v(cols, mpq_class(0));
        v[f] = 1;
        for (unsigned c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -M[std::size_t(pivot_of_col[c])][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

RationalZeta reconstruct_rational(const CountSeries& series, unsigned max_num_deg,
                                  unsigned max_den_deg) {
    const unsigned k = unsigned(series.counts.size());
    if (k < max_num_deg + max_den_deg + 2)
        fail(Errc::InsufficientCounts,
             "need at least " + std::to_string(max_num_deg + max_den_deg + 2) + " counts, have " +
                 std::to_string(k));
    PowerSeriesQ zs = zeta_series_from_counts(series, k);
    const auto& z = zs.coeffs;

    for (unsigned v = 0; v <= max_den_deg; ++v) {
        for (unsigned u = 0; u <= max_num_deg; ++u) {
            // d_0..d_v with sum_j d_j z_{t-j} = 0 for all t in (u, k]
            std::vector<std::vector<mpq_class>> M;
            for (unsigned t = u + 1; t <= k; ++t) {
                std::vector<mpq_class> row(v + 1, mpq_class(0));
                for (unsigned j = 0; j <= v && j <= t; ++j) row[j] = z[t - j];
                M.push_back(std::move(row));
            }
            auto basis = nullspace(std::move(M), v + 1);
            for (auto& w : basis) {
                if (w[0] == 0) continue;  // denominator needs nonzero constant term
                PolyQ den(w.begin(), w.end());
                den = poly_scale(den, 1 / w[0]);
                PolyQ num(u + 1, mpq_class(0));
                for (unsigned i = 0; i <= u; ++i) {
                    mpq_class acc = 0;
                    for (unsigned j = 0; j <= v && j <= i; ++j) acc += den[j] * z[i - j];
                    num[i] = acc;
                }
                poly_trim(num);
                if (num.empty()) continue;
                RationalZeta cand;
                try {
                    cand = RationalZeta::make(num, den);
                } catch (const std::logic_error&) {
                    continue;
                }
                auto got = counts_from_zeta_q(cand, k);
                bool ok = true;
                for (unsigned i = 0; i < k; ++i) {
                    if (got[i] != mpq_class(series.counts[i])) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return cand;
            }
        }
    }
    fail(Errc::NoRationalFit, "no rational zeta within degree caps (" + std::to_string(max_num_deg) +
                                  ", " + std::to_string(max_den_deg) + ") fits the counts");
}

PolyZ curve_numerator_from_counts(unsigned g, const mpz_class& q,
                                  const std::vector<mpz_class>& counts) {
    if (counts.size() < g)
        fail(Errc::InsufficientCounts, "genus " + std::to_string(g) + " needs N_1..N_" + std::to_string(g));
    PolyZ c(2 * g + 1, mpz_class(0));
    c[0] = 1;
    if (g > 0) {
        // power sums of the numerator's inverse roots: s_n = 1 + q^n - N_n
        std::vector<mpz_class> s(g + 1);
        mpz_class qn = 1;
        for (unsigned n = 1; n <= g; ++n) {
            qn *= q;
            s[n] = 1 + qn - counts[n - 1];
        }
        for (unsigned n = 1; n <= g; ++n) {
            mpz_class acc = s[n];
            for (unsigned i = 1; i < n; ++i) acc += c[i] * s[n - i];
            if (acc % n != 0)
                fail(Errc::NonIntegralSolution, "Newton step " + std::to_string(n) + " is not integral");
            c[n] = -acc / n;
        }
        // functional equation: c_{2g-i} = q^{g-i} c_i
        for (unsigned i = 0; i < g; ++i) {
            mpz_class f = 1;
            for (unsigned t = 0; t < g - i; ++t) f *= q;
            c[2 * g - i] = f * c[i];
        }
    }
    if (counts.size() > g) {
        // over-determined variant: remaining counts must be reproduced
        PolyQ den{mpq_class(1), mpq_class(-(q + 1)), mpq_class(q)};
        RationalZeta z = RationalZeta::make(to_q(c), den);
        auto got = counts_from_zeta_q(z, unsigned(counts.size()));
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (got[i] != mpq_class(counts[i]))
                fail(Errc::NonIntegralSolution,
                     "supplied N_" + std::to_string(i + 1) + " conflicts with the fitted numerator");
    }
    return c;
}

namespace {

// r-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<unsigned>> subsets_lex(unsigned n, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(r);
    for (unsigned i = 0; i < r; ++i) cur[i] = i;
    if (r > n) return out;
    while (true) {
        out.push_back(cur);
        if (r == 0) break;
        long i = long(r) - 1;
        while (i >= 0 && cur[i] == n - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (unsigned j = unsigned(i) + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

mpz_class minor_det(const std::vector<std::vector<mpz_class>>& A, const std::vector<unsigned>& rows,
                    const std::vector<unsigned>& cols) {
    const unsigned r = unsigned(rows.size());
    if (r == 0) return 1;
    if (r == 1) return A[rows[0]][cols[0]];
    // Laplace along the first row; r stays tiny (<= 2g)
    mpz_class det = 0;
    std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
    for (unsigned j = 0; j < r; ++j) {
        const mpz_class& a = A[rows[0]][cols[j]];
        if (a == 0) continue;
        std::vector<unsigned> sub_cols;
        sub_cols.reserve(r - 1);
        for (unsigned t = 0; t < r; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        mpz_class m = minor_det(A, sub_rows, sub_cols);
        det += (j % 2 == 0 ? a : -a) * m;
    }
    return det;
}

}  // namespace

PolyZ abelian_exterior_factor(const PolyZ& p1, unsigned r) {
    PolyZ p = p1;
    poly_trim(p);
    if (p.empty() || p[0] != 1) fail(Errc::DegreeOutOfRange, "P_1 must have constant term 1");
    const unsigned deg = unsigned(poly_degree(p));
    if (r > deg) fail(Errc::DegreeOutOfRange, "exterior power exceeds the number of inverse roots");
    if (r == 0) return PolyZ{1, -1};  // weight-0 factor: single inverse root 1

    // companion matrix of f(x) = x^deg P_1(1/x)
    std::vector<std::vector<mpz_class>> C(deg, std::vector<mpz_class>(deg, mpz_class(0)));
    for (unsigned i = 0; i + 1 < deg; ++i) C[i + 1][i] = 1;
    for (unsigned i = 0; i < deg; ++i) C[i][deg - 1] = -p[deg - i];

    auto subs = subsets_lex(deg, r);
    const unsigned N = unsigned(subs.size());
    std::vector<std::vector<mpz_class>> A(N, std::vector<mpz_class>(N));
    for (unsigned i = 0; i < N; ++i)
        for (unsigned j = 0; j < N; ++j) A[i][j] = minor_det(C, subs[i], subs[j]);

    // Faddeev-LeVerrier: integer matrix, integer characteristic polynomial
    std::vector<mpz_class> coef(N + 1);
    coef[0] = 1;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, mpz_class(0)));
    for (unsigned i = 0; i < N; ++i) M[i][i] = 1;  // M_0 = I
    for (unsigned kstep = 1; kstep <= N; ++kstep) {
        // M_k = A * M_{k-1} + c_{k-1} I  (with M_0 = I, c_0 = 1)
        std::vector<std::vector<mpz_class>> AM(N, std::vector<mpz_class>(N, mpz_class(0)));
        for (unsigned i = 0; i < N; ++i)
            for (unsigned l = 0; l < N; ++l) {
                if (A[i][l] == 0) continue;
                for (unsigned j = 0; j < N; ++j) AM[i][j] += A[i][l] * M[l][j];
            }
        mpz_class tr = 0;
        for (unsigned i = 0; i < N; ++i) tr += AM[i][i];
        if (tr % kstep != 0) throw std::logic_error("Faddeev-LeVerrier trace not divisible");
        coef[kstep] = -tr / kstep;
        for (unsigned i = 0; i < N; ++i) AM[i][i] += coef[kstep];
        M = std::move(AM);
    }
    // char(x) = sum coef[i] x^{N-i}; P_r(T) = T^N char(1/T) = sum coef[i] T^i
    PolyZ out(coef.begin(), coef.end());
    poly_trim(out);
    return out;
}

RationalZeta assemble_alternating_product(const WeilFactorization& f) {
    if (f.factors.size() != 2 * f.d + 1)
        fail(Errc::MissingFactor, "need P_0..P_" + std::to_string(2 * f.d) + ", have " +
                                      std::to_string(f.factors.size()));
    PolyQ num{mpq_class(1)}, den{mpq_class(1)};
    for (unsigned r = 0; r < f.factors.size(); ++r) {
        if (f.factors[r].empty() || f.factors[r][0] != 1)
            fail(Errc::MissingFactor, "factor P_" + std::to_string(r) + " missing or not normalized");
        if (r % 2 == 1)
            num = poly_mul(num, to_q(f.factors[r]));
        else
            den = poly_mul(den, to_q(f.factors[r]));
    }
    return RationalZeta::make(num, den);
}

mpz_class diagonal_middle_degree(unsigned m, unsigned r) {
    if (m <= 1) return 0;
    std::vector<mpz_class> ways(m, mpz_class(0));
    ways[0] = 1;
    for (unsigned i = 0; i <= r; ++i) {
        std::vector<mpz_class> next(m, mpz_class(0));
        for (unsigned j = 0; j < m; ++j) {
            if (ways[j] == 0) continue;
            for (unsigned a = 1; a < m; ++a) next[(j + a) % m] += ways[j];
        }
        ways = std::move(next);
    }
    return ways[0];
}

}  // namespace zetaforge

#include "zetaforge/characters.hpp"

#include <numeric>

namespace zetaforge {

MultChar::MultChar(const Field& field, std::uint32_t order, std::uint32_t index)
    : field_(&field), m_(order), index_(index % (order == 0 ? 1 : order)) {
    if (order == 0 || (field.q() - 1) % order != 0)
        fail(Errc::FieldMismatch, "character order must divide q-1");
}

std::uint32_t MultChar::eval_exponent(elem_t x) const {
    std::uint64_t d = field_->dlog(x);
    return std::uint32_t((d % m_) * index_ % m_);
}

CyclotomicInt MultChar::eval(elem_t x) const {
    if (x == 0) return CyclotomicInt(m_);
    return CyclotomicInt::root_power(m_, eval_exponent(x));
}

CyclotomicInt jacobi_sum(const std::vector<MultChar>& chars) {
    if (chars.size() < 2) fail(Errc::TrivialCharacter, "jacobi_sum needs at least two characters");
    const Field& F = chars.front().field();
    std::uint64_t M = 1;
    for (const auto& ch : chars) {
        if (!ch.field().same_field(F)) fail(Errc::FieldMismatch, "characters on different fields");
        if (ch.is_trivial()) fail(Errc::TrivialCharacter, "jacobi_sum requires nontrivial characters");
        M = std::lcm(M, (std::uint64_t)ch.order());
    }
    const std::uint32_t m = std::uint32_t(M);
    const std::uint64_t q = F.q();
    const std::size_t k = chars.size();

    // chi_i(x) = zeta_M^{t_i * dlog(x)} with t_i = (M / m_i) * index_i
    std::vector<std::uint64_t> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = (M / chars[i].order()) * chars[i].index() % M;

    // Accumulate counts of zeta_M^e over tuples with sum 1; terms with any
    // x_i = 0 vanish, so only nonzero coordinates are enumerated.
    std::vector<mpz_class> counts(m, 0);
    std::vector<elem_t> x(k, 0);
    std::vector<elem_t> partial(k, 0);  // partial[i] = x_0 + ... + x_{i-1}
    std::vector<std::uint64_t> expo(k, 0);

    // depth-first over x_0..x_{k-2} nonzero, x_{k-1} = 1 - sum
    std::size_t depth = 0;
    std::vector<elem_t> cursor(k, 1);
    const elem_t one = F.one();
    while (true) {
        if (depth + 1 == k) {
            elem_t last = F.sub(one, partial[depth]);
            if (last != 0) {
                std::uint64_t e = (depth == 0 ? 0 : expo[depth - 1]);
                e = (e + t[depth] * (F.dlog(last) % M)) % M;
                counts[e] += 1;
            }
            // backtrack
            while (depth > 0 && cursor[depth - 1] == q - 1) --depth;
            if (depth == 0) break;
            --depth;
            ++cursor[depth];
            continue;
        }
        elem_t xi = cursor[depth];  // runs over 1..q-1
        partial[depth + 1] = F.add(partial[depth], xi);
        expo[depth] = ((depth == 0 ? 0 : expo[depth - 1]) + t[depth] * (F.dlog(xi) % M)) % M;
        ++depth;
        cursor[depth] = 1;
    }
    return CyclotomicInt::from_power_counts(m, counts);
}

}  // namespace zetaforge

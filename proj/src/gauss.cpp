#include "dwork/gauss.hpp"

#include "dwork/error.hpp"

#include <cmath>

namespace dwork {

GaussTable GaussTable::compute(const Characters& chars)
{
    const Field& f = chars.field();
    const std::uint32_t n = f.units();
    // theta along the generator's powers; then g(T^j) = sum_k zeta^{jk} theta(gen^k).
    std::vector<Cx> th(n);
    for (std::uint32_t k = 0; k < n; ++k)
        th[k] = chars.theta(f.exp(k));
    const auto& z = chars.roots().zeta_q1;
    std::vector<Cx> values(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        Cx acc = 0.0;
        std::uint64_t e = 0;
        for (std::uint32_t k = 0; k < n; ++k) {
            acc += z[e] * th[k];
            e += j;
            if (e >= n)
                e -= n;
        }
        values[j] = acc;
    }
    return GaussTable(std::move(values));
}

Cx GaussTable::operator()(std::int64_t j) const noexcept
{
    const std::int64_t n = static_cast<std::int64_t>(values_.size());
    return values_[static_cast<std::size_t>(((j % n) + n) % n)];
}

std::uint32_t step_for(const Field& field, std::uint32_t d)
{
    if (d == 0 || field.units() % d != 0)
        throw Error(ErrorCode::BadModulus,
                    "q=" + std::to_string(field.q()) + " is not 1 mod " + std::to_string(d));
    return field.units() / d;
}

Cx gauss_sum(const Characters& chars, std::int64_t j)
{
    const Field& f = chars.field();
    Cx acc = 0.0;
    for (std::uint32_t v = 0; v < f.q(); ++v)
        acc += chars.chi(j, Elem{v}) * chars.theta(Elem{v});
    return acc;
}

Cx jacobi_sum2(const Characters& chars, std::int64_t a, std::int64_t b)
{
    const Field& f = chars.field();
    Cx acc = 0.0;
    for (std::uint32_t v = 0; v < f.q(); ++v) {
        const Elem x{v};
        acc += chars.chi(a, x) * chars.chi(b, f.sub(f.one(), x));
    }
    return acc;
}

Cx jacobi_sum_n(const Characters& chars, const GaussTable& g, std::span<const std::int64_t> js)
{
    std::int64_t total = 0;
    Cx num = 1.0;
    for (std::int64_t j : js) {
        if (chars.idx(j) == 0)
            throw Error(ErrorCode::TrivialCharacter, "jacobi_sum_n needs nontrivial characters");
        num *= g(j);
        total += j;
    }
    if (chars.idx(total) == 0)
        throw Error(ErrorCode::TrivialProduct, "product of the characters is trivial");
    return num / g(total);
}

Cx binom_direct(const Characters& chars, std::int64_t a, std::int64_t b)
{
    const Field& f = chars.field();
    Cx acc = 0.0;
    for (std::uint32_t v = 0; v < f.q(); ++v) {
        const Elem x{v};
        acc += chars.chi(a, x) * chars.chi(-b, f.sub(f.one(), x));
    }
    return chars.sign(b) / f.q() * acc;
}

IdentityReport hasse_davenport_check(const Characters& chars, const GaussTable& g, std::uint32_t m,
                                     std::int64_t j, double tol)
{
    const Field& f = chars.field();
    const std::int64_t t = step_for(f, m);
    Cx lhs = 1.0;
    Cx prod_chi = 1.0;
    for (std::int64_t i = 0; i < m; ++i) {
        lhs *= g(i * t + j);
        prod_chi *= g(i * t);
    }
    const Cx rhs = -g(std::int64_t{m} * j) * chars.chi(-std::int64_t{m} * j, f.from_int(m)) * prod_chi;
    return compare(lhs, rhs, std::pow(static_cast<double>(f.q()), m / 2.0), tol);
}

Cx hd_gauss_of_dj(const Characters& chars, const GaussTable& g, std::uint32_t d, std::int64_t j)
{
    const Field& f = chars.field();
    const std::int64_t t = step_for(f, d);
    Cx num = 1.0;
    for (std::int64_t i = 0; i < d; ++i)
        num *= g(i * t + j);
    Cx den = chars.chi(-std::int64_t{d} * j, f.from_int(d));
    for (std::int64_t i = 1; i < d; ++i)
        den *= g(i * t);
    return num / den;
}

} // namespace dwork

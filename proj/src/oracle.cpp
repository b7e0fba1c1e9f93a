#include "dwork/oracle.hpp"

#include "dwork/error.hpp"
#include "dwork/greene.hpp"
#include "dwork/parallel.hpp"

#include <cmath>

namespace dwork {

namespace {

std::vector<Elem> power_table(const Field& f, std::uint32_t d)
{
    std::vector<Elem> t(f.q());
    for (std::uint32_t v = 0; v < f.q(); ++v)
        t[v] = f.pow(Elem{v}, d);
    return t;
}

// Calls visit(sum of d-th powers, product) for every tuple of `free` coordinates after a leading 1,
// split across workers by the first free coordinate. Returns the per-worker results in order.
template <class Acc, class Visit>
std::vector<Acc> sweep(const Field& f, std::uint32_t free, const std::vector<Elem>& powd, Visit visit)
{
    const std::uint32_t q = f.q();
    if (free == 0) {
        Acc acc{};
        visit(acc, f.one(), f.one());
        return {acc};
    }
    return parallel_map(q, [&](std::size_t first) {
        Acc acc{};
        std::vector<std::uint32_t> x(free, 0);
        x[0] = static_cast<std::uint32_t>(first);
        for (;;) {
            Elem s = f.one();
            Elem prod = f.one();
            for (auto v : x) {
                s = f.add(s, powd[v]);
                prod = f.mul(prod, Elem{v});
            }
            visit(acc, s, prod);
            std::int64_t i = static_cast<std::int64_t>(free) - 1;
            while (i >= 1 && x[i] == q - 1)
                x[i--] = 0;
            if (i < 1)
                break;
            ++x[i];
        }
        return acc;
    });
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p)
{
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
}

void check_legendre(std::uint64_t p, std::int64_t lam)
{
    if (p == 2 || !is_prime(p))
        throw Error(ErrorCode::NotPrime, "p must be an odd prime, got " + std::to_string(p));
    const std::uint64_t l = reduce_mod(lam, p);
    if (l == 0 || l == 1)
        throw Error(ErrorCode::BadLambda, "lambda must not be 0 or 1 mod p");
}

int euler_symbol(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0)
        return 0;
    std::uint64_t r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

} // namespace

std::uint64_t brute_projective_count(const Field& f, std::uint32_t d, Elem lam)
{
    if (d < 2)
        throw Error(ErrorCode::InvalidParams, "d must be at least 2");
    const auto powd = power_table(f, d);
    const Elem coef = f.mul(f.from_int(d), lam);
    std::uint64_t total = 0;
    // Leading coordinate at position `lead`; the product vanishes unless lead = 0.
    for (std::uint32_t lead = 0; lead < d; ++lead) {
        const std::uint32_t free = d - 1 - lead;
        const bool full = lead == 0;
        auto parts = sweep<std::uint64_t>(f, free, powd, [&](std::uint64_t& acc, Elem s, Elem prod) {
            const Elem rhs = full ? f.mul(coef, prod) : f.zero();
            if (s == rhs)
                ++acc;
        });
        for (auto c : parts)
            total += c;
    }
    return total;
}

std::vector<std::uint64_t> brute_projective_counts(const Field& f, std::uint32_t d)
{
    if (d < 2)
        throw Error(ErrorCode::InvalidParams, "d must be at least 2");
    const auto powd = power_table(f, d);
    const std::uint32_t q = f.q();
    const Elem dinv = f.from_int(d).v == 0 ? f.zero() : f.inv(f.from_int(d));

    struct Acc {
        std::uint64_t common = 0;
        std::vector<std::uint64_t> hist;
    };
    std::uint64_t common = 0;
    std::vector<std::uint64_t> hist(q, 0);
    for (std::uint32_t lead = 0; lead < d; ++lead) {
        const std::uint32_t free = d - 1 - lead;
        const bool full = lead == 0;
        auto parts = sweep<Acc>(f, free, powd, [&](Acc& acc, Elem s, Elem prod) {
            if (!full || prod.v == 0) {
                if (s.v == 0)
                    ++acc.common;
                return;
            }
            if (dinv.v == 0) {
                // p | d: the right side vanishes for every lambda
                if (s.v == 0)
                    ++acc.common;
                return;
            }
            if (acc.hist.empty())
                acc.hist.assign(q, 0);
            ++acc.hist[f.mul(s, f.mul(dinv, f.inv(prod))).v];
        });
        for (const auto& a : parts) {
            common += a.common;
            for (std::size_t i = 0; i < a.hist.size(); ++i)
                hist[i] += a.hist[i];
        }
    }
    for (auto& h : hist)
        h += common;
    return hist;
}

std::uint64_t brute_fermat_count(const Field& f, std::uint32_t d) { return brute_projective_count(f, d, f.zero()); }

std::int64_t legendre_trace(std::uint64_t p, std::int64_t lam)
{
    check_legendre(p, lam);
    const std::uint64_t l = reduce_mod(lam, p);
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < p; ++x)
        s += euler_symbol(x * ((x + p - 1) % p) % p * ((x + p - l) % p), p);
    return -s;
}

std::int64_t legendre_trace_enumerated(std::uint64_t p, std::int64_t lam)
{
    check_legendre(p, lam);
    const std::uint64_t l = reduce_mod(lam, p);
    std::int64_t points = 1; // point at infinity
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t rhs = x * ((x + p - 1) % p) % p * ((x + p - l) % p) % p;
        for (std::uint64_t y = 0; y < p; ++y)
            if (y * y % p == rhs)
                ++points;
    }
    return static_cast<std::int64_t>(p) + 1 - points;
}

IdentityReport koike_check(const Context& ctx, std::int64_t lam)
{
    const Field& f = ctx.field();
    if (f.e() != 1)
        throw Error(ErrorCode::InvalidParams, "Legendre trace comparison needs a prime field");
    const std::uint64_t p = f.p();
    const std::int64_t a = legendre_trace(p, lam);
    const std::int64_t phi = f.units() / 2;
    const Cx F = hgf(ctx, HGFParams{{phi, phi}, {0}}, f.from_int(lam));
    const Cx rhs = -ctx.sign(phi) * static_cast<double>(p) * F;
    IdentityReport r = compare(Cx(static_cast<double>(a), 0.0), rhs, 1.0, 0.01);
    r.passed = r.passed && std::llround(rhs.real()) == a;
    return r;
}

bool igusa_check(std::uint64_t p, std::int64_t lam)
{
    check_legendre(p, lam);
    const std::int64_t a = legendre_trace(p, lam);
    RationalParams params{{{1, 2}, {1, 2}}, {{1, 1}}, std::nullopt};
    const std::uint64_t series = classical_trunc_mod_p(params, lam, p);
    const std::uint64_t sign = ((p - 1) / 2) % 2 == 0 ? 1 : p - 1;
    return reduce_mod(a, p) == sign * series % p;
}

} // namespace dwork

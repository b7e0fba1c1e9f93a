#include "dwork/identities.hpp"

#include "dwork/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dwork {

namespace {

std::vector<std::int64_t> residues(const Context& ctx, const std::vector<std::int64_t>& v)
{
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (auto x : v)
        out.push_back(ctx.idx(x));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

IdentityReport prop31_check(const Context& ctx, std::int64_t a, std::int64_t b, Elem lam, double tol)
{
    const Field& f = ctx.field();
    const std::int64_t t = step_for(f, 4);
    if (a % t != 0 || b % t != 0)
        throw Error(ErrorCode::InvalidExponents, "a and b must be multiples of (q-1)/4");
    if (lam.v == 0)
        throw Error(ErrorCode::LambdaZero, "lambda must be nonzero");
    const Elem lam4 = f.pow(lam, 4);
    if (lam4 == f.one())
        throw Error(ErrorCode::LambdaFourthPowerOne, "lambda^4 = 1");

    const std::int64_t n = f.units();
    const std::int64_t l4 = f.dlog(lam4);
    Cx lhs = 0.0;
    for (std::int64_t j = 0; j < n; ++j)
        lhs += ctx.g(j + a) * ctx.g(b - j) * ctx.sign(j) * ctx.chars().root(j * l4);
    const Cx rhs = static_cast<double>(n) * ctx.g(a + b) * ctx.sign(b) * ctx.chi(-(a + b), f.sub(f.one(), lam4));
    return compare(lhs, rhs, static_cast<double>(n) * f.q(), tol);
}

void validate(const Context& ctx, const ExponentLists& ex)
{
    const Field& f = ctx.field();
    const std::int64_t t = step_for(f, ex.d);
    auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidExponents, why); };
    if (ex.a.empty() || ex.a.size() != ex.b.size())
        fail("a and b must be nonempty lists of equal length");
    for (auto v : ex.a)
        if (v % t != 0)
            fail("a entries must be multiples of t");
    for (auto v : ex.b)
        if (v % t != 0)
            fail("b entries must be multiples of t");
    const bool all_zero = std::all_of(ex.a.begin(), ex.a.end(), [&](auto v) { return ctx.idx(v) == 0; })
                          && std::all_of(ex.b.begin(), ex.b.end(), [&](auto v) { return ctx.idx(v) == 0; });
    if (all_zero)
        fail("a and b are all zero");
    for (auto ak : ex.a)
        for (auto bj : ex.b)
            if (ctx.idx(ak + bj) == 0)
                fail("a_k = -b_j for some k, j");
    auto rb = residues(ctx, ex.b);
    if (std::adjacent_find(rb.begin(), rb.end()) != rb.end())
        fail("b entries must be distinct");
}

Cx thm32_lhs(const Context& ctx, const ExponentLists& ex, Elem lam)
{
    validate(ctx, ex);
    const Field& f = ctx.field();
    if (lam.v == 0)
        throw Error(ErrorCode::LambdaZero, "lambda must be nonzero");
    const std::int64_t n = f.units();
    const std::int64_t ld = f.dlog(f.pow(lam, ex.d));
    Cx acc = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        Cx term = ctx.chars().root(j * ld);
        for (auto a : ex.a)
            term *= ctx.g(a + j);
        for (auto b : ex.b)
            term *= ctx.sign(j - b) * ctx.g(b - j);
        acc += term;
    }
    return acc / static_cast<double>(n);
}

Thm32Rhs thm32_rhs(const Context& ctx, const ExponentLists& ex, Elem lam)
{
    validate(ctx, ex);
    const Field& f = ctx.field();
    const auto a = residues(ctx, ex.a);
    const auto b = residues(ctx, ex.b);
    const std::size_t n = a.size();

    Thm32Rhs r;
    Cx G = ctx.g(b[n - 1] + a[0]);
    for (std::size_t k = 1; k < n; ++k)
        G *= ctx.g(a[k] + b[k - 1]);
    const std::int64_t m = std::accumulate(a.begin(), a.end(), std::int64_t{0})
                           + std::accumulate(b.begin(), b.end(), std::int64_t{0});
    r.coefficient = ctx.sign(m) * G * std::pow(static_cast<double>(f.q()), static_cast<double>(n - 1));
    r.params.top.push_back(ctx.idx(b[n - 1] + a[0]));
    for (std::size_t k = 0; k + 1 < n; ++k)
        r.params.top.push_back(ctx.idx(b[k] + a[0]));
    for (std::size_t k = 1; k < n; ++k)
        r.params.bottom.push_back(ctx.idx(a[0] - a[k]));

    if (lam.v == 0) {
        r.argument = f.zero();
        r.value = 0.0;
        r.out_of_scope = true;
        return r;
    }
    r.argument = f.inv(f.pow(lam, ex.d));
    r.value = r.coefficient * hgf(ctx, r.params, r.argument);
    return r;
}

IdentityReport thm32_check(const Context& ctx, const ExponentLists& ex, Elem lam, double tol)
{
    const Cx lhs = thm32_lhs(ctx, ex, lam);
    const Cx rhs = thm32_rhs(ctx, ex, lam).value;
    const double scale = std::pow(static_cast<double>(ctx.q()), 1.5 * static_cast<double>(ex.a.size()));
    return compare(lhs, rhs, scale, tol);
}

ExponentLists random_exponent_lists(const Context& ctx, std::uint32_t d, std::mt19937_64& rng, std::uint32_t max_n)
{
    const std::int64_t t = step_for(ctx.field(), d);
    if (d < 2)
        throw Error(ErrorCode::InvalidParams, "d must be at least 2");
    if (max_n < 1)
        throw Error(ErrorCode::InvalidParams, "max_n must be at least 1");
    std::uniform_int_distribution<std::uint32_t> pick_n(1, max_n);
    std::uniform_int_distribution<std::int64_t> pick_w(0, d - 1);
    for (;;) {
        ExponentLists ex{d, {}, {}};
        const std::uint32_t n = pick_n(rng);
        for (std::uint32_t i = 0; i < n; ++i)
            ex.a.push_back(pick_w(rng) * t);
        for (std::uint32_t i = 0; i < n; ++i)
            ex.b.push_back(pick_w(rng) * t);
        try {
            validate(ctx, ex);
            return ex;
        } catch (const Error&) {
        }
    }
}

} // namespace dwork

#include "dwork/greene.hpp"

#include "dwork/error.hpp"

namespace dwork {

namespace {

// m < 2^32, so products fit in 64 bits.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(std::int64_t v, std::uint64_t p)
{
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
}

std::uint64_t to_fp(const Rational& r, std::uint64_t p)
{
    if (r.den == 0)
        throw Error(ErrorCode::InvalidParams, "zero denominator");
    const std::uint64_t den = reduce(r.den, p);
    if (den == 0)
        throw Error(ErrorCode::BadDenominator,
                    "denominator " + std::to_string(r.den) + " is divisible by p=" + std::to_string(p));
    return reduce(r.num, p) * mod_pow(den, p - 2, p) % p;
}

} // namespace

void validate(const HGFParams& params)
{
    if (params.top.size() != params.bottom.size() + 1)
        throw Error(ErrorCode::InvalidParams, "top row must have one more entry than the bottom row");
}

Cx hgf(const Context& ctx, const HGFParams& params, Elem x)
{
    validate(params);
    if (x.v == 0)
        return 0.0;
    const std::uint32_t n = ctx.field().units();
    const std::uint64_t lx = ctx.field().dlog(x);
    const auto& z = ctx.chars().roots().zeta_q1;
    Cx acc = 0.0;
    for (std::uint32_t k = 0; k < n; ++k) {
        Cx term = ctx.binom(params.top[0] + k, k);
        for (std::size_t i = 0; i < params.bottom.size(); ++i)
            term *= ctx.binom(params.top[i + 1] + k, params.bottom[i] + k);
        acc += term * z[k * lx % n];
    }
    const double q = ctx.q();
    return q / (q - 1) * acc;
}

Cx hgf_2f1_alt(const Context& ctx, std::int64_t a, std::int64_t b, std::int64_t c, Elem x)
{
    if (x.v == 0)
        return 0.0;
    const Field& f = ctx.field();
    Cx acc = 0.0;
    for (std::uint32_t v = 0; v < f.q(); ++v) {
        const Elem y{v};
        acc += ctx.chi(b, y) * ctx.chi(c - b, f.sub(f.one(), y)) * ctx.chi(-a, f.sub(f.one(), f.mul(x, y)));
    }
    return ctx.sign(b + c) / f.q() * acc;
}

Cx hgf_multisum(const Context& ctx, const HGFParams& params, Elem x0)
{
    validate(params);
    const std::size_t n = params.order();
    if (n > 3)
        throw Error(ErrorCode::TooLarge, "multisum form limited to n <= 3, got n=" + std::to_string(n));
    if (x0.v == 0)
        return 0.0;
    const Field& f = ctx.field();
    const std::uint32_t q = f.q();

    // w[i][x] = A_i(x) conj(A_i) B_i(1-x)
    std::vector<std::vector<Cx>> w(n, std::vector<Cx>(q));
    double sign = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t a = params.top[i + 1];
        const std::int64_t b = params.bottom[i];
        sign *= ctx.sign(a + b);
        for (std::uint32_t v = 0; v < q; ++v)
            w[i][v] = ctx.chi(a, Elem{v}) * ctx.chi(b - a, f.sub(f.one(), Elem{v}));
    }
    std::vector<Cx> last(q);
    for (std::uint32_t v = 0; v < q; ++v)
        last[v] = ctx.chi(-params.top[0], f.sub(f.one(), Elem{v}));

    // Recurse over x_1..x_n carrying the running product x0 x_1 ... x_i.
    auto rec = [&](auto&& self, std::size_t i, Elem prod, Cx weight) -> Cx {
        if (i == n)
            return weight * last[prod.v];
        Cx acc = 0.0;
        for (std::uint32_t v = 1; v < q; ++v) {
            const Cx wv = w[i][v];
            if (wv == Cx{0.0})
                continue;
            acc += self(self, i + 1, f.mul(prod, Elem{v}), weight * wv);
        }
        return acc;
    };
    const Cx total = rec(rec, 0, x0, 1.0);
    return sign / std::pow(static_cast<double>(q), static_cast<double>(n)) * total;
}

std::uint64_t classical_trunc_mod_p(const RationalParams& params, std::int64_t lam, std::uint64_t p)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, "p=" + std::to_string(p));
    if (p >= (1ull << 32))
        throw Error(ErrorCode::TooLarge, "p must be below 2^32");
    const std::uint64_t terms = params.truncation.value_or(p);
    if (terms < 1 || terms > p)
        throw Error(ErrorCode::InvalidParams, "truncation length must lie in [1, p]");
    std::vector<std::uint64_t> a, b;
    for (const auto& r : params.top)
        a.push_back(to_fp(r, p));
    for (const auto& r : params.bottom)
        b.push_back(to_fp(r, p));
    const std::uint64_t x = reduce(lam, p);

    std::uint64_t sum = 0;
    std::uint64_t term = 1; // k-th term
    for (std::uint64_t k = 0; k < terms; ++k) {
        sum = (sum + term) % p;
        if (k + 1 == terms)
            break;
        // term_{k+1} = term_k * prod(a_i + k) * x / (prod(b_i + k) * (k + 1))
        std::uint64_t num = x;
        for (std::uint64_t ai : a)
            num = num * ((ai + k) % p) % p;
        if (num == 0)
            break; // every later term carries the same zero factor
        std::uint64_t den = (k + 1) % p;
        for (std::uint64_t bi : b)
            den = den * ((bi + k) % p) % p;
        if (den == 0)
            throw Error(ErrorCode::SingularTerm, "Pochhammer denominator vanishes mod p at k=" + std::to_string(k + 1));
        term = term * num % p * mod_pow(den, p - 2, p) % p;
    }
    return sum;
}

} // namespace dwork

#include "dwork/error.hpp"
#include "dwork/greene.hpp"
#include "support/reference.hpp"

#include <doctest.h>

#include <random>

using namespace dwork;

TEST_CASE("hypergeometric function vanishes at zero")
{
    auto ctx = Context::create(Field::build(13));
    CHECK(hgf(*ctx, {{1, 2}, {3}}, Elem{0}) == Cx{0.0});
    CHECK(hgf(*ctx, {{1, 2, 5}, {3, 4}}, Elem{0}) == Cx{0.0});
    CHECK(hgf_2f1_alt(*ctx, 1, 2, 3, Elem{0}) == Cx{0.0});
    CHECK(hgf_multisum(*ctx, {{1, 2}, {3}}, Elem{0}) == Cx{0.0});
}

TEST_CASE("three 2F1 evaluators agree over all parameters at q = 13")
{
    auto ctx = Context::create(Field::build(13));
    double worst_alt = 0.0, worst_multi = 0.0;
    for (std::int64_t a = 0; a < 12; ++a)
        for (std::int64_t b = 0; b < 12; ++b)
            for (std::int64_t c = 0; c < 12; ++c)
                for (std::uint32_t x = 0; x < 13; ++x) {
                    const HGFParams p{{a, b}, {c}};
                    const Cx h = hgf(*ctx, p, Elem{x});
                    worst_alt = std::max(worst_alt, std::abs(h - hgf_2f1_alt(*ctx, a, b, c, Elem{x})));
                    worst_multi = std::max(worst_multi, std::abs(h - hgf_multisum(*ctx, p, Elem{x})));
                }
    CHECK(worst_alt < 1e-8);
    CHECK(worst_multi < 1e-7 * 13);
}

TEST_CASE("single-sum form agrees at q = 17 and on an extension field")
{
    for (auto [p, e] : {std::pair{17u, 1u}, {5u, 2u}}) {
        auto ctx = Context::create(Field::build(p, e));
        const std::int64_t n = ctx->field().units();
        std::mt19937_64 rng(p);
        std::uniform_int_distribution<std::int64_t> pick(0, n - 1);
        for (int it = 0; it < 300; ++it) {
            const std::int64_t a = pick(rng), b = pick(rng), c = pick(rng);
            const Elem x{static_cast<std::uint32_t>(pick(rng) + 1)};
            CHECK(std::abs(hgf(*ctx, {{a, b}, {c}}, x) - hgf_2f1_alt(*ctx, a, b, c, x)) < 1e-8);
        }
    }
}

TEST_CASE("multisum form for n = 2 and n = 3")
{
    auto ctx = Context::create(Field::build(11));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(0, 9);
    for (int it = 0; it < 60; ++it) {
        const HGFParams p{{pick(rng), pick(rng), pick(rng)}, {pick(rng), pick(rng)}};
        const Elem x{static_cast<std::uint32_t>(pick(rng) + 1)};
        CHECK(std::abs(hgf(*ctx, p, x) - hgf_multisum(*ctx, p, x)) < 1e-7 * 11);
    }
    auto c7 = Context::create(Field::build(7));
    for (int it = 0; it < 20; ++it) {
        std::uniform_int_distribution<std::int64_t> pk(0, 5);
        const HGFParams p{{pk(rng), pk(rng), pk(rng), pk(rng)}, {pk(rng), pk(rng), pk(rng)}};
        const Elem x{static_cast<std::uint32_t>(pk(rng) + 1)};
        CHECK(std::abs(hgf(*c7, p, x) - hgf_multisum(*c7, p, x)) < 1e-7 * 7);
    }
    try {
        hgf_multisum(*ctx, {{1, 2, 3, 4, 5}, {1, 2, 3, 4}}, Elem{2});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    CHECK_THROWS_AS(hgf(*ctx, {{1, 2}, {3, 4}}, Elem{2}), Error);
}

TEST_CASE("permuting paired parameter rows leaves the value unchanged")
{
    auto ctx = Context::create(Field::build(13));
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> pick(0, 11);
    for (int it = 0; it < 40; ++it) {
        const std::int64_t a0 = pick(rng), a1 = pick(rng), a2 = pick(rng), a3 = pick(rng);
        const std::int64_t b1 = pick(rng), b2 = pick(rng), b3 = pick(rng);
        const Elem x{static_cast<std::uint32_t>(pick(rng) + 1)};
        const Cx v = hgf(*ctx, {{a0, a1, a2, a3}, {b1, b2, b3}}, x);
        CHECK(std::abs(v - hgf(*ctx, {{a0, a3, a1, a2}, {b3, b1, b2}}, x)) < 1e-10);
        CHECK(std::abs(v - hgf(*ctx, {{a0, a2, a3, a1}, {b2, b3, b1}}, x)) < 1e-10);
    }
}

TEST_CASE("truncated classical series mod p")
{
    const RationalParams half{{{1, 2}, {1, 2}}, {{1, 1}}, std::nullopt};
    CHECK(classical_trunc_mod_p(half, 0, 7) == 1);
    for (std::int64_t p : {5, 7, 11, 13, 17}) {
        for (std::int64_t lam = 2; lam < p; ++lam) {
            std::int64_t s = 0;
            for (std::int64_t x = 0; x < p; ++x) {
                const std::int64_t v = ref::mod(x * (x - 1) % p * (x - lam), p);
                if (v != 0)
                    s += ref::powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
            }
            const std::int64_t a = -s;
            const std::int64_t sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
            CHECK(ref::mod(a, p) == ref::mod(sign * static_cast<std::int64_t>(classical_trunc_mod_p(half, lam, p)), p));
        }
    }
    // 1F0(1 | x) truncated is sum_{k<p} x^k
    const RationalParams geo{{{1, 1}}, {}, 4};
    CHECK(classical_trunc_mod_p(geo, 2, 7) == (1 + 2 + 4 + 8) % 7);
    try {
        classical_trunc_mod_p({{{1, 7}, {1, 2}}, {{1, 1}}, std::nullopt}, 2, 7);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadDenominator);
    }
}

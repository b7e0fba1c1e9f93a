#include "dwork/context.hpp"
#include "dwork/error.hpp"
#include "support/reference.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include <unistd.h>

using namespace dwork;

namespace {

std::shared_ptr<const Context> ctx_for(std::uint32_t p, std::uint32_t e = 1, ContextOptions opts = {})
{
    return Context::create(Field::build(p, e), opts);
}

} // namespace

TEST_CASE("Gauss table basics")
{
    for (auto [p, e] : {std::pair{5u, 1u}, {13u, 1u}, {3u, 2u}, {2u, 3u}, {31u, 1u}}) {
        auto ctx = ctx_for(p, e);
        const double q = ctx->q();
        CHECK(std::abs(ctx->g(0) + 1.0) < 1e-9);
        for (std::int64_t j = 1; j < ctx->field().units(); ++j) {
            CHECK(std::abs(std::abs(ctx->g(j)) - std::sqrt(q)) < 1e-9 * std::sqrt(q));
            CHECK(std::abs(ctx->g(j) * ctx->g(-j) - ctx->chi(j, ctx->field().from_int(-1)) * q) < 1e-8 * q);
            CHECK(std::abs(ctx->g(j) - gauss_sum(ctx->chars(), j)) < 1e-9);
        }
    }
}

TEST_CASE("Gauss sums match the independent reference")
{
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        auto ctx = ctx_for(p);
        for (std::int64_t j = 0; j < p - 1; ++j)
            CHECK(std::abs(ctx->g(j) - ref::gauss(p, j)) < 1e-9);
    }
}

TEST_CASE("quadratic Gauss sum over F_5 is sqrt 5")
{
    auto ctx = ctx_for(5);
    CHECK(std::abs(ctx->g(2) - std::sqrt(5.0)) < 1e-12);
}

TEST_CASE("Jacobi sums")
{
    auto ctx = ctx_for(5);
    CHECK(std::abs(jacobi_sum2(ctx->chars(), 0, 0) - 3.0) < 1e-12);
    CHECK(std::abs(jacobi_sum2(ctx->chars(), 2, 2) + 1.0) < 1e-12);

    for (std::uint32_t p : {13u, 17u}) {
        auto c = ctx_for(p);
        const std::int64_t n = p - 1;
        for (std::int64_t a = 1; a < n; ++a)
            for (std::int64_t b = 1; b < n; ++b) {
                if ((a + b) % n == 0)
                    continue;
                const Cx direct = jacobi_sum2(c->chars(), a, b);
                CHECK(std::abs(direct - c->g(a) * c->g(b) / c->g(a + b)) < 1e-8 * p);
                const std::int64_t js[] = {a, b};
                CHECK(std::abs(direct - jacobi_sum_n(c->chars(), c->gauss(), js)) < 1e-8 * p);
            }
    }
}

TEST_CASE("three-character Jacobi sum against the double sum")
{
    auto ctx = ctx_for(7);
    const Field& f = ctx->field();
    // (1, 2, 3) has trivial product mod 6; (1, 2, 4) does not
    const std::int64_t js[] = {1, 2, 4};
    Cx direct = 0.0;
    for (std::uint32_t x = 0; x < 7; ++x)
        for (std::uint32_t y = 0; y < 7; ++y) {
            const Elem z = f.sub(f.sub(f.one(), Elem{x}), Elem{y});
            direct += ctx->chi(1, Elem{x}) * ctx->chi(2, Elem{y}) * ctx->chi(4, z);
        }
    CHECK(std::abs(direct - jacobi_sum_n(ctx->chars(), ctx->gauss(), js)) < 1e-9);

    const std::int64_t trivial_product[] = {1, 2, 3};
    CHECK_THROWS_AS(jacobi_sum_n(ctx->chars(), ctx->gauss(), trivial_product), Error);
    const std::int64_t trivial[] = {0, 2};
    try {
        jacobi_sum_n(ctx->chars(), ctx->gauss(), trivial);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TrivialCharacter);
    }
}

TEST_CASE("normalized binomial")
{
    auto ctx = ctx_for(13);
    const double q = 13;
    CHECK(std::abs(ctx->binom(0, 0) - (q - 2) / q) < 1e-12);
    for (std::int64_t a = 0; a < 12; ++a)
        for (std::int64_t b = 0; b < 12; ++b) {
            const Cx memo = ctx->binom(a, b);
            CHECK(memo == ctx->binom(a, b));
            CHECK(std::abs(memo - binom_direct(ctx->chars(), a, b)) < 1e-12);
            CHECK(std::abs(memo - ctx->sign(b) / q * jacobi_sum2(ctx->chars(), a, -b)) < 1e-12);
        }
    for (std::int64_t a = 1; a < 12; ++a)
        CHECK(std::abs(ctx->binom(a, a) - ctx->sign(a) * jacobi_sum2(ctx->chars(), a, -a) / q) < 1e-12);
}

TEST_CASE("Hasse-Davenport product relation")
{
    auto ctx = ctx_for(13);
    CHECK(hasse_davenport_check(ctx->chars(), ctx->gauss(), 1, 3).residual < 1e-12);
    CHECK(hasse_davenport_check(ctx->chars(), ctx->gauss(), 2, 1).passed);
    auto c11 = ctx_for(11);
    for (std::int64_t j = 0; j < 10; ++j)
        CHECK(hasse_davenport_check(c11->chars(), c11->gauss(), 5, j).passed);
    CHECK_THROWS_AS(hasse_davenport_check(c11->chars(), c11->gauss(), 3, 1), Error);
}

TEST_CASE("g(T^{dj}) from shifted products")
{
    auto c11 = ctx_for(11);
    CHECK(std::abs(hd_gauss_of_dj(c11->chars(), c11->gauss(), 5, 0) + 1.0) < 1e-9);
    CHECK(std::abs(hd_gauss_of_dj(c11->chars(), c11->gauss(), 5, 1) - c11->g(5)) < 1e-7 * std::sqrt(11.0));
    auto c13 = ctx_for(13);
    for (std::int64_t j = 0; j < 12; ++j)
        CHECK(std::abs(hd_gauss_of_dj(c13->chars(), c13->gauss(), 4, j) - c13->g(4 * j)) < 1e-7 * std::sqrt(13.0));
    try {
        hd_gauss_of_dj(c13->chars(), c13->gauss(), 5, 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadModulus);
    }
}

TEST_CASE("Gauss table cache round-trips bit-exactly")
{
    const auto dir = std::filesystem::temp_directory_path() / ("dwork-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    ContextOptions opts;
    opts.cache_dir = dir;
    auto first = Context::create(Field::build(3, 3), opts);
    CHECK_FALSE(first->gauss_from_cache());
    auto second = Context::create(Field::build(3, 3), opts);
    CHECK(second->gauss_from_cache());
    REQUIRE(first->gauss().values().size() == second->gauss().values().size());
    for (std::size_t i = 0; i < first->gauss().values().size(); ++i) {
        CHECK(first->gauss().values()[i].real() == second->gauss().values()[i].real());
        CHECK(first->gauss().values()[i].imag() == second->gauss().values()[i].imag());
    }
    // a different root gets its own file
    opts.zeta_root = 2;
    CHECK_FALSE(Context::create(Field::build(3, 3), opts)->gauss_from_cache());
    std::filesystem::remove_all(dir);
}

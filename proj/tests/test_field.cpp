#include "dwork/error.hpp"
#include "dwork/field.hpp"

#include <doctest.h>

#include <random>

using namespace dwork;

TEST_CASE("prime field structure")
{
    const Field f = Field::build(7);
    CHECK(f.q() == 7);
    CHECK(f.modulus().empty());
    CHECK((f.generator().v == 3 || f.generator().v == 5));
    CHECK(f.pow(f.generator(), 6) == f.one());
    for (int k = 1; k < 6; ++k)
        CHECK(f.pow(f.generator(), k) != f.one());
}

TEST_CASE("q = 11 with generator 2")
{
    const Field f = Field::build(11);
    REQUIRE(f.generator().v == 2);
    CHECK(f.dlog(f.element(9)) == 6);
    CHECK(f.dlog(f.one()) == 0);
    CHECK(f.dlog(f.generator()) == 1);
    CHECK(f.units() % 5 == 0);
    CHECK(f.units() / 5 == 2);
}

TEST_CASE("F_9 uses x^2 + 1 and the trace of x is x + x^3 = 0")
{
    const Field f = Field::build(3, 2);
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    const Elem x = f.from_digits({0, 1});
    // x^2 = -1, so x^3 = -x and x + x^3 = 0
    CHECK(f.mul(x, x) == f.from_int(-1));
    CHECK(f.add(x, f.pow(x, 3)) == f.zero());
    CHECK(f.trace(x) == 0);
    CHECK(f.trace(f.one()) == 2);
    CHECK(f.trace(f.zero()) == 0);
}

TEST_CASE("trace is the identity on prime fields")
{
    const Field f = Field::build(13);
    for (std::uint32_t v = 0; v < 13; ++v)
        CHECK(f.trace(Elem{v}) == v);
}

TEST_CASE("field invariants on extensions")
{
    for (auto [p, e] : {std::pair{2u, 3u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {2u, 4u}}) {
        CAPTURE(p);
        CAPTURE(e);
        const Field f = Field::build(p, e);
        CHECK(is_irreducible(f.modulus(), p));
        std::vector<int> seen(f.units(), 0);
        for (std::uint32_t v = 1; v < f.q(); ++v) {
            const Elem x{v};
            CHECK(f.exp(f.dlog(x)) == x);
            ++seen[f.dlog(x)];
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

        std::mt19937_64 rng(p * 100 + e);
        std::uniform_int_distribution<std::uint32_t> pick(1, f.q() - 1);
        for (int it = 0; it < 200; ++it) {
            const Elem x{pick(rng)}, y{pick(rng)};
            CHECK((f.dlog(f.mul(x, y))) == (f.dlog(x) + f.dlog(y)) % f.units());
            const std::uint32_t a = pick(rng) % p, b = pick(rng) % p;
            const Elem lhs = f.add(f.mul(f.from_int(a), x), f.mul(f.from_int(b), y));
            CHECK(f.trace(lhs) == (a * f.trace(x) + b * f.trace(y)) % p);
            CHECK(f.trace(f.pow(x, p)) == f.trace(x));
            CHECK(f.mul(x, f.inv(x)) == f.one());
            CHECK(f.sub(f.add(x, y), y) == x);
        }
    }
}

TEST_CASE("explicit modulus and generator rank")
{
    const Field f = Field::build(3, 2, FieldOptions{std::vector<std::uint32_t>{2, 2, 1}, 0});
    CHECK(f.modulus() == std::vector<std::uint32_t>{2, 2, 1});
    const Field g1 = Field::build(11, 1, FieldOptions{std::nullopt, 1});
    CHECK(g1.generator().v == 6);
    CHECK(g1.generator_rank() == 1);
}

TEST_CASE("field construction errors")
{
    auto code = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("no error");
        return ErrorCode::OutOfRange;
    };
    CHECK(code([] { Field::build(9); }) == ErrorCode::NotPrime);
    CHECK(code([] { Field::build(1); }) == ErrorCode::NotPrime);
    CHECK(code([] { Field::build(3, 2, FieldOptions{std::vector<std::uint32_t>{2, 0, 1}, 0}); })
          == ErrorCode::ReducibleModulus);
    CHECK(code([] { Field::build(3, 2, FieldOptions{std::vector<std::uint32_t>{1, 0, 2}, 0}); })
          == ErrorCode::BadModulusPolynomial);
    CHECK(code([] { Field::build(7, 1, FieldOptions{std::nullopt, 2}); }) == ErrorCode::NoGeneratorFound);
    const Field f = Field::build(5);
    CHECK(code([&] { f.dlog(f.zero()); }) == ErrorCode::LogOfZero);
    CHECK(code([&] { f.element(5); }) == ErrorCode::ElementOutOfRange);
}

#include "dwork/cosets.hpp"
#include "dwork/error.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace dwork;

TEST_CASE("d = 5 coset classes")
{
    const auto classes = coset_classes(5);
    std::map<Tuple, std::uint64_t> sizes;
    for (const auto& c : classes)
        sizes[c.rep] = c.size;
    const std::map<Tuple, std::uint64_t> expected{{{0, 0, 0, 0, 0}, 1},  {{0, 1, 2, 3, 4}, 24},
                                                  {{0, 0, 0, 1, 4}, 20}, {{0, 0, 0, 2, 3}, 20},
                                                  {{0, 0, 1, 1, 3}, 30}, {{0, 0, 1, 2, 2}, 30}};
    CHECK(sizes == expected);
    CHECK(enumerate_cosets(5).size() == 125);
    CHECK(coset_count(5) == 125);
}

TEST_CASE("d = 4 cosets")
{
    CHECK(enumerate_cosets(4).size() == 16);
    CHECK(coset_classes(4).size() == 3);
    CHECK(canonical_rep({0, 0, 2, 2}, 4) == canonical_rep({2, 2, 0, 0}, 4));
}

TEST_CASE("d = 2 has a single coset")
{
    const auto cosets = enumerate_cosets(2);
    REQUIRE(cosets.size() == 1);
    CHECK(cosets[0].w == Tuple{0, 0});
    CHECK(cosets[0].coset_size == 2);
}

TEST_CASE("coset accounting")
{
    for (std::uint32_t d = 2; d <= 8; ++d) {
        CAPTURE(d);
        const auto classes = coset_classes(d);
        const auto cosets = enumerate_cosets(d);
        std::uint64_t total = 0, zero_free = 0;
        for (const auto& c : classes) {
            total += c.size;
            zero_free += c.size * c.zero_free;
        }
        CHECK(total == coset_count(d));
        CHECK(cosets.size() == coset_count(d));

        std::set<Tuple> distinct;
        std::map<std::size_t, std::uint64_t> per_class;
        for (const auto& c : cosets) {
            CHECK(canonical_rep(c.w, d) == c.w);
            CHECK(c.coset_size == d);
            distinct.insert(c.w);
            ++per_class[c.class_index];
            CHECK(zero_free_shifts(c.w, d).size() == classes[c.class_index].zero_free);
        }
        CHECK(distinct.size() == cosets.size());
        for (std::size_t i = 0; i < classes.size(); ++i)
            CHECK(per_class[i] == classes[i].size);

        const auto wss = enumerate_Wss(d);
        CHECK(wss.size() == zero_free);
        std::uint64_t weighted = 0;
        for (const auto& m : wss_multisets(d))
            weighted += m.tuples;
        CHECK(weighted == zero_free);

        // independent count of zero-free tuples with sum 0 mod d
        std::uint64_t brute = 0;
        Tuple w(d, 1);
        for (;;) {
            std::uint64_t s = 0;
            for (auto v : w)
                s += v;
            if (s % d == 0)
                ++brute;
            std::int64_t i = d - 1;
            while (i >= 0 && w[i] == d - 1)
                w[i--] = 1;
            if (i < 0)
                break;
            ++w[i];
        }
        CHECK(brute == zero_free);
    }
}

TEST_CASE("zero-free elements of a coset")
{
    CHECK(zero_free_shifts({0, 0, 0, 2, 3}, 5) == std::vector<Tuple>{{1, 1, 1, 3, 4}, {4, 4, 4, 1, 2}});
    CHECK(zero_free_shifts({0, 0, 0, 1, 2, 3}, 6) == std::vector<Tuple>{{1, 1, 1, 2, 3, 4}, {2, 2, 2, 3, 4, 5}});
}

TEST_CASE("class enumeration beyond full enumeration")
{
    for (std::uint32_t d = 9; d <= 12; ++d) {
        std::uint64_t total = 0;
        for (const auto& c : coset_classes(d))
            total += c.size;
        CHECK(total == coset_count(d));
    }
    CHECK_THROWS_AS(coset_classes(13), Error);
    CHECK_THROWS_AS(enumerate_cosets(9), Error);
    CHECK_THROWS_AS(coset_classes(1), Error);
}

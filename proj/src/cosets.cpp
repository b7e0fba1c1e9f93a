#include "dwork/cosets.hpp"

#include "dwork/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace dwork {

namespace {

void check_degree(std::uint32_t d, std::uint32_t max)
{
    if (d < 2 || d > max)
        throw Error(ErrorCode::OutOfRange, "d=" + std::to_string(d) + " outside [2, " + std::to_string(max) + "]");
}

template <class F>
void for_each_multiset(std::uint32_t d, F&& visit)
{
    Counts c(d, 0);
    auto rec = [&](auto&& self, std::uint32_t v, std::uint32_t left, std::uint64_t sum) -> void {
        if (v + 1 == d) {
            c[v] = left;
            if ((sum + std::uint64_t{left} * v) % d == 0)
                visit(c);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            c[v] = k;
            self(self, v + 1, left - k, sum + std::uint64_t{k} * v);
        }
    };
    rec(rec, 0, d, 0);
}

std::uint64_t orderings(const Counts& c)
{
    std::uint64_t n = 0;
    for (auto k : c)
        n += k;
    std::uint64_t r = factorial(static_cast<std::uint32_t>(n));
    for (auto k : c)
        r /= factorial(k);
    return r;
}

Counts rotate(const Counts& c, std::uint32_t k)
{
    const auto d = static_cast<std::uint32_t>(c.size());
    Counts r(d);
    for (std::uint32_t v = 0; v < d; ++v)
        r[(v + k) % d] = c[v];
    return r;
}

Tuple sorted_tuple(const Counts& c)
{
    Tuple t;
    for (std::uint32_t v = 0; v < c.size(); ++v)
        t.insert(t.end(), c[v], v);
    return t;
}

bool better(const Tuple& x, const Tuple& y)
{
    const auto zx = std::count(x.begin(), x.end(), 0u);
    const auto zy = std::count(y.begin(), y.end(), 0u);
    if (zx != zy)
        return zx > zy;
    return x < y;
}

Counts counts_of(const Tuple& w, std::uint32_t d)
{
    Counts c(d, 0);
    for (auto v : w)
        ++c[v];
    return c;
}

// Class key: best sorted tuple over all shifts of the multiset.
Tuple class_key(const Counts& c)
{
    const auto d = static_cast<std::uint32_t>(c.size());
    Tuple best = sorted_tuple(c);
    for (std::uint32_t k = 1; k < d; ++k) {
        Tuple t = sorted_tuple(rotate(c, k));
        if (better(t, best))
            best = std::move(t);
    }
    return best;
}

} // namespace

std::uint64_t factorial(std::uint32_t n)
{
    if (n > 20)
        throw Error(ErrorCode::OutOfRange, "factorial overflow");
    std::uint64_t r = 1;
    for (std::uint32_t i = 2; i <= n; ++i)
        r *= i;
    return r;
}

std::uint64_t coset_count(std::uint32_t d)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i + 2 < d; ++i)
        r *= d;
    return r;
}

std::vector<CosetClass> coset_classes(std::uint32_t d)
{
    check_degree(d, kMaxClassDegree);
    std::map<Tuple, std::uint64_t> tuples_by_class;
    for_each_multiset(d, [&](const Counts& c) { tuples_by_class[class_key(c)] += orderings(c); });

    std::vector<CosetClass> out;
    for (const auto& [rep, tuples] : tuples_by_class) {
        CosetClass cls;
        cls.rep = rep;
        cls.size = tuples / d;
        cls.distinct = static_cast<std::uint32_t>(std::set<std::uint32_t>(rep.begin(), rep.end()).size());
        cls.zero_free = d - cls.distinct;
        out.push_back(std::move(cls));
    }
    return out;
}

Tuple canonical_rep(const Tuple& w, std::uint32_t d)
{
    Tuple best = w;
    for (std::uint32_t k = 1; k < d; ++k) {
        Tuple t = w;
        for (auto& v : t)
            v = (v + k) % d;
        if (better(t, best))
            best = std::move(t);
    }
    return best;
}

std::vector<CosetRep> enumerate_cosets(std::uint32_t d)
{
    check_degree(d, kMaxEnumerateDegree);
    const auto classes = coset_classes(d);
    std::map<Tuple, std::size_t> class_of;
    for (std::size_t i = 0; i < classes.size(); ++i)
        class_of[classes[i].rep] = i;

    std::vector<std::vector<CosetRep>> grouped(classes.size());
    Tuple w(d, 0);
    // Walk W in lexicographic order: free first d-1 entries, last one fixed by the sum.
    for (;;) {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i + 1 < d; ++i)
            s += w[i];
        w[d - 1] = static_cast<std::uint32_t>((d - s % d) % d);
        if (canonical_rep(w, d) == w) {
            const std::size_t ci = class_of.at(class_key(counts_of(w, d)));
            grouped[ci].push_back(CosetRep{w, classes[ci].size, d, ci});
        }
        std::int64_t i = static_cast<std::int64_t>(d) - 2;
        while (i >= 0 && w[i] == d - 1)
            w[i--] = 0;
        if (i < 0)
            break;
        ++w[i];
    }
    std::vector<CosetRep> out;
    for (auto& g : grouped)
        out.insert(out.end(), g.begin(), g.end());
    return out;
}

std::vector<Tuple> enumerate_Wss(std::uint32_t d)
{
    check_degree(d, kMaxEnumerateDegree);
    std::vector<Tuple> out;
    Tuple w(d, 1);
    for (;;) {
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i + 1 < d; ++i)
            s += w[i];
        w[d - 1] = static_cast<std::uint32_t>((d - s % d) % d);
        if (w[d - 1] != 0)
            out.push_back(w);
        std::int64_t i = static_cast<std::int64_t>(d) - 2;
        while (i >= 0 && w[i] == d - 1)
            w[i--] = 1;
        if (i < 0)
            break;
        ++w[i];
    }
    return out;
}

std::vector<Tuple> zero_free_shifts(const Tuple& w, std::uint32_t d)
{
    std::vector<Tuple> out;
    for (std::uint32_t k = 0; k < d; ++k) {
        Tuple t = w;
        for (auto& v : t)
            v = (v + k) % d;
        if (std::find(t.begin(), t.end(), 0u) == t.end())
            out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeightedCounts> wss_multisets(std::uint32_t d)
{
    check_degree(d, kMaxClassDegree);
    std::vector<WeightedCounts> out;
    for_each_multiset(d, [&](const Counts& c) {
        if (c[0] == 0)
            out.push_back({c, orderings(c)});
    });
    return out;
}

} // namespace dwork

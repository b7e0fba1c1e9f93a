#pragma once

#include "dwork/context.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dwork {

/// Top row A_0..A_n and bottom row B_1..B_n of an (n+1)F_n.
struct HGFParams {
    std::vector<std::int64_t> top;
    std::vector<std::int64_t> bottom;

    std::size_t order() const noexcept { return bottom.size(); }
    friend bool operator==(const HGFParams&, const HGFParams&) = default;
};

void validate(const HGFParams& params);

/// Sum over characters of binomial products (Greene's definition).
Cx hgf(const Context& ctx, const HGFParams& params, Elem x);

/// 2F1(A, B; C | x) as a single sum over y.
Cx hgf_2f1_alt(const Context& ctx, std::int64_t a, std::int64_t b, std::int64_t c, Elem x);

/// n-fold sum form, n <= 3 (cost q^n). Returns 0 at x0 = 0.
Cx hgf_multisum(const Context& ctx, const HGFParams& params, Elem x0);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

struct RationalParams {
    std::vector<Rational> top;
    std::vector<Rational> bottom;
    /// Number of terms kept, k = 0..truncation-1; defaults to p.
    std::optional<std::uint64_t> truncation;
};

/// Truncated classical series sum_k prod (a_i)_k / (prod (b_i)_k k!) lam^k in F_p.
std::uint64_t classical_trunc_mod_p(const RationalParams& params, std::int64_t lam, std::uint64_t p);

} // namespace dwork

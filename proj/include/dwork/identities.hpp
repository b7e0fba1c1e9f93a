#pragma once

#include "dwork/greene.hpp"
#include "dwork/report.hpp"

#include <random>

namespace dwork {

/// d = 4 shifted Gauss-product sum against its closed form; a, b multiples of (q-1)/4.
IdentityReport prop31_check(const Context& ctx, std::int64_t a, std::int64_t b, Elem lam, double tol = 1e-6);

/// Exponent lists for the shifted Gauss-product identity; entries are multiples of t = (q-1)/d.
struct ExponentLists {
    std::uint32_t d = 0;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
};

/// Throws InvalidExponents unless: equal nonzero lengths, multiples of t, not all zero,
/// a_k != -b_j for every k, j, and the b_i pairwise distinct (all mod q-1).
void validate(const Context& ctx, const ExponentLists& ex);

/// (1/(q-1)) sum_j prod g(T^{a_i+j}) prod T^{j-b_i}(-1) g(T^{b_i-j}) T^j(lam^d)
Cx thm32_lhs(const Context& ctx, const ExponentLists& ex, Elem lam);

struct Thm32Rhs {
    Cx coefficient;       // T^{sum a + sum b}(-1) G q^{n-1}
    HGFParams params;     // built from the ascending residues of a and b
    Elem argument;        // lam^{-d}
    Cx value;
    bool out_of_scope = false; // lam = 0: value forced to 0
};

/// Closed form of thm32_lhs as a single nF_{n-1} at lam^{-d}.
Thm32Rhs thm32_rhs(const Context& ctx, const ExponentLists& ex, Elem lam);

/// Residual scale q^{3n/2}.
IdentityReport thm32_check(const Context& ctx, const ExponentLists& ex, Elem lam, double tol = 1e-6);

/// Uniform valid instance with 1 <= n <= max_n, by rejection.
ExponentLists random_exponent_lists(const Context& ctx, std::uint32_t d, std::mt19937_64& rng,
                                    std::uint32_t max_n = 3);

} // namespace dwork

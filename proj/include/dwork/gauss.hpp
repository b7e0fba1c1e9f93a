#pragma once

#include "dwork/characters.hpp"
#include "dwork/report.hpp"

#include <span>
#include <vector>

namespace dwork {

/// g(T^j) for every j in [0, q-1).
class GaussTable {
public:
    static GaussTable compute(const Characters& chars);
    explicit GaussTable(std::vector<Cx> values) : values_(std::move(values)) {}

    Cx operator()(std::int64_t j) const noexcept;
    const std::vector<Cx>& values() const noexcept { return values_; }

private:
    std::vector<Cx> values_;
};

/// Direct O(q) evaluation of sum_x T^j(x) theta(x).
Cx gauss_sum(const Characters& chars, std::int64_t j);

/// Direct O(q) evaluation of J(T^a, T^b) = sum_x T^a(x) T^b(1-x).
Cx jacobi_sum2(const Characters& chars, std::int64_t a, std::int64_t b);

/// g(chi_1)...g(chi_n) / g(chi_1...chi_n); every character and their product must be nontrivial.
Cx jacobi_sum_n(const Characters& chars, const GaussTable& g, std::span<const std::int64_t> js);

/// Normalized Jacobi sum binom(T^a, T^b) = T^b(-1)/q sum_x T^a(x) conj(T^b)(1-x), by direct summation.
Cx binom_direct(const Characters& chars, std::int64_t a, std::int64_t b);

/// Product relation for chi = T^{(q-1)/m}, psi = T^j; residual scale q^{m/2}.
IdentityReport hasse_davenport_check(const Characters& chars, const GaussTable& g, std::uint32_t m,
                                     std::int64_t j, double tol = 1e-7);

/// g(T^{dj}) rebuilt from the shifted products g(T^{it+j}), t = (q-1)/d.
Cx hd_gauss_of_dj(const Characters& chars, const GaussTable& g, std::uint32_t d, std::int64_t j);

/// (q-1)/d, or BadModulus when d does not divide q-1.
std::uint32_t step_for(const Field& field, std::uint32_t d);

} // namespace dwork

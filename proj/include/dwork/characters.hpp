#pragma once

#include "dwork/field.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace dwork {

using Cx = std::complex<double>;

/// Exponent j of the multiplicative character T^j, reduced mod q-1.
using CharIdx = std::uint32_t;

struct RootTables {
    std::vector<Cx> zeta_p;  // k -> exp(2 pi i r k / p)
    std::vector<Cx> zeta_q1; // k -> exp(2 pi i k / (q-1))
};

/// T is the character sending the field generator to exp(2 pi i / (q-1)).
/// theta(x) = zeta^tr(x) where zeta = exp(2 pi i r / p) for the configured r.
class Characters {
public:
    explicit Characters(std::shared_ptr<const Field> field, std::uint32_t zeta_root = 1);

    const Field& field() const noexcept { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
    const RootTables& roots() const noexcept { return roots_; }
    std::uint32_t zeta_root() const noexcept { return zeta_root_; }

    CharIdx idx(std::int64_t j) const noexcept;
    /// T^j(x), with T^j(0) = 0 for every j including the trivial character.
    Cx chi(std::int64_t j, Elem x) const noexcept;
    /// zeta_{q-1}^k
    Cx root(std::int64_t k) const noexcept { return roots_.zeta_q1[idx(k)]; }
    /// T^j(-1) = (-1)^j when q is odd.
    double sign(std::int64_t j) const noexcept;
    Cx theta(Elem x) const noexcept { return roots_.zeta_p[field_->trace(x)]; }

private:
    std::shared_ptr<const Field> field_;
    std::uint32_t zeta_root_;
    RootTables roots_;
};

} // namespace dwork

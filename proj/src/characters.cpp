#include "dwork/characters.hpp"

#include "dwork/error.hpp"

#include <numbers>
#include <numeric>

namespace dwork {

namespace {

std::vector<Cx> unit_roots(std::uint32_t n, std::uint32_t step)
{
    std::vector<Cx> out(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint64_t r = std::uint64_t{k} * step % n;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
        out[k] = std::polar(1.0, angle);
    }
    return out;
}

} // namespace

Characters::Characters(std::shared_ptr<const Field> field, std::uint32_t zeta_root)
    : field_(std::move(field)), zeta_root_(zeta_root)
{
    const std::uint32_t p = field_->p();
    if (zeta_root_ % p == 0)
        throw Error(ErrorCode::InvalidParams, "zeta root exponent must be prime to p");
    zeta_root_ %= p;
    roots_.zeta_p = unit_roots(p, zeta_root_);
    roots_.zeta_q1 = unit_roots(field_->units(), 1);
}

CharIdx Characters::idx(std::int64_t j) const noexcept
{
    const std::int64_t n = field_->units();
    return static_cast<CharIdx>(((j % n) + n) % n);
}

Cx Characters::chi(std::int64_t j, Elem x) const noexcept
{
    if (x.v == 0)
        return {0.0, 0.0};
    const std::uint64_t k = std::uint64_t{idx(j)} * field_->dlog(x) % field_->units();
    return roots_.zeta_q1[k];
}

double Characters::sign(std::int64_t j) const noexcept
{
    if (field_->p() == 2)
        return 1.0;
    return (idx(j) % 2 == 0) ? 1.0 : -1.0;
}

} // namespace dwork

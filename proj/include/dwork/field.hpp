#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dwork {

/// Canonical index of a field element: base-p digits of the polynomial residue.
struct Elem {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldOptions {
    /// Coefficients c_0..c_e of a monic degree-e polynomial; lowest degree first.
    std::optional<std::vector<std::uint32_t>> modulus;
    /// Which primitive element to use, counted in index order (0 = smallest).
    std::uint32_t generator_rank = 0;
};

class Field {
public:
    static Field build(std::uint64_t p, std::uint32_t e = 1, const FieldOptions& opts = {});

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Order of the unit group, q - 1.
    std::uint32_t units() const noexcept { return q_ - 1; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return gen_; }
    std::uint32_t generator_rank() const noexcept { return gen_rank_; }

    Elem zero() const noexcept { return {0}; }
    Elem one() const noexcept { return {1}; }
    /// Index in [0, q); throws ElementOutOfRange otherwise.
    Elem element(std::uint64_t index) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t n) const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t k) const;

    /// generator^k, k taken mod q-1.
    Elem exp(std::int64_t k) const noexcept;
    /// Exponent in [0, q-2]; throws LogOfZero for 0.
    std::uint32_t dlog(Elem x) const;
    /// Absolute trace to F_p, as an integer in [0, p).
    std::uint32_t trace(Elem x) const noexcept { return trace_[x.v]; }

    std::vector<std::uint32_t> digits(Elem x) const;
    Elem from_digits(const std::vector<std::uint32_t>& digits) const;

    /// Short identity string used for cache keys and reports.
    std::string describe() const;

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t gen_rank_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem gen_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> trace_;
    std::vector<std::uint32_t> pow_p_; // p^i for digit arithmetic
};

bool is_prime(std::uint64_t n) noexcept;

/// True iff the monic polynomial (coefficients low to high) is irreducible over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

} // namespace dwork

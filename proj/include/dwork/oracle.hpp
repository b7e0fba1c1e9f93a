#pragma once

#include "dwork/context.hpp"
#include "dwork/report.hpp"

#include <cstdint>
#include <vector>

namespace dwork {

/// Projective points of x_1^d + ... + x_d^d = d lam x_1...x_d, by enumeration with the
/// first nonzero coordinate set to 1. Exact integer arithmetic.
std::uint64_t brute_projective_count(const Field& f, std::uint32_t d, Elem lam);

/// The same count for every lam at once, indexed by element index; one pass over q^{d-1} tuples.
std::vector<std::uint64_t> brute_projective_counts(const Field& f, std::uint32_t d);

/// Projective points of x_1^d + ... + x_d^d = 0.
std::uint64_t brute_fermat_count(const Field& f, std::uint32_t d);

/// a(p) = -sum_x phi(x(x-1)(x-lam)) for y^2 = x(x-1)(x-lam) over F_p; lam not 0 or 1 mod p.
std::int64_t legendre_trace(std::uint64_t p, std::int64_t lam);

/// a(p) = p + 1 - #E(F_p), counting affine solutions plus the point at infinity.
std::int64_t legendre_trace_enumerated(std::uint64_t p, std::int64_t lam);

/// Trace against -phi(-1) p 2F1(phi, phi; eps | lam) on a prime field; passes on rounded equality.
IdentityReport koike_check(const Context& ctx, std::int64_t lam);

/// a(p) == (-1)^{(p-1)/2} 2F1(1/2, 1/2; 1 | lam) truncated, mod p.
bool igusa_check(std::uint64_t p, std::int64_t lam);

} // namespace dwork

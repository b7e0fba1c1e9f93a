#pragma once

// Self-contained reference computations for prime fields. Deliberately shares no code with the
// library: plain modular integers and freshly computed complex exponentials.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace ref {

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p)
{
    std::int64_t r = 1;
    b = mod(b, p);
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Affine solutions of sum x_i^d = d lam prod x_i over F_p, origin included; projective = (N-1)/(p-1).
inline std::int64_t projective_count(int d, std::int64_t p, std::int64_t lam)
{
    std::vector<std::int64_t> x(d, 0);
    std::int64_t affine = 0;
    for (;;) {
        std::int64_t s = 0, prod = 1;
        for (auto v : x) {
            s = (s + powmod(v, d, p)) % p;
            prod = prod * v % p;
        }
        if (mod(s - mod(d * lam, p) * prod, p) == 0)
            ++affine;
        int i = d - 1;
        while (i >= 0 && x[i] == p - 1)
            x[i--] = 0;
        if (i < 0)
            break;
        ++x[i];
    }
    return (affine - 1) / (p - 1);
}

/// Smallest primitive root mod p.
inline std::int64_t primitive_root(std::int64_t p)
{
    for (std::int64_t g = 1; g < p; ++g) {
        std::int64_t x = 1, ord = 0;
        do {
            x = x * g % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1)
            return g;
    }
    return 0;
}

inline std::int64_t dlog(std::int64_t x, std::int64_t g, std::int64_t p)
{
    std::int64_t y = 1;
    for (std::int64_t k = 0; k < p - 1; ++k, y = y * g % p)
        if (y == mod(x, p))
            return k;
    return -1;
}

/// g(T^j) over F_p with T(g) = exp(2 pi i/(p-1)) and theta(x) = exp(2 pi i x/p).
inline std::complex<double> gauss(std::int64_t p, std::int64_t j)
{
    const std::int64_t g = primitive_root(p);
    std::complex<double> s = 0.0;
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < p - 1; ++k, x = x * g % p) {
        const double a = 2 * std::numbers::pi * static_cast<double>(mod(j * k, p - 1)) / (p - 1);
        const double b = 2 * std::numbers::pi * static_cast<double>(x) / p;
        s += std::exp(std::complex<double>(0.0, a + b));
    }
    return s;
}

} // namespace ref

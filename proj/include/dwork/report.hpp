#pragma once

#include <complex>

namespace dwork {

/// Outcome of comparing two evaluations of the same quantity.
struct IdentityReport {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double residual = 0.0;
    double scale = 1.0; // natural magnitude of the compared quantity
    double tol = 0.0;
    bool passed = false;
};

inline IdentityReport compare(std::complex<double> lhs, std::complex<double> rhs, double scale, double tol)
{
    IdentityReport r{lhs, rhs, std::abs(lhs - rhs), scale, tol, false};
    r.passed = r.residual < tol * scale;
    return r;
}

} // namespace dwork

#pragma once

#include <complex>

namespace foxh {

/// Principal-branch log Gamma(z): continuous in the plane cut along the
/// nonpositive real axis, real for z > 0. Lanczos (g = 607/128, 15 terms) for
/// Re z >= 1/2, reflection with a branch-continuous log sin(pi z) below.
/// Throws Error(PoleError) within 1e-14 of a nonpositive integer.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace foxh

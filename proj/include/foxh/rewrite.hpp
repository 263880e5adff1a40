#pragma once

#include "foxh/number.hpp"
#include "foxh/params.hpp"

namespace foxh {

/// original(t) = scalar * t^{t_power} * H_params(t^{arg_power}).
struct WeightedH {
  FoxHParams params;
  Number scalar = 1;
  Number arg_power = 1;
  Number t_power = 0;
};

/// H(1/t) as an H-function of t: indices (n,m,q,p), upper (1-beta_j, B_j),
/// lower (1-alpha_j, A_j).
FoxHParams reciprocal(const FoxHParams& h);

/// H_h(t) = omega * H_new(t^omega) with every slope multiplied by omega.
/// Throws NonpositiveOmega.
WeightedH power_arg(const FoxHParams& h, const Number& omega);

/// t^w H_h(t) = H_new(t): shifts (alpha_j + w A_j), (beta_j + w B_j).
FoxHParams power_weight(const FoxHParams& h, const Number& w);

/// int_0^inf e^{-s tau} tau^{omega-1} H_h(tau^lambda) dtau = s^{-omega} H_new(s^{-lambda}).
/// Prepends (1-omega, lambda) to the upper row. Throws PreconditionFailed.
FoxHParams laplace_extend(const FoxHParams& h, const Number& omega, const Number& lambda);

/// int_0^t tau^{w1-1} (t-tau)^{l1-1} H_h(zeta tau^{w2} (t-tau)^{l2}) dtau
///   = t^{w1+l1-1} H_new(zeta t^{w2+l2}).
/// Prepends (1-w1, w2), (1-l1, l2) to the upper row and appends
/// (1-w1-l1, w2+l2) to the lower row. Throws PreconditionFailed.
FoxHParams euler_extend(const FoxHParams& h, const Number& omega1, const Number& lambda1, const Number& omega2,
                        const Number& lambda2);

// Direct: int tau^{w-1} H1(xi tau^l) H2(zeta tau) dtau = zeta^{-w} H_new(xi zeta^{-l}).
// Reciprocal: int tau^{w-1} H1(xi tau^{-l}) H2(zeta tau) dtau = zeta^{-w} H_new(xi zeta^{l}).
enum class ProductVariant { Direct, Reciprocal };

/// Admissible omega for product_extend. Direct:
/// (l lo1 + lo2, l hi1 + hi2); reciprocal: (lo2 - l hi1, hi2 - l lo1).
MellinStrip omega_range(const FoxHParams& h1, const FoxHParams& h2, const Number& lambda,
                        ProductVariant variant = ProductVariant::Direct);

/// Throws PreconditionFailed or OmegaOutOfRange.
FoxHParams product_extend(const FoxHParams& h1, const FoxHParams& h2, const Number& omega, const Number& lambda,
                          ProductVariant variant = ProductVariant::Direct);

}  // namespace foxh

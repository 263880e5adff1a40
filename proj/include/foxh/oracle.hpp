#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "foxh/construct.hpp"
#include "foxh/kernels.hpp"
#include "foxh/params.hpp"

namespace foxh {

// Where a nonnegative function may be nonzero: (0,inf), (0,1) or (1,inf).
enum class Support { Positive, Unit, AboveUnit };

/// A nonnegative function on (0,inf) given through log g(e^u) as a function
/// of u = ln t; -inf marks zeros.
struct Pointwise {
  std::function<double(double)> log_value;
  Support support = Support::Positive;

  double operator()(double t) const;
};

Pointwise kernel_pointwise(const Kernel& k);

struct Quadrature {
  double value = 0.0;
  double abs_err = 0.0;
};

/// (g1 v g2)(t) = int_0^inf g1(t/tau) g2(tau) dtau/tau, integrated in
/// u = ln tau with limits tightened by the supports and breakpoints at the
/// support edges u = 0 and u = ln t.
Quadrature convolve_pair(const Pointwise& g1, const Pointwise& g2, double t, double tol = 1e-12);

/// Pointwise view of g1 v g2 (each call runs the quadrature).
Pointwise convolve(const Pointwise& g1, const Pointwise& g2, double tol = 1e-12);

/// f(t) for a spec, folded left over the kernels in block order.
/// At most 3 kernels (TooManyKernels); the index rule is not required.
Quadrature eval_f(const ConvolutionSpec& spec, double t, double tol = 1e-11);

/// int_0^inf g(t) t^{s-1} dt via t = e^u, truncating each side where the
/// integrand has fallen below tol times its peak (|u| <= 700).
/// Throws OutOfStrip when a declared strip is given and excludes Re(s).
std::complex<double> mellin_numeric(const std::function<double(double)>& g, std::complex<double> s,
                                    double tol = 1e-10, std::optional<MellinStrip> strip = std::nullopt);

/// As mellin_numeric with g given as u -> g(e^u); allows |u| <= 5000.
std::complex<double> mellin_numeric_log(const std::function<double(double)>& g_of_u, std::complex<double> s,
                                        double tol = 1e-10, std::optional<MellinStrip> strip = std::nullopt);

/// Definite integral of a smooth or endpoint-singular function; a and b may
/// be infinite.
Quadrature integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// sum_k z^k/k! prod Gamma(a_i + A_i k) / prod Gamma(b_j + B_j k), summed
/// until terms fall below 1e-16 of the partial sum. Intended for |z| <= 10.
double wright_series(const std::vector<std::pair<double, double>>& upper,
                     const std::vector<std::pair<double, double>>& lower, double z);

}  // namespace foxh

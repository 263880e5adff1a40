#pragma once

#include <complex>
#include <string_view>

#include "foxh/number.hpp"
#include "foxh/params.hpp"

namespace foxh {

// Elementary stretched-exponential / power-law kernels:
//   Varphi(a,b)   t^{b/a} e^{-t^{1/a}} / a
//   Phi(a,b,c)    t^{b/a} (1 - t^{1/a})^{c-b-1} / (a Gamma(c-b))  on (0,1)
//   Psi(a,b,c)    Gamma(b+c) t^{b/a} (1 + t^{1/a})^{-b-c} / a
//   Eta(a,b,c)    t^{(1-c)/a} (t^{1/a} - 1)^{c-b-1} / (a Gamma(c-b))  on (1,inf)
enum class KernelKind { Varphi, Phi, Psi, Eta };

std::string_view to_string(KernelKind kind);

struct Kernel {
  KernelKind kind = KernelKind::Varphi;
  Number a = 1;
  Number b = 0;
  Number c = 0;  // unused for Varphi

  static Kernel varphi(Number a, Number b) { return {KernelKind::Varphi, a, b, 0}; }
  static Kernel phi(Number a, Number b, Number c) { return {KernelKind::Phi, a, b, c}; }
  static Kernel psi(Number a, Number b, Number c) { return {KernelKind::Psi, a, b, c}; }
  static Kernel eta(Number a, Number b, Number c) { return {KernelKind::Eta, a, b, c}; }

  bool operator==(const Kernel&) const = default;
};

/// Parameter constraints of the kernel family; empty report when valid.
ValidationReport check_kernel(const Kernel& k);

/// log k(t) evaluated from log t; -inf where the kernel vanishes.
/// Does not re-check the kernel constraints.
double kernel_log_eval(const Kernel& k, double log_t);

/// Throws DomainError for t <= 0 and InvalidKernel for bad parameters.
double kernel_eval(const Kernel& k, double t);

/// Exact Mellin transform as a Gamma ratio. Throws OutOfStrip.
std::complex<double> kernel_mellin(const Kernel& k, std::complex<double> s);

MellinStrip kernel_strip(const Kernel& k);

}  // namespace foxh

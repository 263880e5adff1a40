#pragma once

#include <vector>

#include "foxh/kernels.hpp"
#include "foxh/params.hpp"

namespace foxh {

/// f = Upsilon ∨ Phi ∨ Psi ∨ Lambda: Mellin convolution of the listed kernels.
/// Each list holds kernels of one family; list lengths are (n1, n2, n3, n4).
struct ConvolutionSpec {
  std::vector<Kernel> varphi;  // (a_j, b_j)
  std::vector<Kernel> phi;     // (a'_j, c_j, d_j)
  std::vector<Kernel> psi;     // (a''_j, o_j, r_j)
  std::vector<Kernel> eta;     // (a'''_j, v_j, w_j)

  std::size_t kernel_count() const { return varphi.size() + phi.size() + psi.size() + eta.size(); }
  /// Kernels in block order varphi, phi, psi, eta.
  std::vector<Kernel> kernels() const;
  bool operator==(const ConvolutionSpec&) const = default;
};

/// Checks every kernel's family constraints (and that it sits in the right list).
ValidationReport check_spec(const ConvolutionSpec& spec);

struct EpReport {
  bool ok = false;
  Number chi_prime;
  MellinStrip strip;
  std::vector<Violation> violations;
  PoleCheckMode pole_check_mode = PoleCheckMode::Exact;
};

/// Index/parameter mapping to H^{m,n}_{p,q}. Throws SpecInvalid when a kernel
/// constraint fails and IndexRule when n1 = n3 = 0.
FoxHParams build_foxh(const ConvolutionSpec& spec);

/// Existence-and-positivity certificate: kernel constraints, index rule,
/// chi' = sum a_j + 2 sum a''_j, strip (-xi, xi'), and pole separation.
EpReport ep_report(const ConvolutionSpec& spec);

/// Product of the kernels' exact Mellin transforms at s.
std::complex<double> spec_mellin(const ConvolutionSpec& spec, std::complex<double> s);

}  // namespace foxh

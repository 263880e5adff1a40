#pragma once

#include <optional>
#include <vector>

#include "foxh/kernels.hpp"
#include "foxh/params.hpp"

namespace foxh {

/// pPsi_q[(a_i, A_i); (b_j, B_j) | z] = sum_k z^k/k! prod Gamma(a_i + A_i k) / prod Gamma(b_j + B_j k)
/// = H^{1,p}_{p,q+1}[-z | (1-a_i, A_i); (0,1), (1-b_j, B_j)].
struct WrightParams {
  std::vector<GammaPair> upper;  // (a_i, A_i)
  std::vector<GammaPair> lower;  // (b_j, B_j)
  Number mu;                     // sum B_j - sum A_i; the series is entire when mu > -1

  bool operator==(const WrightParams&) const = default;
};

/// E(betas; alphas | t) = H^{q,1}_{p,q}[t | (1,1), (alpha_j,1); (beta_j,1)].
struct MacRobertParams {
  std::vector<Number> betas;   // length q
  std::vector<Number> alphas;  // length p - 1

  bool operator==(const MacRobertParams&) const = default;
};

/// G^{m,n}_{p,q}[x | alphas; betas] with G(t^{1/lambda}) = lambda H(t),
/// H having every slope equal to lambda.
struct MeijerParams {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Number> alphas;
  std::vector<Number> betas;
  Number lambda = 1;

  bool operator==(const MeijerParams&) const = default;
};

std::optional<WrightParams> as_wright(const FoxHParams& h);
FoxHParams to_foxh(const WrightParams& w);

/// Direct power series for pPsi_q at z; needs mu > -1. Loses relative
/// accuracy through cancellation once |z| is large. Throws NoConvergence.
double wright_series(const WrightParams& w, double z);

/// Builds {varphi:[(1,0)], eta: eta_list}, certifies it and returns the Wright
/// view of the constructed H, whose series is positive at -t for t > 0.
/// Throws EpFailed.
WrightParams positive_wright(const std::vector<Kernel>& eta_list);

std::optional<MacRobertParams> as_macrobert(const FoxHParams& h);
FoxHParams to_foxh(const MacRobertParams& e);

std::optional<MeijerParams> as_meijer(const FoxHParams& h);
FoxHParams to_foxh(const MeijerParams& g);

/// Shifts every Meijer alpha and beta by w (= +/- omega), i.e. t^w G(t), via
/// power_weight(h, w / lambda) on the underlying H. Throws NotMeijerPattern.
MeijerParams meijer_shift(const FoxHParams& h, const Number& w);

}  // namespace foxh

#include "foxh/special.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "foxh/construct.hpp"
#include "foxh/error.hpp"
#include "foxh/rewrite.hpp"

namespace foxh {

std::optional<WrightParams> as_wright(const FoxHParams& h) {
  if (!validate_params(h).ok()) return std::nullopt;
  if (h.m != 1 || h.n != h.p || h.q < 1) return std::nullopt;
  if (!(h.lower[0] == GammaPair{Number(0), Number(1)})) return std::nullopt;
  WrightParams w;
  for (const auto& g : h.upper) {
    w.upper.push_back({Number(1) - g.shift, g.slope});
    w.mu -= g.slope;
  }
  for (std::size_t j = 1; j < h.q; ++j) {
    w.lower.push_back({Number(1) - h.lower[j].shift, h.lower[j].slope});
    w.mu += h.lower[j].slope;
  }
  return w;
}

double wright_series(const WrightParams& w, double z) {
  if (!(w.mu > Number(-1))) throw Error(ErrorCode::PreconditionFailed, "series diverges unless mu > -1");
  if (z == 0.0) {
    long double v = 1.0L;
    for (const auto& g : w.upper) v *= std::tgamma(static_cast<long double>(g.shift.value()));
    for (const auto& g : w.lower) v /= std::tgamma(static_cast<long double>(g.shift.value()));
    return static_cast<double>(v);
  }
  const long double log_z = std::log(std::abs(static_cast<long double>(z)));
  long double sum = 0.0L, largest = 0.0L;
  int below = 0;
  for (int k = 0; k < 20000; ++k) {
    long double log_term = k * log_z - std::lgamma(static_cast<long double>(k) + 1.0L);
    int sign = (z < 0.0 && k % 2 == 1) ? -1 : 1;
    bool zero = false;
    for (const auto& g : w.upper) {
      const double x = g.shift.value() + g.slope.value() * k;
      if (x <= 0.0 && x == std::floor(x)) throw Error(ErrorCode::PreconditionFailed, "upper Gamma pole at term " + std::to_string(k));
      int s = 1;
      log_term += boost::math::lgamma(static_cast<long double>(x), &s);
      sign *= s;
    }
    for (const auto& g : w.lower) {
      const double x = g.shift.value() + g.slope.value() * k;
      if (x <= 0.0 && x == std::floor(x)) {
        zero = true;
        break;
      }
      int s = 1;
      log_term -= boost::math::lgamma(static_cast<long double>(x), &s);
      sign *= s;
    }
    if (zero) continue;
    const long double term = sign * std::exp(log_term);
    sum += term;
    largest = std::max(largest, std::abs(term));
    // Stop after a run of terms that no longer move the sum and are past the peak.
    below = std::abs(term) <= 1e-21L * std::max(largest, std::abs(sum)) && std::abs(term) < largest ? below + 1 : 0;
    if (below >= 3) return static_cast<double>(sum);
  }
  throw Error(ErrorCode::NoConvergence, "Wright series did not converge in 20000 terms");
}

FoxHParams to_foxh(const WrightParams& w) {
  FoxHParams h;
  h.m = 1;
  h.n = h.p = w.upper.size();
  h.q = w.lower.size() + 1;
  for (const auto& g : w.upper) h.upper.push_back({Number(1) - g.shift, g.slope});
  h.lower.push_back({Number(0), Number(1)});
  for (const auto& g : w.lower) h.lower.push_back({Number(1) - g.shift, g.slope});
  return h;
}

WrightParams positive_wright(const std::vector<Kernel>& eta_list) {
  ConvolutionSpec spec;
  spec.varphi = {Kernel::varphi(1, 0)};
  spec.eta = eta_list;
  const EpReport rep = ep_report(spec);
  if (!rep.ok) throw Error(ErrorCode::EpFailed, "e.p. conditions fail: " + rep.violations.front().message);
  return *as_wright(build_foxh(spec));
}

std::optional<MacRobertParams> as_macrobert(const FoxHParams& h) {
  if (!validate_params(h).ok()) return std::nullopt;
  if (h.m != h.q || h.n != 1) return std::nullopt;
  for (const auto& g : h.upper)
    if (g.slope != Number(1)) return std::nullopt;
  for (const auto& g : h.lower)
    if (g.slope != Number(1)) return std::nullopt;
  if (h.upper[0].shift != Number(1)) return std::nullopt;
  MacRobertParams e;
  for (const auto& g : h.lower) e.betas.push_back(g.shift);
  for (std::size_t j = 1; j < h.p; ++j) e.alphas.push_back(h.upper[j].shift);
  return e;
}

FoxHParams to_foxh(const MacRobertParams& e) {
  FoxHParams h;
  h.m = h.q = e.betas.size();
  h.n = 1;
  h.p = e.alphas.size() + 1;
  h.upper.push_back({Number(1), Number(1)});
  for (const auto& a : e.alphas) h.upper.push_back({a, Number(1)});
  for (const auto& b : e.betas) h.lower.push_back({b, Number(1)});
  return h;
}

std::optional<MeijerParams> as_meijer(const FoxHParams& h) {
  if (!validate_params(h).ok() || (h.p == 0 && h.q == 0)) return std::nullopt;
  const Number lambda = h.q > 0 ? h.lower[0].slope : h.upper[0].slope;
  for (const auto& g : h.upper)
    if (g.slope != lambda) return std::nullopt;
  for (const auto& g : h.lower)
    if (g.slope != lambda) return std::nullopt;
  MeijerParams g;
  g.m = h.m;
  g.n = h.n;
  g.lambda = lambda;
  for (const auto& u : h.upper) g.alphas.push_back(u.shift);
  for (const auto& l : h.lower) g.betas.push_back(l.shift);
  return g;
}

FoxHParams to_foxh(const MeijerParams& g) {
  FoxHParams h;
  h.m = g.m;
  h.n = g.n;
  h.p = g.alphas.size();
  h.q = g.betas.size();
  for (const auto& a : g.alphas) h.upper.push_back({a, g.lambda});
  for (const auto& b : g.betas) h.lower.push_back({b, g.lambda});
  return h;
}

MeijerParams meijer_shift(const FoxHParams& h, const Number& w) {
  const auto g = as_meijer(h);
  if (!g) throw Error(ErrorCode::NotMeijerPattern, "slopes do not share a common lambda");
  return *as_meijer(power_weight(h, w / g->lambda));
}

}  // namespace foxh

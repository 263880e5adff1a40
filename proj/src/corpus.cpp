#include "foxh/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "foxh/error.hpp"
#include "foxh/oracle.hpp"

namespace foxh {

namespace {

// Uniform [0, 1) from the top 53 bits; std distributions are not portable.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

Number rounded(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return Number::parse(buf);
}

Number a_type(std::mt19937_64& rng) { return rounded(std::exp(uniform(rng, std::log(0.25), std::log(4.0)))); }

Number shift_type(std::mt19937_64& rng) { return rounded(uniform(rng, 0.0, 3.0)); }

// r and v must be strictly positive; a draw that rounds to 0 is repeated.
Number positive_shift(std::mt19937_64& rng) {
  while (true) {
    const Number x = shift_type(rng);
    if (x > Number(0)) return x;
  }
}

Kernel draw(std::mt19937_64& rng, KernelKind kind) {
  const Number a = a_type(rng);
  switch (kind) {
    case KernelKind::Varphi:
      return Kernel::varphi(a, shift_type(rng));
    case KernelKind::Phi: {
      const Number c = shift_type(rng);
      return Kernel::phi(a, c, c + Number(1) + rounded(uniform(rng, 0.0, 2.0)));
    }
    case KernelKind::Psi: {
      const Number o = shift_type(rng);
      return Kernel::psi(a, o, positive_shift(rng));
    }
    case KernelKind::Eta: {
      const Number v = positive_shift(rng);
      return Kernel::eta(a, v, v + Number(1) + rounded(uniform(rng, 0.0, 2.0)));
    }
  }
  return Kernel::varphi(a, 0);
}

}  // namespace

ConvolutionSpec random_spec(std::mt19937_64& rng, std::size_t max_kernels) {
  if (max_kernels < 1) throw Error(ErrorCode::InvalidOptions, "max_kernels must be at least 1");
  while (true) {
    const std::size_t total = 1 + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(max_kernels));
    std::size_t counts[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < total; ++i) ++counts[std::min<std::size_t>(3, uniform01(rng) * 4.0)];
    if (counts[0] + counts[2] == 0) continue;
    ConvolutionSpec spec;
    for (std::size_t i = 0; i < counts[0]; ++i) spec.varphi.push_back(draw(rng, KernelKind::Varphi));
    for (std::size_t i = 0; i < counts[1]; ++i) spec.phi.push_back(draw(rng, KernelKind::Phi));
    for (std::size_t i = 0; i < counts[2]; ++i) spec.psi.push_back(draw(rng, KernelKind::Psi));
    for (std::size_t i = 0; i < counts[3]; ++i) spec.eta.push_back(draw(rng, KernelKind::Eta));
    return spec;
  }
}

std::vector<ConvolutionSpec> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t max_kernels) {
  std::mt19937_64 rng(seed);
  std::vector<ConvolutionSpec> out;
  while (out.size() < count) {
    ConvolutionSpec spec = random_spec(rng, max_kernels);
    if (ep_report(spec).ok) out.push_back(std::move(spec));
  }
  return out;
}

std::vector<double> standard_grid() { return make_grid(1e-2, 1e2, 25, true); }

std::vector<double> strip_points(const MellinStrip& strip, std::size_t k) {
  std::vector<double> xs;
  const double lo = strip.lo.value(), hi = strip.hi.value();
  for (std::size_t i = 1; i <= k; ++i) {
    const double f = static_cast<double>(i);
    if (std::isfinite(lo) && std::isfinite(hi))
      xs.push_back(lo + (hi - lo) * f / static_cast<double>(k + 1));
    else if (std::isfinite(lo))
      xs.push_back(lo + 0.5 * f);
    else
      xs.push_back(hi - 0.5 * f);
  }
  return xs;
}

VerifyReport verify_spec(const ConvolutionSpec& spec, const VerifyOptions& opts) {
  const FoxHParams h = build_foxh(spec);
  const HEvaluator ev(h, opts.eval);
  const std::vector<GridPoint> pts = eval_h_grid(h, opts.grid, opts.eval);

  VerifyReport r;
  r.points = pts.size();
  r.oracle_used = spec.kernel_count() <= 3;
  r.min_value = std::numeric_limits<double>::infinity();
  r.positivity_ok = true;
  std::vector<double> oracle(pts.size(), 0.0);
  if (r.oracle_used) {
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) oracle[i] = eval_f(spec, pts[i].t, opts.oracle_tol).value;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].result) {
      ++r.failed_points;
      r.positivity_ok = false;
      continue;
    }
    const double v = pts[i].result->value;
    r.min_value = std::min(r.min_value, v);
    if (!(v > -1e-6 * std::max(1.0, std::abs(v)))) r.positivity_ok = false;
    if (r.oracle_used) {
      const double d = std::abs(v - oracle[i]);
      r.max_abs_diff = std::max(r.max_abs_diff, d);
      r.max_rel_diff = std::max(r.max_rel_diff, d / std::max(std::abs(oracle[i]), 1e-300));
    }
  }

  const MellinStrip strip = strip_bounds(h);
  for (double x : strip_points(strip, opts.mellin_points)) {
    const std::complex<double> s(x, 0.0);
    const std::complex<double> num =
        mellin_numeric_log([&](double u) { return ev.eval_log(u).value; }, s, opts.mellin_tol, strip);
    const std::complex<double> exact = xi_value(h, s);
    r.mellin_roundtrip_max_rel_err = std::max(r.mellin_roundtrip_max_rel_err, std::abs(num - exact) / std::abs(exact));
  }
  return r;
}

Json verify_to_json(const VerifyReport& r) {
  Json j;
  j["points"] = r.points;
  j["failed_points"] = r.failed_points;
  j["oracle_used"] = r.oracle_used;
  if (r.oracle_used) {
    j["max_abs_diff"] = r.max_abs_diff;
    j["max_rel_diff"] = r.max_rel_diff;
  } else {
    j["max_abs_diff"] = nullptr;
    j["max_rel_diff"] = nullptr;
  }
  j["min_value"] = r.min_value;
  j["positivity_ok"] = r.positivity_ok;
  j["mellin_roundtrip_max_rel_err"] = r.mellin_roundtrip_max_rel_err;
  return j;
}

}  // namespace foxh

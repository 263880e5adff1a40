#include "foxh/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "foxh/error.hpp"

namespace foxh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The quadrature objects precompute node tables; one set per thread.
boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule;
  return rule;
}
boost::math::quadrature::exp_sinh<double>& exp_sinh_rule() {
  thread_local boost::math::quadrature::exp_sinh<double> rule;
  return rule;
}
boost::math::quadrature::sinh_sinh<double>& sinh_sinh_rule() {
  thread_local boost::math::quadrature::sinh_sinh<double> rule;
  return rule;
}

double safe_exp(double v) { return std::isnan(v) ? 0.0 : std::exp(v); }

bool in_support(Support s, double u) {
  switch (s) {
    case Support::Positive: return true;
    case Support::Unit: return u < 0.0;
    case Support::AboveUnit: return u > 0.0;
  }
  return true;
}

Support support_of(KernelKind kind) {
  switch (kind) {
    case KernelKind::Phi: return Support::Unit;
    case KernelKind::Eta: return Support::AboveUnit;
    default: return Support::Positive;
  }
}

Support convolved_support(Support a, Support b) {
  if (a == Support::Unit && b == Support::Unit) return Support::Unit;
  if (a == Support::AboveUnit && b == Support::AboveUnit) return Support::AboveUnit;
  return Support::Positive;
}

// log|Gamma(x)| and its sign, for real x off the poles.
long double log_abs_gamma(long double x, int& sign) {
  sign = (x > 0 || static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
  return std::lgamma(x);
}

bool gamma_pole(double x) { return x <= 0.0 && x == std::round(x); }

}  // namespace

double Pointwise::operator()(double t) const {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "t = " + std::to_string(t) + " <= 0");
  const double u = std::log(t);
  if (!in_support(support, u)) return 0.0;
  return safe_exp(log_value(u));
}

Pointwise kernel_pointwise(const Kernel& k) {
  if (auto rep = check_kernel(k); !rep.ok()) throw Error(ErrorCode::InvalidKernel, rep.violations.front().message);
  return Pointwise{[k](double u) { return kernel_log_eval(k, u); }, support_of(k.kind)};
}

Quadrature integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (std::isnan(a) || std::isnan(b)) throw Error(ErrorCode::DomainError, "integration limit is NaN");
  if (a == b) return {};
  if (a > b) {
    Quadrature q = integrate(f, b, a, tol);
    q.value = -q.value;
    return q;
  }
  auto g = [&](double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : 0.0;
  };
  Quadrature q;
  double l1 = 0.0;
  try {
    if (std::isfinite(a) && std::isfinite(b))
      q.value = tanh_sinh_rule().integrate(g, a, b, tol, &q.abs_err, &l1);
    else if (std::isfinite(a) || std::isfinite(b))
      q.value = exp_sinh_rule().integrate(g, a, b, tol, &q.abs_err, &l1);
    else
      q.value = sinh_sinh_rule().integrate(g, tol, &q.abs_err, &l1);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::NoConvergence, std::string("quadrature failed: ") + e.what());
  }
  if (!std::isfinite(q.value)) throw Error(ErrorCode::NoConvergence, "quadrature returned a non-finite value");
  return q;
}

namespace {

// Convolution at t = e^x.
Quadrature convolve_log(const Pointwise& g1, const Pointwise& g2, double x, double tol) {
  double lo = -kInf, hi = kInf;
  if (g2.support == Support::Unit) hi = std::min(hi, 0.0);
  if (g2.support == Support::AboveUnit) lo = std::max(lo, 0.0);
  if (g1.support == Support::Unit) lo = std::max(lo, x);
  if (g1.support == Support::AboveUnit) hi = std::min(hi, x);
  if (!(lo < hi)) return {};

  std::vector<double> cuts{lo};
  for (double b : {std::min(0.0, x), std::max(0.0, x)})
    if (lo < b && b < hi && b != cuts.back()) cuts.push_back(b);
  cuts.push_back(hi);

  auto integrand = [&](double u) { return safe_exp(g1.log_value(x - u) + g2.log_value(u)); };
  Quadrature total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Quadrature piece = integrate(integrand, cuts[i], cuts[i + 1], tol);
    total.value += piece.value;
    total.abs_err += piece.abs_err;
  }
  return total;
}

}  // namespace

Quadrature convolve_pair(const Pointwise& g1, const Pointwise& g2, double t, double tol) {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "t = " + std::to_string(t) + " <= 0");
  return convolve_log(g1, g2, std::log(t), tol);
}

Pointwise convolve(const Pointwise& g1, const Pointwise& g2, double tol) {
  return Pointwise{[g1, g2, tol](double u) {
                     const double v = convolve_log(g1, g2, u, tol).value;
                     return v > 0.0 ? std::log(v) : -kInf;
                   },
                   convolved_support(g1.support, g2.support)};
}

Quadrature eval_f(const ConvolutionSpec& spec, double t, double tol) {
  if (auto rep = check_spec(spec); !rep.ok()) throw Error(ErrorCode::SpecInvalid, rep.violations.front().message);
  const std::vector<Kernel> ks = spec.kernels();
  if (ks.empty()) throw Error(ErrorCode::SpecInvalid, "spec has no kernels");
  if (ks.size() > 3) throw Error(ErrorCode::TooManyKernels, "eval_f supports at most 3 kernels");
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "t = " + std::to_string(t) + " <= 0");
  if (ks.size() == 1) return {kernel_pointwise(ks[0])(t), 0.0};
  Pointwise acc = kernel_pointwise(ks[0]);
  for (std::size_t i = 1; i + 1 < ks.size(); ++i) acc = convolve(acc, kernel_pointwise(ks[i]), 0.1 * tol);
  return convolve_pair(acc, kernel_pointwise(ks.back()), t, tol);
}

namespace {

std::complex<double> mellin_core(const std::function<double(double)>& g_of_u, std::complex<double> s, double tol,
                                 const std::optional<MellinStrip>& strip, double max_u) {
  if (strip && !strip->contains(s.real()))
    throw Error(ErrorCode::OutOfStrip, "Re(s) = " + std::to_string(s.real()) + " outside " + strip->to_string());
  auto value = [&](double u) {
    const double v = g_of_u(u);
    return std::isfinite(v) ? v : 0.0;
  };
  auto magnitude = [&](double u) { return std::abs(value(u)) * std::exp(u * s.real()); };

  // Step outward until two successive samples fall below tol * peak.
  double peak = magnitude(0.0);
  auto edge = [&](double dir) {
    double u = 0.0, step = 0.5;
    int quiet = 0;
    while (true) {
      u += dir * step;
      if (std::abs(u) > max_u)
        throw Error(ErrorCode::NoConvergence, "Mellin integrand has not decayed by |ln t| = " + std::to_string(max_u));
      const double m = magnitude(u);
      peak = std::max(peak, m);
      quiet = m <= tol * peak ? quiet + 1 : 0;
      if (quiet >= 2) return u;
      step = std::min(step * 1.5, 4.0 + 0.05 * std::abs(u));
    }
  };
  const double u_hi = edge(1.0), u_lo = edge(-1.0);

  auto integrand = [&](double u) { return value(u) * std::exp(s * u); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double err = 0.0;
  std::complex<double> left = GK::integrate(integrand, u_lo, 0.0, 15, 0.1 * tol, &err);
  std::complex<double> right = GK::integrate(integrand, 0.0, u_hi, 15, 0.1 * tol, &err);
  return left + right;
}

}  // namespace

std::complex<double> mellin_numeric(const std::function<double(double)>& g, std::complex<double> s, double tol,
                                    std::optional<MellinStrip> strip) {
  return mellin_core([&](double u) { return g(std::exp(u)); }, s, tol, strip, 700.0);
}

std::complex<double> mellin_numeric_log(const std::function<double(double)>& g_of_u, std::complex<double> s,
                                        double tol, std::optional<MellinStrip> strip) {
  return mellin_core(g_of_u, s, tol, strip, 5000.0);
}

double wright_series(const std::vector<std::pair<double, double>>& upper,
                     const std::vector<std::pair<double, double>>& lower, double z) {
  if (z == 0.0) {
    // Only the k = 0 term survives.
    long double term = 1.0L;
    for (auto [a, A] : upper) term *= std::tgamma(static_cast<long double>(a));
    for (auto [b, B] : lower) term /= gamma_pole(b) ? kInf : std::tgamma(static_cast<long double>(b));
    return static_cast<double>(term);
  }
  const long double log_z = std::log(std::abs(static_cast<long double>(z)));
  long double sum = 0.0L, prev = kInf;
  int small = 0;
  for (int k = 0; k < 5000; ++k) {
    long double log_term = k * log_z - std::lgamma(static_cast<long double>(k) + 1.0L);
    int sign = (z < 0 && k % 2 == 1) ? -1 : 1;
    bool vanish = false;
    for (auto [a, A] : upper) {
      const double x = a + A * k;
      if (gamma_pole(x)) throw Error(ErrorCode::DomainError, "Wright series hits a Gamma pole");
      int sg;
      log_term += log_abs_gamma(x, sg);
      sign *= sg;
    }
    for (auto [b, B] : lower) {
      const double x = b + B * k;
      if (gamma_pole(x)) {
        vanish = true;
        break;
      }
      int sg;
      log_term -= log_abs_gamma(x, sg);
      sign *= sg;
    }
    const long double term = vanish ? 0.0L : sign * std::exp(log_term);
    sum += term;
    const long double mag = std::abs(term);
    small = (mag <= 1e-16L * std::abs(sum) && mag <= prev) ? small + 1 : 0;
    if (small >= 3) return static_cast<double>(sum);
    if (!vanish) prev = mag;
  }
  throw Error(ErrorCode::NoConvergence, "Wright series did not converge in 5000 terms");
}

}  // namespace foxh

#include "foxh/kernels.hpp"

#include <cmath>
#include <limits>

#include "foxh/error.hpp"
#include "foxh/log_gamma.hpp"

namespace foxh {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(1 + e^u) without overflow.
double log1p_exp(double u) { return u > 30.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }

// log(e^u - 1) for u > 0.
double log_expm1(double u) { return u > 30.0 ? u + std::log1p(-std::exp(-u)) : std::log(std::expm1(u)); }

// e * log(x) with the convention 0 * log(0) = 0.
double power_term(double e, double log_x) { return e == 0.0 ? 0.0 : e * log_x; }

}  // namespace

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Varphi: return "varphi";
    case KernelKind::Phi: return "phi";
    case KernelKind::Psi: return "psi";
    case KernelKind::Eta: return "eta";
  }
  return "?";
}

ValidationReport check_kernel(const Kernel& k) {
  ValidationReport r;
  const std::string name(to_string(k.kind));
  auto need = [&](bool cond, const std::string& rule) {
    if (!cond) r.violations.push_back({name + ": " + rule, name + " kernel violates " + rule});
  };
  need(k.a > Number(0), "a > 0");
  switch (k.kind) {
    case KernelKind::Varphi:
      need(k.b >= Number(0), "b >= 0");
      break;
    case KernelKind::Phi:
      need(k.b >= Number(0), "b >= 0");
      need(k.c >= k.b + Number(1), "c >= b + 1");
      break;
    case KernelKind::Psi:
      need(k.b >= Number(0), "b >= 0");
      need(k.c > Number(0), "c > 0");
      break;
    case KernelKind::Eta:
      need(k.b > Number(0), "b > 0");
      need(k.c >= k.b + Number(1), "c >= b + 1");
      break;
  }
  return r;
}

double kernel_log_eval(const Kernel& k, double log_t) {
  const double a = k.a.value(), b = k.b.value(), c = k.c.value();
  const double u = log_t / a;  // log t^{1/a}
  const double log_a = std::log(a);
  switch (k.kind) {
    case KernelKind::Varphi:
      return (b / a) * log_t - std::exp(u) - log_a;
    case KernelKind::Phi:
      if (log_t >= 0.0) return kNegInf;
      return (b / a) * log_t + power_term(c - b - 1.0, std::log(-std::expm1(u))) - log_a - std::lgamma(c - b);
    case KernelKind::Psi:
      return std::lgamma(b + c) + (b / a) * log_t - (b + c) * log1p_exp(u) - log_a;
    case KernelKind::Eta:
      if (log_t <= 0.0) return kNegInf;
      return ((1.0 - c) / a) * log_t + power_term(c - b - 1.0, log_expm1(u)) - log_a - std::lgamma(c - b);
  }
  return kNegInf;
}

double kernel_eval(const Kernel& k, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::DomainError, "kernel evaluated at t = " + std::to_string(t) + " <= 0");
  if (auto rep = check_kernel(k); !rep.ok()) throw Error(ErrorCode::InvalidKernel, rep.violations.front().message);
  return std::exp(kernel_log_eval(k, std::log(t)));
}

MellinStrip kernel_strip(const Kernel& k) {
  MellinStrip s;
  switch (k.kind) {
    case KernelKind::Varphi:
    case KernelKind::Phi:
      s.lo = Extended(-(k.b / k.a));
      break;
    case KernelKind::Psi:
      s.lo = Extended(-(k.b / k.a));
      s.hi = Extended(k.c / k.a);
      break;
    case KernelKind::Eta:
      s.hi = Extended(k.b / k.a);
      break;
  }
  return s;
}

std::complex<double> kernel_mellin(const Kernel& k, std::complex<double> s) {
  if (!kernel_strip(k).contains(s.real()))
    throw Error(ErrorCode::OutOfStrip, "Re(s) = " + std::to_string(s.real()) + " outside " +
                                           kernel_strip(k).to_string() + " for " + std::string(to_string(k.kind)));
  const double a = k.a.value(), b = k.b.value(), c = k.c.value();
  const std::complex<double> as = a * s;
  std::complex<double> log_value;
  switch (k.kind) {
    case KernelKind::Varphi:
      log_value = log_gamma(as + b);
      break;
    case KernelKind::Phi:
      log_value = log_gamma(as + b) - log_gamma(as + c);
      break;
    case KernelKind::Psi:
      log_value = log_gamma(as + b) + log_gamma(c - as);
      break;
    case KernelKind::Eta:
      log_value = log_gamma(b - as) - log_gamma(c - as);
      break;
  }
  return std::exp(log_value);
}

}  // namespace foxh

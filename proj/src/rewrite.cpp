#include "foxh/rewrite.hpp"

#include "foxh/error.hpp"

namespace foxh {

namespace {

void require_valid(const FoxHParams& h, const char* what) {
  if (auto rep = validate_params(h); !rep.ok())
    throw Error(ErrorCode::PreconditionFailed,
                std::string(what) + ": invalid parameters (" + rep.violations.front().message + ")");
}

void require(bool ok, const std::string& rule) {
  if (!ok) throw Error(ErrorCode::PreconditionFailed, "precondition fails: " + rule);
}

// x + y * r where r is the (possibly +inf) minimum beta/B.
bool gate(const Number& x, const Number& y, const Extended& r) {
  if (!r.finite()) return y > Number(0) || x > Number(0);
  return x + y * r.number() > Number(0);
}

Extended scaled(const Extended& e, const Number& k) {  // k > 0
  return e.finite() ? Extended(e.number() * k) : e;
}

Extended sum(const Extended& a, const Extended& b) {
  if (a.finite() && b.finite()) return Extended(a.number() + b.number());
  return a.finite() ? b : a;
}

}  // namespace

FoxHParams reciprocal(const FoxHParams& h) {
  require_valid(h, "reciprocal");
  FoxHParams r;
  r.m = h.n;
  r.n = h.m;
  r.p = h.q;
  r.q = h.p;
  for (const auto& g : h.lower) r.upper.push_back({Number(1) - g.shift, g.slope});
  for (const auto& g : h.upper) r.lower.push_back({Number(1) - g.shift, g.slope});
  return r;
}

WeightedH power_arg(const FoxHParams& h, const Number& omega) {
  if (!(omega > Number(0))) throw Error(ErrorCode::NonpositiveOmega, "omega = " + omega.to_string() + " is not positive");
  WeightedH out;
  out.params = h;
  for (auto& g : out.params.upper) g.slope = g.slope * omega;
  for (auto& g : out.params.lower) g.slope = g.slope * omega;
  out.scalar = omega;
  out.arg_power = omega;
  return out;
}

FoxHParams power_weight(const FoxHParams& h, const Number& w) {
  FoxHParams out = h;
  for (auto& g : out.upper) g.shift = g.shift + w * g.slope;
  for (auto& g : out.lower) g.shift = g.shift + w * g.slope;
  return out;
}

FoxHParams laplace_extend(const FoxHParams& h, const Number& omega, const Number& lambda) {
  require_valid(h, "laplace_extend");
  require(h.m > 0 && h.n > 0, "m n > 0");
  require(chi_of(h) > Number(0), "chi > 0");
  require(lambda > Number(0), "lambda > 0");
  require(gate(omega, lambda, min_lower_ratio(h)), "omega + lambda min(beta/B) > 0");
  FoxHParams out = h;
  out.n += 1;
  out.p += 1;
  out.upper.insert(out.upper.begin(), GammaPair{Number(1) - omega, lambda});
  return out;
}

FoxHParams euler_extend(const FoxHParams& h, const Number& omega1, const Number& lambda1, const Number& omega2,
                        const Number& lambda2) {
  require_valid(h, "euler_extend");
  require(h.m > 0 && h.n > 0, "m n > 0");
  require(chi_of(h) > Number(0), "chi > 0");
  require(omega2 >= Number(0) && lambda2 >= Number(0), "omega2, lambda2 >= 0");
  require(omega2 > Number(0) && lambda2 > Number(0), "A > 0 for the new upper pairs (omega2, lambda2 > 0)");
  const Extended r = min_lower_ratio(h);
  require(gate(omega1, omega2, r), "omega1 + omega2 min(beta/B) > 0");
  require(gate(omega1, lambda2, r), "omega1 + lambda2 min(beta/B) > 0");
  require(gate(lambda1, lambda2, r), "lambda1 + lambda2 min(beta/B) > 0");
  FoxHParams out = h;
  out.n += 2;
  out.p += 2;
  out.q += 1;
  out.upper.insert(out.upper.begin(), {GammaPair{Number(1) - omega1, omega2}, GammaPair{Number(1) - lambda1, lambda2}});
  out.lower.push_back({Number(1) - omega1 - lambda1, omega2 + lambda2});
  return out;
}

MellinStrip omega_range(const FoxHParams& h1, const FoxHParams& h2, const Number& lambda, ProductVariant variant) {
  require_valid(h1, "omega_range");
  require_valid(h2, "omega_range");
  require(lambda > Number(0), "lambda > 0");
  const MellinStrip s1 = strip_bounds(h1), s2 = strip_bounds(h2);
  if (variant == ProductVariant::Direct) return {sum(scaled(s1.lo, lambda), s2.lo), sum(scaled(s1.hi, lambda), s2.hi)};
  return {sum(s2.lo, -scaled(s1.hi, lambda)), sum(s2.hi, -scaled(s1.lo, lambda))};
}

FoxHParams product_extend(const FoxHParams& h1, const FoxHParams& h2, const Number& omega, const Number& lambda,
                          ProductVariant variant) {
  require_valid(h1, "product_extend");
  require_valid(h2, "product_extend");
  require(chi_of(h1) > Number(0), "chi > 0 (first factor)");
  require(chi_of(h2) > Number(0), "chi'' > 0 (second factor)");
  require(lambda > Number(0), "lambda > 0");
  require(!strip_bounds(h1).empty(), "-min(beta/B) < min((1-alpha)/A) (first factor)");
  require(!strip_bounds(h2).empty(), "-min(beta''/B'') < min((1-alpha'')/A'') (second factor)");
  const MellinStrip range = omega_range(h1, h2, lambda, variant);
  if (!(range.lo < Extended(omega) && Extended(omega) < range.hi))
    throw Error(ErrorCode::OmegaOutOfRange, "omega = " + omega.to_string() + " outside " + range.to_string());

  std::vector<GammaPair> mid_upper, mid_lower;
  if (variant == ProductVariant::Direct) {
    for (const auto& g : h2.lower) mid_upper.push_back({Number(1) - g.shift - omega * g.slope, lambda * g.slope});
    for (const auto& g : h2.upper) mid_lower.push_back({Number(1) - g.shift - omega * g.slope, lambda * g.slope});
  } else {
    for (const auto& g : h2.upper) mid_upper.push_back({g.shift + omega * g.slope, lambda * g.slope});
    for (const auto& g : h2.lower) mid_lower.push_back({g.shift + omega * g.slope, lambda * g.slope});
  }

  FoxHParams out;
  if (variant == ProductVariant::Direct) {
    out.m = h1.m + h2.n;
    out.n = h1.n + h2.m;
  } else {
    out.m = h1.m + h2.m;
    out.n = h1.n + h2.n;
  }
  out.upper.assign(h1.upper.begin(), h1.upper.begin() + h1.n);
  out.upper.insert(out.upper.end(), mid_upper.begin(), mid_upper.end());
  out.upper.insert(out.upper.end(), h1.upper.begin() + h1.n, h1.upper.end());
  out.lower.assign(h1.lower.begin(), h1.lower.begin() + h1.m);
  out.lower.insert(out.lower.end(), mid_lower.begin(), mid_lower.end());
  out.lower.insert(out.lower.end(), h1.lower.begin() + h1.m, h1.lower.end());
  out.p = out.upper.size();
  out.q = out.lower.size();
  return out;
}

}  // namespace foxh

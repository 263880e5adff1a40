#include "foxh/params.hpp"

#include <cmath>

#include "foxh/error.hpp"

namespace foxh {

namespace {

using boost::multiprecision::cpp_int;


// Inverse of a modulo mod (gcd(a, mod) == 1, mod >= 1).
cpp_int mod_inverse(cpp_int a, const cpp_int& mod) {
  if (mod == 1) return 0;
  cpp_int old_r = a % mod, r = mod, old_s = 1, s = 0;
  while (r != 0) {
    cpp_int quot = old_r / r;
    cpp_int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  cpp_int inv = old_s % mod;
  if (inv < 0) inv += mod;
  return inv;
}

// Do nonnegative integers l, l' exist with a*l + b*l' = r (a, b > 0 rationals)?
bool representable(const Rational& a, const Rational& b, const Rational& r) {
  if (r < 0) return false;
  cpp_int den = lcm(lcm(boost::multiprecision::denominator(a), boost::multiprecision::denominator(b)),
                    boost::multiprecision::denominator(r));
  cpp_int ai = boost::multiprecision::numerator(Rational(a * den));
  cpp_int bi = boost::multiprecision::numerator(Rational(b * den));
  cpp_int ri = boost::multiprecision::numerator(Rational(r * den));
  cpp_int g = boost::multiprecision::gcd(ai, bi);
  if (ri % g != 0) return false;
  ai /= g;
  bi /= g;
  ri /= g;
  // Smallest l >= 0 with a*l = r (mod b); the matching l' is then maximal.
  cpp_int l = (ri % bi) * mod_inverse(ai, bi) % bi;
  return ai * l <= ri;
}

bool clash_exact(const GammaPair& up, const GammaPair& low) {
  // A(beta + l) = B(alpha - l' - 1)  <=>  A l + B l' = B(alpha - 1) - A beta.
  const Rational& alpha = *up.shift.rational();
  const Rational& a = *up.slope.rational();
  const Rational& beta = *low.shift.rational();
  const Rational& b = *low.slope.rational();
  return representable(a, b, b * (alpha - 1) - a * beta);
}

bool clash_bounded(const GammaPair& up, const GammaPair& low) {
  constexpr int kMax = 1000;
  const double alpha = up.shift.value(), a = up.slope.value();
  const double beta = low.shift.value(), b = low.slope.value();
  for (int l = 0; l <= kMax; ++l) {
    double lhs = a * (beta + l);
    double lp = std::round(alpha - 1.0 - lhs / b);
    if (lp < 0 || lp > kMax) continue;
    double rhs = b * (alpha - lp - 1.0);
    double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    if (std::fabs(lhs - rhs) <= 1e-12 * scale) return true;
  }
  return false;
}

bool is_exact(const GammaPair& g) { return g.shift.exact() && g.slope.exact(); }

}  // namespace

ValidationReport validate_params(const FoxHParams& h) {
  ValidationReport report;
  auto add = [&](std::string rule, std::string msg) {
    report.violations.push_back({std::move(rule), std::move(msg)});
  };
  if (h.upper.size() != h.p)
    add("len(upper) = p", "upper has " + std::to_string(h.upper.size()) + " pairs, p = " + std::to_string(h.p));
  if (h.lower.size() != h.q)
    add("len(lower) = q", "lower has " + std::to_string(h.lower.size()) + " pairs, q = " + std::to_string(h.q));
  if (h.n > h.p) add("n <= p", "n = " + std::to_string(h.n) + " exceeds p = " + std::to_string(h.p));
  if (h.m > h.q) add("m <= q", "m = " + std::to_string(h.m) + " exceeds q = " + std::to_string(h.q));
  for (std::size_t j = 0; j < h.upper.size(); ++j)
    if (!(h.upper[j].slope.value() > 0))
      add("A > 0", "A_" + std::to_string(j + 1) + " = " + h.upper[j].slope.to_string() + " is not positive");
  for (std::size_t j = 0; j < h.lower.size(); ++j)
    if (!(h.lower[j].slope.value() > 0))
      add("B > 0", "B_" + std::to_string(j + 1) + " = " + h.lower[j].slope.to_string() + " is not positive");
  return report;
}

Number chi_of(const FoxHParams& h) {
  Number chi;
  for (std::size_t j = 0; j < h.upper.size(); ++j)
    chi = j < h.n ? chi + h.upper[j].slope : chi - h.upper[j].slope;
  for (std::size_t j = 0; j < h.lower.size(); ++j)
    chi = j < h.m ? chi + h.lower[j].slope : chi - h.lower[j].slope;
  return chi;
}

CharParams char_params(const FoxHParams& h, KappaMode mode) {
  CharParams c;
  c.chi = chi_of(h).value();
  Number mu, delta;
  for (const auto& g : h.lower) {
    mu += g.slope;
    delta += g.shift;
  }
  for (const auto& g : h.upper) {
    mu -= g.slope;
    delta -= g.shift;
  }
  c.mu = mu.value();
  c.delta = delta.value() + (static_cast<double>(h.p) - static_cast<double>(h.q)) / 2.0;

  std::size_t a_count = mode == KappaMode::AsPrinted ? std::min(h.n, h.upper.size()) : h.upper.size();
  std::size_t b_count = mode == KappaMode::AsPrinted ? std::min(h.n, h.lower.size()) : h.lower.size();
  double log_kappa = 0.0;
  for (std::size_t j = 0; j < a_count; ++j) {
    double a = h.upper[j].slope.value();
    log_kappa -= a * std::log(a);
  }
  for (std::size_t j = 0; j < b_count; ++j) {
    double b = h.lower[j].slope.value();
    log_kappa += b * std::log(b);
  }
  c.kappa = std::exp(log_kappa);
  return c;
}

PoleCheck check_pole_separation(const FoxHParams& h) {
  PoleCheck result;
  const std::size_t n = std::min(h.n, h.upper.size());
  const std::size_t m = std::min(h.m, h.lower.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const GammaPair& up = h.upper[i];
      const GammaPair& low = h.lower[j];
      bool clash;
      if (is_exact(up) && is_exact(low)) {
        clash = clash_exact(up, low);
      } else {
        result.mode = PoleCheckMode::Bounded;
        clash = clash_bounded(up, low);
      }
      if (clash) {
        result.separated = false;
        return result;
      }
    }
  }
  return result;
}

bool pole_separation_ok(const FoxHParams& h) { return check_pole_separation(h).separated; }

Extended min_lower_ratio(const FoxHParams& h) {
  Extended best = Extended::pos_inf();
  for (std::size_t j = 0; j < std::min(h.m, h.lower.size()); ++j) {
    Extended r(h.lower[j].shift / h.lower[j].slope);
    if (r < best) best = r;
  }
  return best;
}

MellinStrip strip_bounds(const FoxHParams& h) {
  MellinStrip s;
  s.lo = -min_lower_ratio(h);
  for (std::size_t j = 0; j < std::min(h.n, h.upper.size()); ++j) {
    Extended r((Number(1) - h.upper[j].shift) / h.upper[j].slope);
    if (r < s.hi) s.hi = r;
  }
  return s;
}

MellinStrip mellin_strip(const FoxHParams& h) {
  MellinStrip s = strip_bounds(h);
  if (s.empty()) throw Error(ErrorCode::StripEmpty, "Mellin strip " + s.to_string() + " is empty");
  return s;
}

}  // namespace foxh

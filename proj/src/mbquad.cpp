#include "foxh/mbquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/legendre.hpp>

#include "foxh/log_gamma.hpp"

namespace foxh {

namespace {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// Initial and largest saddle window on the open side of a half-infinite strip.
constexpr double kWindow = 200.0;
constexpr double kMaxWindow = 1e9;
// Below this log |Xi(c)| t^{-c} the result underflows and is reported as 0.
constexpr double kUnderflowLog = -760.0;
constexpr int kSaddleGrid = 48;
constexpr int kMaxDepth = 7;
constexpr int kMaxRefits = 6;

void gauss_legendre(int order, std::vector<double>& x, std::vector<double>& w) {
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(order);
  x.clear();
  w.clear();
  for (double z : zeros) {
    const double dp = boost::math::legendre_p_prime(order, z);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x.push_back(z);
    w.push_back(weight);
    if (z != 0.0) {
      x.push_back(-z);
      w.push_back(weight);
    }
  }
}

}  // namespace

cplx log_xi(const FoxHParams& h, cplx s) {
  cplx sum = 0.0;
  for (std::size_t j = 0; j < h.q; ++j) {
    const double beta = h.lower[j].shift.value(), b = h.lower[j].slope.value();
    if (j < h.m)
      sum += log_gamma(beta + b * s);
    else
      sum -= log_gamma(1.0 - beta - b * s);
  }
  for (std::size_t j = 0; j < h.p; ++j) {
    const double alpha = h.upper[j].shift.value(), a = h.upper[j].slope.value();
    if (j < h.n)
      sum += log_gamma(1.0 - alpha - a * s);
    else
      sum -= log_gamma(alpha + a * s);
  }
  return sum;
}

cplx xi_value(const FoxHParams& h, cplx s) { return std::exp(log_xi(h, s)); }

HEvaluator::HEvaluator(const FoxHParams& h, EvalOptions opts) : h_(h), opts_(std::move(opts)) {
  if (auto rep = validate_params(h_); !rep.ok())
    throw Error(ErrorCode::PreconditionFailed, "invalid parameters: " + rep.violations.front().message);
  if (!(opts_.tol > 0.0) || !(opts_.max_height > 0.0) || opts_.panel_order < 4)
    throw Error(ErrorCode::InvalidOptions, "tol and max_height must be positive, panel_order >= 4");
  chi_ = chi_of(h_).value();
  if (!(chi_ > 0.0)) throw Error(ErrorCode::ChiNonpositive, "chi = " + chi_of(h_).to_string() + " is not positive");
  const MellinStrip strip = strip_bounds(h_);
  if (strip.empty()) throw Error(ErrorCode::StripEmpty, "Mellin strip " + strip.to_string() + " is empty");
  lo_ = strip.lo.value();
  hi_ = strip.hi.value();
  if (opts_.contour_re && !(lo_ < *opts_.contour_re && *opts_.contour_re < hi_))
    throw Error(ErrorCode::OutOfStrip, "contour_re outside the strip " + strip.to_string());

  for (std::size_t j = 0; j < h_.q; ++j) {
    const double beta = h_.lower[j].shift.value(), b = h_.lower[j].slope.value();
    if (j < h_.m)
      factors_.push_back({beta, b, +1});
    else
      factors_.push_back({1.0 - beta, -b, -1});
  }
  for (std::size_t j = 0; j < h_.p; ++j) {
    const double alpha = h_.upper[j].shift.value(), a = h_.upper[j].slope.value();
    if (j < h_.n)
      factors_.push_back({1.0 - alpha, -a, +1});
    else
      factors_.push_back({alpha, a, -1});
  }
  gauss_legendre(opts_.panel_order, nodes_hi_, weights_hi_);
  gauss_legendre(opts_.panel_order / 2, nodes_lo_, weights_lo_);
}

cplx HEvaluator::log_xi(cplx s) const {
  cplx sum = 0.0;
  for (const auto& f : factors_) {
    const cplx z = f.u + f.v * s;
    if (f.e > 0) {
      try {
        sum += log_gamma(z);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::PoleError)
          throw Error(ErrorCode::PoleOnContour, "Gamma pole on the contour at s = (" + std::to_string(s.real()) +
                                                    ", " + std::to_string(s.imag()) + ")");
        throw;
      }
    } else {
      // 1/Gamma vanishes at its poles.
      if (z.imag() == 0.0 && z.real() <= 0.0 && std::abs(z.real() - std::round(z.real())) < 1e-14)
        return cplx(-kInf, 0.0);
      sum -= log_gamma(z);
    }
  }
  return sum;
}

double HEvaluator::log_abs_xi_real(double c) const { return log_xi(cplx(c, 0.0)).real(); }

double HEvaluator::phase_rate(double c, double y, double log_t) const {
  double rate = -log_t;
  for (const auto& f : factors_) {
    const double r = std::abs(cplx(f.u + f.v * c, f.v * y));
    rate += f.e * f.v * std::log(std::max(r, 1.0));
  }
  return std::abs(rate);
}

double HEvaluator::contour_for(double log_t) const {
  if (opts_.contour_re) return *opts_.contour_re;
  const double width = hi_ - lo_;
  const double margin = std::isfinite(width) ? std::min(1e-3, 0.01 * width) : 1e-3;
  if (opts_.contour == ContourPolicy::StripDefault) {
    double c;
    if (std::isfinite(lo_) && std::isfinite(hi_))
      c = 0.5 * (lo_ + hi_);
    else if (std::isfinite(lo_))
      c = lo_ + 1.0;
    else
      c = hi_ - 1.0;
    // A zero of 1/Gamma on the real axis would leave nothing to normalise by.
    const double step = std::isfinite(hi_) && c > 0.5 * (lo_ + hi_) ? -1e-3 : 1e-3;
    for (int k = 0; k < 8 && !std::isfinite(log_abs_xi_real(c)); ++k) c += step;
    return c;
  }

  auto phi = [&](double c) {
    const double v = log_abs_xi_real(c) - c * log_t;
    return std::isfinite(v) ? v : kInf;
  };
  // On a half-infinite strip chi > 0 makes phi grow on the open side, so the
  // window widens until the minimum is interior or phi has underflowed.
  std::vector<double> xs(kSaddleGrid + 1);
  int best = -1;
  double best_val = kInf;
  for (double window = kWindow;; window *= 8.0) {
    const double a = std::isfinite(lo_) ? lo_ + margin : hi_ - window;
    const double b = std::isfinite(hi_) ? hi_ - margin : lo_ + window;
    if (!(a < b)) return 0.5 * (lo_ + hi_);
    best = -1;
    best_val = kInf;
    for (int i = 0; i <= kSaddleGrid; ++i) {
      xs[i] = a + (b - a) * i / kSaddleGrid;
      const double v = phi(xs[i]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best < 0) return 0.5 * (a + b);
    const bool open_end = (!std::isfinite(hi_) && best == kSaddleGrid) || (!std::isfinite(lo_) && best == 0);
    if (!open_end || best_val < kUnderflowLog || window > kMaxWindow) break;
  }
  double l = xs[std::max(best - 1, 0)], r = xs[std::min(best + 1, kSaddleGrid)];
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = r - g * (r - l), x2 = l + g * (r - l);
  double f1 = phi(x1), f2 = phi(x2);
  for (int it = 0; it < 40 && r - l > 1e-6 * (1.0 + std::abs(l)); ++it) {
    if (f1 < f2) {
      r = x2;
      x2 = x1;
      f2 = f1;
      x1 = r - g * (r - l);
      f1 = phi(x1);
    } else {
      l = x1;
      x1 = x2;
      f1 = f2;
      x2 = l + g * (r - l);
      f2 = phi(x2);
    }
  }
  const double c = f1 < f2 ? x1 : x2;
  return std::min(f1, f2) <= best_val ? c : xs[best];
}

EvalResult HEvaluator::operator()(double t) const {
  if (!(t > 0.0) || !std::isfinite(t))
    throw Error(ErrorCode::DomainError, "H evaluated at t = " + std::to_string(t) + ", need 0 < t < inf");
  return eval_log(std::log(t));
}

EvalResult HEvaluator::eval_log(double log_t) const {
  if (!std::isfinite(log_t)) throw Error(ErrorCode::DomainError, "ln t is not finite");
  const double c = contour_for(log_t);

  // Normalise by |Xi| near the real axis so the integrand is O(1).
  double l_ref = log_abs_xi_real(c);
  if (!std::isfinite(l_ref)) l_ref = log_xi(cplx(c, 0.25)).real();
  const double log_scale = l_ref - c * log_t;  // log of |Xi(c)| t^{-c}
  if (log_scale < kUnderflowLog) {
    EvalResult res;
    res.contour_re = c;
    res.abs_err_est = std::exp(log_scale + 20.0);
    return res;
  }

  auto integrand = [&](double y) {
    const cplx l = log_xi(cplx(c, y)) - l_ref - cplx(0.0, y * log_t);
    return l.real() < -745.0 ? cplx(0.0) : std::exp(l);
  };

  const double log_target =
      std::max(std::log(kPi * opts_.tol) + std::min(-log_scale, 0.0), std::log(kPi * 1e-14));
  const double target = std::exp(log_target);

  // Stirling envelope |Xi(c+iy)| <= C y^sigma e^{-k y}.
  const double k = 0.5 * kPi * chi_;
  double sigma = 0.0, log_c_an = 0.0, pole_dist = kInf;
  for (const auto& f : factors_) {
    const double x = f.u + f.v * c;
    sigma += f.e * (x - 0.5);
    log_c_an += f.e * (0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(std::abs(f.v)));
    if (f.e > 0) pole_dist = std::min(pole_dist, x / std::abs(f.v));
  }
  pole_dist = std::max(pole_dist, 1e-3);
  double log_c = log_c_an + std::log(2.0);
  for (double y : {1.0, 2.0, 4.0, 8.0}) {
    const double sample = log_xi(cplx(c, y)).real() - (sigma * std::log(y) - k * y);
    if (std::isfinite(sample)) log_c = std::max(log_c, sample);
  }
  log_c -= l_ref;

  const double y_floor = std::max(4.0, 2.0 * std::max(sigma, 0.0) / k);
  auto log_tail = [&](double y) { return log_c + sigma * std::log(y) - k * y + std::log(2.0 / k); };
  const double goal = std::log(0.5 * target);
  // Envelope height, or +inf when it lies beyond max_height.
  auto height_for = [&]() {
    double y = y_floor;
    while (log_tail(y) > goal) {
      y *= 1.25;
      if (y > opts_.max_height) return kInf;
    }
    return y;
  };
  // Local certificate: once log|g| decreases at rate r(y) > 0, the tail past y
  // is at most |g(y)| / min(r(y), k). This stops far earlier than the
  // envelope when c is large and |Xi| is Gaussian in y over a wide range.
  auto log_abs_g = [&](double y) { return log_xi(cplx(c, y)).real() - l_ref; };
  auto local_tail = [&](double y, double& log_bound) {
    const double h = 0.25;
    const double l0 = log_abs_g(y), l1 = log_abs_g(y + h);
    const double rate = (l0 - l1) / h;
    if (!(rate > 0.0) || !std::isfinite(l0)) return false;
    log_bound = std::max(l0, l1 + h * rate) - std::log(std::min(rate, k));
    return std::isfinite(log_bound);
  };

  double sum = 0.0, quad_err = 0.0, imag_sum = 0.0;
  std::size_t panels = 0;
  const std::size_t nh = nodes_hi_.size(), nl = nodes_lo_.size();

  auto rule = [&](double a, double b, double& hi_val, double& lo_val, bool top) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    hi_val = 0.0;
    lo_val = 0.0;
    for (std::size_t i = 0; i < nh; ++i) hi_val += weights_hi_[i] * integrand(mid + half * nodes_hi_[i]).real();
    double imag = 0.0;
    for (std::size_t i = 0; i < nl; ++i) {
      const double y = mid + half * nodes_lo_[i];
      const cplx g = integrand(y);
      lo_val += weights_lo_[i] * g.real();
      if (top && opts_.imag_check) imag += weights_lo_[i] * (g + integrand(-y)).imag();
    }
    hi_val *= half;
    lo_val *= half;
    if (top) imag_sum += std::abs(imag * half);
  };

  auto panel = [&](auto&& self, double a, double b, double eps, int depth, bool top) -> void {
    double hv, lv;
    rule(a, b, hv, lv, top);
    const double err = std::abs(hv - lv);
    if (err <= eps || depth >= kMaxDepth) {
      sum += hv;
      quad_err += err;
      ++panels;
      return;
    }
    const double m = 0.5 * (a + b);
    self(self, a, m, 0.5 * eps, depth + 1, false);
    self(self, m, b, 0.5 * eps, depth + 1, false);
  };

  auto fail = [&]() {
    return Error(ErrorCode::NoConvergence, "truncation height exceeds max_height = " +
                                               std::to_string(opts_.max_height) + " at ln t = " + std::to_string(log_t));
  };

  double y_end = height_for();
  const double budget_height = std::min(y_end, opts_.max_height);
  double y = 0.0, log_tail_used = kInf;
  for (int refit = 0;; ++refit) {
    bool certified = false;
    while (y < y_end) {
      const double w_osc = 6.0 * kPi / std::max(phase_rate(c, y, log_t), 1e-12);
      double w = std::min({w_osc, std::max(4.0, 0.25 * y), pole_dist + y});
      if (std::isfinite(y_end)) {
        w = std::min(w, y_end - y);
        if (y_end - (y + w) < 1e-3 * w) w = y_end - y;
      }
      if (y + w > opts_.max_height) throw fail();
      panel(panel, y, y + w, 0.5 * target * w / budget_height, 0, true);
      y += w;
      double lb;
      if (y >= 4.0 && local_tail(y, lb) && lb < goal) {
        certified = true;
        log_tail_used = lb;
        break;
      }
    }
    if (certified) break;
    log_tail_used = log_tail(y_end);
    // A posteriori check of the envelope at the truncation point.
    const double observed = std::log(std::abs(integrand(y_end)));
    const double predicted = log_c + sigma * std::log(y_end) - k * y_end;
    if (!(observed > predicted) || refit >= kMaxRefits) break;
    log_c = observed - (sigma * std::log(y_end) - k * y_end) + std::log(2.0);
    const double next = height_for();
    if (!std::isfinite(next)) throw fail();
    if (next <= y_end) break;
    y_end = next;
    log_tail_used = log_tail(y_end);
  }
  y_end = y;

  const double tail = std::exp(log_tail_used);
  EvalResult res;
  const double scale = std::exp(log_scale) / kPi;
  res.value = sum * scale;
  res.abs_err_est = (quad_err + tail) * scale;
  res.imag_residual = 0.5 * imag_sum * scale;
  res.height_used = y_end;
  res.panels = panels;
  res.contour_re = c;
  return res;
}

EvalResult eval_h(const FoxHParams& h, double t, const EvalOptions& opts) { return HEvaluator(h, opts)(t); }

namespace {

GridPoint grid_point(const HEvaluator& ev, double t) {
  GridPoint gp;
  gp.t = t;
  try {
    gp.result = ev(t);
  } catch (const Error& e) {
    gp.error = e.code();
    gp.message = e.what();
  }
  return gp;
}

std::vector<GridPoint> all_failed(const std::vector<double>& grid, const Error& e) {
  std::vector<GridPoint> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i].t = grid[i];
    out[i].error = e.code();
    out[i].message = e.what();
  }
  return out;
}

}  // namespace

std::vector<GridPoint> eval_h_grid(const FoxHParams& h, const std::vector<double>& grid, const EvalOptions& opts) {
  if (grid.empty()) return {};
  std::optional<HEvaluator> ev;
  try {
    ev.emplace(h, opts);
  } catch (const Error& e) {
    return all_failed(grid, e);
  }
  std::vector<GridPoint> out(grid.size());
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = grid_point(*ev, grid[i]);
  return out;
}

std::vector<GridPoint> eval_h_grid_serial(const FoxHParams& h, const std::vector<double>& grid,
                                          const EvalOptions& opts) {
  if (grid.empty()) return {};
  std::optional<HEvaluator> ev;
  try {
    ev.emplace(h, opts);
  } catch (const Error& e) {
    return all_failed(grid, e);
  }
  std::vector<GridPoint> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(grid_point(*ev, t));
  return out;
}

std::vector<double> make_grid(double lo, double hi, std::size_t count, bool log_spaced) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  if (!(lo < hi) || (log_spaced && !(lo > 0.0)))
    throw Error(ErrorCode::InvalidOptions, "grid needs min < max (and min > 0 when log-spaced)");
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    g[i] = log_spaced ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  g.back() = hi;
  return g;
}

}  // namespace foxh

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "foxh/error.hpp"
#include "foxh/params.hpp"

namespace foxh {

// Where the vertical contour Re(s) = c is placed when contour_re is unset.
// Saddle minimises |Xi(c)| t^{-c} over the strip; StripDefault is the strip
// midpoint (finite endpoint +/- 1 for a half-infinite strip).
enum class ContourPolicy { Saddle, StripDefault };

struct EvalOptions {
  double tol = 1e-10;
  std::optional<double> contour_re;
  double max_height = 1e4;
  int panel_order = 32;
  ContourPolicy contour = ContourPolicy::Saddle;
  bool imag_check = true;
};

struct EvalResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  double height_used = 0.0;
  std::size_t panels = 0;
  double imag_residual = 0.0;
  double contour_re = 0.0;
};

/// Xi(s) = prod Gamma(beta_j + B_j s)_{j<=m} prod Gamma(1 - alpha_j - A_j s)_{j<=n}
///       / prod Gamma(1 - beta_j - B_j s)_{j>m} / prod Gamma(alpha_j + A_j s)_{j>n}.
std::complex<double> log_xi(const FoxHParams& h, std::complex<double> s);
std::complex<double> xi_value(const FoxHParams& h, std::complex<double> s);

/// H(t) = (1/pi) Re int_0^inf Xi(c+iy) t^{-c-iy} dy for one parameter set.
/// Construction checks the parameters once; evaluation is const and may run
/// concurrently from several threads.
class HEvaluator {
 public:
  explicit HEvaluator(const FoxHParams& h, EvalOptions opts = {});

  EvalResult operator()(double t) const;
  /// Same, from ln t; reaches arguments far outside the double range.
  EvalResult eval_log(double log_t) const;

  const FoxHParams& params() const { return h_; }
  const EvalOptions& options() const { return opts_; }
  double chi() const { return chi_; }
  double strip_lo() const { return lo_; }
  double strip_hi() const { return hi_; }

  std::complex<double> log_xi(std::complex<double> s) const;
  /// Contour abscissa used at ln t.
  double contour_for(double log_t) const;

 private:
  struct Factor {
    double u, v;  // Gamma(u + v s)
    int e;        // +1 numerator, -1 denominator
  };

  double log_abs_xi_real(double c) const;
  double phase_rate(double c, double y, double log_t) const;

  FoxHParams h_;
  EvalOptions opts_;
  std::vector<Factor> factors_;
  double chi_ = 0.0;
  double lo_ = 0.0, hi_ = 0.0;
  std::vector<double> nodes_hi_, weights_hi_, nodes_lo_, weights_lo_;
};

EvalResult eval_h(const FoxHParams& h, double t, const EvalOptions& opts = {});

/// One grid point's outcome; failures are recorded instead of aborting.
struct GridPoint {
  double t = 0.0;
  std::optional<EvalResult> result;
  std::optional<ErrorCode> error;
  std::string message;
};

/// OpenMP-parallel over points; output order follows the input.
std::vector<GridPoint> eval_h_grid(const FoxHParams& h, const std::vector<double>& grid,
                                   const EvalOptions& opts = {});
/// Serial reference with identical results.
std::vector<GridPoint> eval_h_grid_serial(const FoxHParams& h, const std::vector<double>& grid,
                                          const EvalOptions& opts = {});

/// count points from lo to hi, geometric when log_spaced.
std::vector<double> make_grid(double lo, double hi, std::size_t count, bool log_spaced);

}  // namespace foxh

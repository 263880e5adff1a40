#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "foxh/number.hpp"

namespace foxh {

/// One (coefficient, slope) pair: (alpha_j, A_j) in the upper row or
/// (beta_j, B_j) in the lower row.
struct GammaPair {
  Number shift;
  Number slope;
  bool operator==(const GammaPair&) const = default;
};

/// Index set and parameter rows of H^{m,n}_{p,q}.
struct FoxHParams {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<GammaPair> upper;  // (alpha_j, A_j), length p
  std::vector<GammaPair> lower;  // (beta_j, B_j), length q

  bool operator==(const FoxHParams&) const = default;
};

struct CharParams {
  double chi = 0.0;
  double mu = 0.0;
  double delta = 0.0;
  double kappa = 1.0;
};

// Which index ranges the kappa products run over. AsPrinted takes both
// products over j = 1..n (B-products truncated at q); Conventional uses 1..p
// and 1..q.
enum class KappaMode { AsPrinted, Conventional };

struct Violation {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_params(const FoxHParams& h);

/// chi with exact arithmetic where the parameters allow it.
Number chi_of(const FoxHParams& h);
CharParams char_params(const FoxHParams& h, KappaMode mode = KappaMode::AsPrinted);

enum class PoleCheckMode { Exact, Bounded };

struct PoleCheck {
  bool separated = true;
  PoleCheckMode mode = PoleCheckMode::Exact;
};

/// Decides whether the poles of Gamma(beta_j + B_j s), j <= m, avoid those of
/// Gamma(1 - alpha_i - A_i s), i <= n. Exact when every involved parameter is
/// exact, otherwise a scan over l, l' <= 1000 with clash tolerance 1e-12.
PoleCheck check_pole_separation(const FoxHParams& h);
bool pole_separation_ok(const FoxHParams& h);

/// (-min_{j<=m} beta_j/B_j, min_{j<=n} (1-alpha_j)/A_j); may be empty.
MellinStrip strip_bounds(const FoxHParams& h);
/// As strip_bounds, but throws Error(StripEmpty) when lo >= hi.
MellinStrip mellin_strip(const FoxHParams& h);

/// min_{j<=m} beta_j/B_j, +inf when m = 0.
Extended min_lower_ratio(const FoxHParams& h);

}  // namespace foxh

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "foxh/construct.hpp"
#include "foxh/io.hpp"
#include "foxh/mbquad.hpp"

namespace foxh {

// Random e.p.-valid specs: at most max_kernels kernels with n1 + n3 >= 1,
// a-type parameters log-uniform in [0.25, 4], b/o/c/v uniform in [0, 3]
// (r and v redrawn when they round to 0), d = c + 1 + U[0, 2], w = v + 1 + U[0, 2];
// all rounded to 3 decimals so they are exact.
ConvolutionSpec random_spec(std::mt19937_64& rng, std::size_t max_kernels = 4);

/// The first count specs of the stream seeded with seed that pass ep_report.
std::vector<ConvolutionSpec> generate_corpus(std::uint64_t seed, std::size_t count, std::size_t max_kernels = 4);

/// 25 log-spaced points on [1e-2, 1e2].
std::vector<double> standard_grid();

/// k abscissae inside the strip: evenly spaced when it is finite, otherwise
/// steps of 1/2 in from the finite end.
std::vector<double> strip_points(const MellinStrip& strip, std::size_t k);

struct VerifyOptions {
  std::vector<double> grid = standard_grid();
  EvalOptions eval;
  double oracle_tol = 1e-11;
  std::size_t mellin_points = 3;
  double mellin_tol = 1e-8;
};

struct VerifyReport {
  std::size_t points = 0;
  std::size_t failed_points = 0;
  bool oracle_used = false;            // false beyond 3 kernels
  double max_abs_diff = 0.0;           // |eval_h - eval_f|
  double max_rel_diff = 0.0;           // same over max(|eval_f|, 1e-300)
  double min_value = 0.0;
  bool positivity_ok = false;          // value > -1e-6 max(1, |value|) everywhere
  double mellin_roundtrip_max_rel_err = 0.0;
};

/// Evaluates the built H on the grid, compares it with the convolution
/// oracle and checks the numeric Mellin transform against Xi at strip points.
/// Throws the builder's errors when ep_report fails.
VerifyReport verify_spec(const ConvolutionSpec& spec, const VerifyOptions& opts = {});

Json verify_to_json(const VerifyReport& r);

}  // namespace foxh

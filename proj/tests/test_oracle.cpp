#include <cmath>
#include <numbers>

#include "doctest.h"
#include "foxh/construct.hpp"
#include "foxh/error.hpp"
#include "foxh/mbquad.hpp"
#include "foxh/oracle.hpp"

using namespace foxh;

TEST_CASE("convolve_pair examples") {
  const Pointwise box = kernel_pointwise(Kernel::phi(1, 0, 1));
  CHECK(convolve_pair(box, box, 0.5).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(convolve_pair(box, box, 1.5).value == 0.0);

  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  s.psi = {Kernel::psi(1, 0, 1)};
  const double f = convolve_pair(kernel_pointwise(s.varphi[0]), kernel_pointwise(s.psi[0]), 1.0).value;
  CHECK(std::abs(f - eval_h(build_foxh(s), 1.0).value) <= 1e-9);
}

TEST_CASE("convolve_pair is commutative") {
  const Kernel ks[] = {Kernel::varphi(Number::parse("0.6"), 1), Kernel::phi(2, Number::parse("0.5"), 2),
                       Kernel::psi(Number::parse("1.4"), Number::parse("0.3"), 2), Kernel::eta(1, 1, 3)};
  for (const auto& a : ks)
    for (const auto& b : ks)
      for (double t : {0.2, 1.0, 3.5}) {
        const double x = convolve_pair(kernel_pointwise(a), kernel_pointwise(b), t).value;
        const double y = convolve_pair(kernel_pointwise(b), kernel_pointwise(a), t).value;
        CHECK(std::abs(x - y) <= 1e-8);
      }
}

TEST_CASE("eval_f examples") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  CHECK(eval_f(s, 2.0).value == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

  s = {};
  s.phi = {Kernel::phi(1, 0, 1), Kernel::phi(1, 0, 1)};
  for (double t : {1.0, 1.5, 10.0}) CHECK(eval_f(s, t).value == 0.0);
  CHECK(eval_f(s, 0.5).value > 0.0);

  s = {};
  s.eta = {Kernel::eta(1, 1, 2), Kernel::eta(1, 1, 2)};
  for (double t : {0.1, 0.5, 1.0}) CHECK(eval_f(s, t).value == 0.0);
  // (1/t 1_{t>1}) v (1/t 1_{t>1}) = ln t / t.
  CHECK(eval_f(s, 3.0).value == doctest::Approx(std::log(3.0) / 3.0).epsilon(1e-11));
}

TEST_CASE("eval_f errors") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0), Kernel::varphi(1, 0), Kernel::varphi(1, 0), Kernel::varphi(1, 0)};
  try {
    eval_f(s, 1.0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyKernels);
  }
  s = {};
  s.psi = {Kernel::psi(1, 0, -1)};
  try {
    eval_f(s, 1.0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpecInvalid);
  }
}

TEST_CASE("three-kernel fold matches the evaluator") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  s.phi = {Kernel::phi(2, 1, 3)};
  s.eta = {Kernel::eta(1, 1, Number::parse("2.5"))};
  const HEvaluator ev(build_foxh(s));
  for (double t : {0.1, 1.0, 4.0}) CHECK(std::abs(eval_f(s, t).value - ev(t).value) <= 1e-8);
}

TEST_CASE("mellin_numeric examples") {
  const Pointwise e = kernel_pointwise(Kernel::varphi(1, 0));
  CHECK(std::abs(mellin_numeric(e, 2.0) - 1.0) <= 1e-9);
  const Pointwise r = kernel_pointwise(Kernel::psi(1, 0, 1));
  CHECK(std::abs(mellin_numeric(r, 0.5) - std::numbers::pi) <= 1e-8);

  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0), Kernel::varphi(2, 1)};
  auto f = [&](double t) { return eval_f(s, t, 1e-12).value; };
  CHECK(std::abs(mellin_numeric(f, 1.0) - 2.0) <= 1e-7);

  try {
    mellin_numeric(r, 1.5, 1e-10, MellinStrip{Extended(Number(0)), Extended(Number(1))});
    FAIL("no throw");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::OutOfStrip);
  }
}

TEST_CASE("convolution transform law") {
  const Kernel a = Kernel::varphi(Number::parse("0.8"), Number::parse("0.4"));
  const Kernel b = Kernel::psi(Number::parse("1.2"), 1, 2);
  const Pointwise g = convolve(kernel_pointwise(a), kernel_pointwise(b));
  for (std::complex<double> s : {std::complex<double>(0.5, 0.0), std::complex<double>(1.0, 0.7)}) {
    const auto lhs = mellin_numeric(g, s, 1e-9);
    const auto rhs = kernel_mellin(a, s) * kernel_mellin(b, s);
    CHECK(std::abs(lhs - rhs) <= 1e-5 * std::abs(rhs));
  }
}

TEST_CASE("integrate handles infinite and singular ends") {
  CHECK(integrate([](double x) { return std::exp(-x); }, 0, INFINITY).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1).value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -INFINITY, INFINITY).value ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("wright_series") {
  // 1W1[(1,1);(2,1) | -1] = sum (-1)^k / (k+1)! = 1 - e^{-1}.
  CHECK(wright_series({{1, 1}}, {{2, 1}}, -1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(wright_series({}, {}, -2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
}

#include <cmath>

#include "doctest.h"
#include "foxh/construct.hpp"
#include "foxh/corpus.hpp"
#include "foxh/error.hpp"
#include "foxh/mbquad.hpp"
#include "foxh/oracle.hpp"
#include "foxh/rewrite.hpp"

using namespace foxh;

namespace {

const Number half = Number(1) / Number(2);

FoxHParams exp_h() {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  return build_foxh(s);
}

FoxHParams rational_h() {
  ConvolutionSpec s;
  s.psi = {Kernel::psi(1, 0, 1)};
  return build_foxh(s);
}

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::InvalidOptions;
}

}  // namespace

TEST_CASE("reciprocal") {
  const FoxHParams r = reciprocal(exp_h());
  CHECK((r.m == 0 && r.n == 1 && r.p == 1 && r.q == 0));
  CHECK(r.upper == std::vector<GammaPair>{{1, 1}});
  CHECK(reciprocal(r) == exp_h());
  const FoxHParams rr = reciprocal(rational_h());
  CHECK(rr.upper == std::vector<GammaPair>{{1, 1}});
  CHECK(rr.lower == std::vector<GammaPair>{{1, 1}});
  for (double t : {0.3, 1.0, 4.0}) CHECK(std::abs(eval_h(r, 1.0 / t).value - std::exp(-t)) <= 1e-9);
}

TEST_CASE("power_arg") {
  const WeightedH same = power_arg(exp_h(), 1);
  CHECK(same.params == exp_h());
  CHECK(same.scalar == Number(1));
  const WeightedH w = power_arg(exp_h(), 2);
  CHECK(w.params.lower == std::vector<GammaPair>{{0, 2}});
  CHECK(w.scalar == Number(2));
  for (double t : {0.2, 1.0, 2.5}) CHECK(std::abs(2.0 * eval_h(w.params, t * t).value - std::exp(-t)) <= 1e-9);
  const MellinStrip a = strip_bounds(rational_h()), b = strip_bounds(power_arg(rational_h(), 4).params);
  CHECK(b.hi.number() == a.hi.number() / Number(4));
  CHECK(error_of([] { power_arg(exp_h(), 0); }) == ErrorCode::NonpositiveOmega);
}

TEST_CASE("power_weight") {
  CHECK(power_weight(exp_h(), 0) == exp_h());
  const FoxHParams w = power_weight(exp_h(), 1);
  CHECK(w.lower == std::vector<GammaPair>{{1, 1}});
  for (double t : {0.2, 1.0, 2.5}) CHECK(std::abs(eval_h(w, t).value - t * std::exp(-t)) <= 1e-9);
  const FoxHParams h = rational_h();
  CHECK(power_weight(power_weight(h, half), Number::parse("0.25")) == power_weight(h, Number::parse("0.75")));
}

TEST_CASE("laplace_extend") {
  const FoxHParams l = laplace_extend(rational_h(), 1, 1);
  CHECK((l.m == 1 && l.n == 2 && l.p == 2 && l.q == 1));
  CHECK(l.upper == std::vector<GammaPair>{{0, 1}, {0, 1}});
  const double lhs = integrate([](double x) { return std::exp(-x) / (1.0 + x); }, 0.0, INFINITY).value;
  CHECK(std::abs(eval_h(l, 1.0).value - lhs) <= 1e-9);
  CHECK(chi_of(l) == chi_of(rational_h()) + Number(1));
  CHECK(error_of([] { laplace_extend(rational_h(), -1, 1); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { laplace_extend(exp_h(), 1, 1); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("euler_extend") {
  const FoxHParams e = euler_extend(rational_h(), 1, 1, half, half);
  CHECK((e.m == 1 && e.n == 3 && e.p == 3 && e.q == 2));
  CHECK(e.lower.back() == GammaPair{-1, 1});
  const double lhs = integrate([](double x) { return 1.0 / (1.0 + std::sqrt(x * (1.0 - x))); }, 0.0, 1.0).value;
  CHECK(std::abs(eval_h(e, 1.0).value - lhs) <= 1e-9);
  CHECK(chi_of(e) == chi_of(rational_h()));
  CHECK(error_of([] { euler_extend(rational_h(), 1, 1, 0, 0); }) == ErrorCode::PreconditionFailed);
  CHECK(error_of([] { euler_extend(rational_h(), 0, 1, 1, 1); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("euler_extend contract at general zeta and t") {
  const FoxHParams e = euler_extend(rational_h(), 2, Number::parse("1.5"), 1, 2);
  const double t = 0.7, zeta = 1.3;
  const double lhs =
      integrate([&](double x) { return x * std::sqrt(t - x) / (1.0 + zeta * x * (t - x) * (t - x)); }, 0.0, t).value;
  CHECK(std::abs(std::pow(t, 2.5) * eval_h(e, zeta * t * t * t).value - lhs) <= 1e-9);
}

TEST_CASE("omega_range and product_extend") {
  const FoxHParams h = rational_h();
  CHECK(omega_range(h, h, 1) == MellinStrip{Extended(Number(0)), Extended(Number(2))});
  CHECK(omega_range(reciprocal(exp_h()), h, 1).lo == Extended::neg_inf());

  const FoxHParams p = product_extend(h, h, 1, 1);
  CHECK((p.m == 2 && p.n == 2 && p.p == 2 && p.q == 2));
  CHECK(p.upper == std::vector<GammaPair>{{0, 1}, {0, 1}});
  CHECK(p.lower == std::vector<GammaPair>{{0, 1}, {0, 1}});
  CHECK(std::abs(eval_h(p, 1.0).value - 1.0) <= 1e-9);
  // xi = 2, zeta = 1: int 1/((1+2 tau)(1+tau)) dtau = ln 2.
  CHECK(std::abs(eval_h(p, 2.0).value - std::log(2.0)) <= 1e-9);
  CHECK(error_of([&] { product_extend(h, h, 5, 1); }) == ErrorCode::OmegaOutOfRange);
}

TEST_CASE("reciprocal product variant") {
  const FoxHParams h = rational_h();
  const MellinStrip range = omega_range(h, h, 1, ProductVariant::Reciprocal);
  CHECK(range == MellinStrip{Extended(Number(-1)), Extended(Number(1))});
  const FoxHParams p = product_extend(h, h, half, 1, ProductVariant::Reciprocal);
  // int tau^{-1/2} / ((1 + 2/tau)(1 + 3 tau)) dtau = 3^{-1/2} H(2 * 3).
  const double lhs =
      integrate([](double x) { return std::pow(x, -0.5) / ((1.0 + 2.0 / x) * (1.0 + 3.0 * x)); }, 0.0, INFINITY).value;
  CHECK(std::abs(std::pow(3.0, -0.5) * eval_h(p, 6.0).value - lhs) <= 1e-9);
}

TEST_CASE("rewrites keep corpus outputs valid and positive") {
  const auto corpus = generate_corpus(17, 6);
  for (const auto& spec : corpus) {
    const FoxHParams h = build_foxh(spec);
    std::vector<FoxHParams> outs = {reciprocal(h), power_arg(h, 2).params, power_weight(h, half)};
    if (h.n > 0) {
      outs.push_back(laplace_extend(h, 1, 1));
      outs.push_back(euler_extend(h, 1, 1, half, half));
    }
    for (const auto& o : outs) {
      CHECK(validate_params(o).ok());
      for (double t : {0.1, 1.0, 10.0}) {
        const EvalResult r = eval_h(o, t);
        CHECK(r.value > -std::max(1e-10, 1e-8 * std::abs(r.value)));
      }
    }
  }
}

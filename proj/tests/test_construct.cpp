#include <random>

#include "doctest.h"
#include "foxh/construct.hpp"
#include "foxh/corpus.hpp"
#include "foxh/error.hpp"
#include "foxh/mbquad.hpp"

using namespace foxh;

namespace {

const Number half = Number(1) / Number(2);

ErrorCode code_of(const ConvolutionSpec& spec) {
  try {
    build_foxh(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::InvalidOptions;
}

}  // namespace

TEST_CASE("build_foxh mapping examples") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  FoxHParams h = build_foxh(s);
  CHECK(h.m == 1);
  CHECK(h.n == 0);
  CHECK(h.p == 0);
  CHECK(h.q == 1);
  CHECK(h.lower == std::vector<GammaPair>{{0, 1}});

  s = {};
  s.psi = {Kernel::psi(1, 0, 1)};
  h = build_foxh(s);
  CHECK((h.m == 1 && h.n == 1 && h.p == 1 && h.q == 1));
  CHECK(h.upper == std::vector<GammaPair>{{0, 1}});
  CHECK(h.lower == std::vector<GammaPair>{{0, 1}});

  s = {};
  s.varphi = {Kernel::varphi(1, 0)};
  s.eta = {Kernel::eta(1, 1, 2)};
  h = build_foxh(s);
  CHECK((h.m == 1 && h.n == 1 && h.p == 1 && h.q == 2));
  CHECK(h.upper == std::vector<GammaPair>{{0, 1}});
  CHECK(h.lower == std::vector<GammaPair>{{0, 1}, {-1, 1}});
}

TEST_CASE("build_foxh block order") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(2, 1)};
  s.phi = {Kernel::phi(3, half, 4)};
  s.psi = {Kernel::psi(5, 2, 3)};
  s.eta = {Kernel::eta(7, 1, 6)};
  const FoxHParams h = build_foxh(s);
  CHECK((h.m == 3 && h.n == 2 && h.p == 3 && h.q == 4));
  CHECK(h.upper == std::vector<GammaPair>{{-2, 5}, {0, 7}, {4, 3}});
  CHECK(h.lower == std::vector<GammaPair>{{1, 2}, {half, 3}, {2, 5}, {-5, 7}});
}

TEST_CASE("build_foxh errors") {
  ConvolutionSpec s;
  s.phi = {Kernel::phi(1, 0, 2)};
  CHECK(code_of(s) == ErrorCode::IndexRule);
  s = {};
  s.varphi = {Kernel::varphi(-1, 0)};
  CHECK(code_of(s) == ErrorCode::SpecInvalid);
  s = {};
  s.varphi = {Kernel::psi(1, 0, 1)};
  CHECK(code_of(s) == ErrorCode::SpecInvalid);
}

TEST_CASE("ep_report examples") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  EpReport r = ep_report(s);
  CHECK(r.ok);
  CHECK(r.chi_prime == Number(1));
  CHECK(r.strip == MellinStrip{Extended(Number(0)), Extended::pos_inf()});

  s = {};
  s.phi = {Kernel::phi(1, 0, 2)};
  r = ep_report(s);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().rule == "index rule n1>=1 or n3>=1");

  s = {};
  s.varphi = {Kernel::varphi(1, 0)};
  s.psi = {Kernel::psi(2, 1, 3)};
  r = ep_report(s);
  CHECK(r.ok);
  CHECK(r.chi_prime == Number(5));
  CHECK(r.strip == MellinStrip{Extended(Number(0)), Extended(Number(3) / Number(2))});
}

TEST_CASE("psi with r = 0 is a boundary case, not certified") {
  ConvolutionSpec s;
  s.varphi = {Kernel::varphi(1, 0)};
  s.psi = {Kernel::psi(1, 0, 0)};
  const EpReport r = ep_report(s);
  CHECK_FALSE(r.ok);
  bool flagged = false;
  for (const auto& v : r.violations) flagged |= v.rule == "psi: r = 0 boundary";
  CHECK(flagged);
}

TEST_CASE("corpus invariants of the mapping") {
  for (const auto& spec : generate_corpus(7, 60)) {
    const FoxHParams h = build_foxh(spec);
    const EpReport r = ep_report(spec);
    const std::size_t n1 = spec.varphi.size(), n2 = spec.phi.size(), n3 = spec.psi.size(), n4 = spec.eta.size();
    CHECK(r.ok);
    CHECK(strip_bounds(h) == r.strip);
    CHECK(chi_of(h) == r.chi_prime);
    CHECK(h.q - h.p == n1);
    CHECK(static_cast<long>(h.m) - static_cast<long>(h.n) ==
          static_cast<long>(n1 + n2) - static_cast<long>(n4));
    CHECK(h.p + h.q == n1 + 2 * n2 + 2 * n3 + 2 * n4);
  }
}

TEST_CASE("kernel Mellin product equals Xi of the built H") {
  std::mt19937_64 rng(11);
  for (const auto& spec : generate_corpus(3, 20)) {
    const FoxHParams h = build_foxh(spec);
    const MellinStrip st = strip_bounds(h);
    const double lo = st.lo.value(), hi = std::min(st.hi.value(), lo + 6.0);
    for (int i = 0; i < 5; ++i) {
      const double x = lo + (hi - lo) * (0.05 + 0.9 * static_cast<double>(rng() >> 11) * 0x1.0p-53);
      const double y = -5.0 + 10.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const std::complex<double> s(x, y);
      const auto a = spec_mellin(spec, s), b = xi_value(h, s);
      CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
    }
  }
}

#include "doctest.h"
#include "foxh/error.hpp"
#include "foxh/params.hpp"

using namespace foxh;

namespace {

FoxHParams make(std::size_t m, std::size_t n, std::vector<GammaPair> upper, std::vector<GammaPair> lower) {
  FoxHParams h;
  h.m = m;
  h.n = n;
  h.p = upper.size();
  h.q = lower.size();
  h.upper = std::move(upper);
  h.lower = std::move(lower);
  return h;
}

const Number half = Number(1) / Number(2);

}  // namespace

TEST_CASE("validate_params") {
  CHECK(validate_params(make(1, 0, {}, {{0, 1}})).ok());

  FoxHParams bad_m = make(1, 0, {}, {{0, 1}});
  bad_m.m = 2;
  auto rep = validate_params(bad_m);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().rule == "m <= q");

  rep = validate_params(make(1, 0, {}, {{0, -1}}));
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().rule == "B > 0");

  FoxHParams bad_len = make(1, 0, {}, {{0, 1}});
  bad_len.q = 2;
  CHECK_FALSE(validate_params(bad_len).ok());
}

TEST_CASE("char_params on the reference instances") {
  auto c = char_params(make(1, 0, {}, {{0, 1}}));
  CHECK(c.chi == 1.0);
  CHECK(c.mu == 1.0);
  CHECK(c.delta == -0.5);
  CHECK(c.kappa == 1.0);

  c = char_params(make(1, 1, {{0, 1}}, {{0, 1}}));
  CHECK(c.chi == 2.0);
  CHECK(c.mu == 0.0);
  CHECK(c.delta == 0.0);
  CHECK(c.kappa == 1.0);

  c = char_params(make(2, 0, {}, {{0, 1}, {0, 1}}));
  CHECK(c.chi == 2.0);
  CHECK(c.mu == 2.0);
  CHECK(c.delta == -1.0);
}

TEST_CASE("kappa modes differ only in the product ranges") {
  const FoxHParams h = make(1, 0, {{0, 2}}, {{0, 3}});
  CHECK(char_params(h, KappaMode::AsPrinted).kappa == 1.0);
  CHECK(char_params(h, KappaMode::Conventional).kappa == doctest::Approx(std::pow(2.0, -2.0) * 27.0));
}

TEST_CASE("char_params is invariant under permutations inside blocks") {
  const FoxHParams a = make(2, 1, {{half, 1}, {2, 3}, {1, half}}, {{0, 1}, {1, 2}, {3, 1}});
  const FoxHParams b = make(2, 1, {{half, 1}, {1, half}, {2, 3}}, {{1, 2}, {0, 1}, {3, 1}});
  const auto ca = char_params(a), cb = char_params(b);
  CHECK(ca.chi == cb.chi);
  CHECK(ca.mu == cb.mu);
  CHECK(ca.delta == cb.delta);
}

TEST_CASE("pole separation") {
  CHECK(pole_separation_ok(make(1, 1, {{0, 1}}, {{0, 1}})));
  CHECK_FALSE(pole_separation_ok(make(1, 1, {{1, 1}}, {{0, 1}})));
  CHECK(pole_separation_ok(make(1, 1, {{half, 1}}, {{0, 2}})));
  // m = 0 or n = 0: vacuous.
  CHECK(pole_separation_ok(make(0, 1, {{5, 1}}, {{-3, 1}})));
  CHECK(pole_separation_ok(make(1, 0, {{5, 1}}, {{-3, 1}})));
  // -(1/3 + 5)/2 = 1 - 11/3: a clash at l = 5, l' = 0 found exactly.
  CHECK_FALSE(pole_separation_ok(make(1, 1, {{Number(11) / Number(3), 1}}, {{Number(1) / Number(3), 2}})));
  CHECK(check_pole_separation(make(1, 1, {{0, 1}}, {{0, 1}})).mode == PoleCheckMode::Exact);
  CHECK(check_pole_separation(make(1, 1, {{Number::inexact(0.1), 1}}, {{0, 1}})).mode == PoleCheckMode::Bounded);
}

TEST_CASE("mellin strips") {
  CHECK(strip_bounds(make(1, 1, {{0, 1}}, {{0, 1}})) == MellinStrip{Extended(Number(0)), Extended(Number(1))});
  CHECK(strip_bounds(make(1, 0, {}, {{0, 1}})) == MellinStrip{Extended(Number(0)), Extended::pos_inf()});
  CHECK(strip_bounds(make(1, 1, {{0, 1}}, {{-2, 1}})).empty());
  try {
    mellin_strip(make(1, 1, {{0, 1}}, {{-2, 1}}));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StripEmpty);
  }
}

TEST_CASE("chi is exact for decimal parameters") {
  const FoxHParams h = make(1, 1, {{0, Number::parse("0.1")}}, {{0, Number::parse("0.2")}});
  CHECK(chi_of(h) == Number::parse("0.3"));
}

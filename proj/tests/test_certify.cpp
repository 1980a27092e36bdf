#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gft/certify.hpp"

using namespace gft;

namespace {
const Region kLem = Region::lemniscate();
const Region kPar = Region::parabola();
const Region kMin0 = Region::half_plane_min(0.0);
const Region kMax2 = Region::half_plane_max(2.0);
}  // namespace

TEST_CASE("sharpness of the extremal at the proven radius") {
  const std::pair<ClassId, Region> sharp_pairs[] = {
      {ClassId::F1, kLem},  {ClassId::F5, kPar},  {ClassId::F8, kPar},
      {ClassId::F1, kMin0}, {ClassId::F2, kMax2}, {ClassId::F6, kPar}};
  for (const auto& [cls, region] : sharp_pairs) {
    const auto outcome = sharpness_check(cls, region);
    CAPTURE(static_cast<int>(cls));
    CHECK(std::abs(outcome.margin_at_radius) <= 1e-8);
    CHECK(outcome.margin_beyond < -1e-10);
  }
  CHECK_THROWS_AS(sharpness_check(ClassId::F2, kPar), std::invalid_argument);
  CHECK_THROWS_AS(sharpness_check(ClassId::F5, kLem), std::invalid_argument);
}

TEST_CASE("circle_min_margin locates the binding boundary point") {
  const auto m = extremal_member(ClassId::F1);
  const double R = formula_radius(ClassId::F1, kMin0).value;
  // At the radius the minimum over the circle is ~0 (attained at z = -R).
  CHECK(std::abs(circle_min_margin(m, kMin0, R)) < 1e-10);
  CHECK(circle_min_margin(m, kMin0, 0.5 * R) > 0.0);
  CHECK(circle_min_margin(m, kMin0, 1.1 * R) < 0.0);
}

TEST_CASE("empirical intervals bracket the proven radii") {
  const auto lem = empirical_radius(ClassId::F1, kLem, 40, 128, 2012);
  const double f1_sl = 0.10246615122164;
  CHECK(lem.lo <= f1_sl);
  CHECK(f1_sl <= lem.hi + 1e-6);

  const auto min0 = empirical_radius(ClassId::F1, kMin0, 40, 128, 2012);
  const double sqrt5m2 = std::sqrt(5.0) - 2.0;
  CHECK(min0.lo <= sqrt5m2);
  CHECK(sqrt5m2 <= min0.hi + 1e-6);

  // Non-sharp theorem value is only a lower bound for the empirical exit.
  const auto max2 = empirical_radius(ClassId::F5, kMax2, 40, 128, 2012);
  CHECK(max2.hi + 1e-6 >= 1.0 / 3.0);

  CHECK_THROWS_AS(empirical_radius(ClassId::F1, kLem, 0, 128, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(empirical_radius(ClassId::F1, kLem, 10, 4, 1),
                  std::invalid_argument);
}

TEST_CASE("conjecture probes reproduce the conjectured constants") {
  CHECK(conjecture_probe(ClassId::F2, kPar) ==
        doctest::Approx(3.0 - 2.0 * std::numbers::sqrt2).epsilon(1e-8));
  CHECK(conjecture_probe(ClassId::F3, kLem) ==
        doctest::Approx(0.14200894968249).epsilon(1e-8));
  CHECK(conjecture_probe(ClassId::F5, kLem) ==
        doctest::Approx(0.19891236737966).epsilon(1e-8));
  CHECK_THROWS_AS(conjecture_probe(ClassId::F1, kLem), NotCoveredError);
}

TEST_CASE("report covers 24 pairs and passes at the defaults") {
  ReportConfig config;
  config.members = 15;  // reduced for test runtime; full run in acceptance
  config.grid = 128;
  const auto rows = build_report(config);
  CHECK(rows.size() == 24);
  for (const auto& row : rows) {
    CAPTURE(class_name(row.cls));
    CAPTURE(static_cast<int>(row.region.kind));
    CAPTURE(row.failure);
    CHECK(row.passed);
    CHECK(row.failure.empty());
    CHECK(row.formula_value > 0.0);
    CHECK(std::abs(row.solver_value - row.formula_value) <= config.tol);
    CHECK(row.formula_value <= row.empirical.hi + 1e-6);
    if (row.sharp) {
      REQUIRE(row.sharpness.has_value());
      CHECK(std::abs(row.sharpness->margin_at_radius) <= 1e-8);
      CHECK(row.sharpness->margin_beyond < -1e-10);
    }
    if (row.conjecture_value) {
      REQUIRE(row.probe_value.has_value());
      CHECK(row.formula_value <= *row.probe_value + 1e-9);
      CHECK(std::abs(*row.probe_value - *row.conjecture_value) < 1e-5);
    }
  }
}

TEST_CASE("report respects the class filter and is deterministic") {
  ReportConfig config;
  config.members = 5;
  config.grid = 64;
  config.classes = {};
  CHECK(build_report(config).empty());

  config.classes = {ClassId::F2};
  config.region_kinds = {RegionKind::Parabola};
  const auto a = build_report(config);
  const auto b = build_report(config);
  REQUIRE(a.size() == 1);
  CHECK(a[0].empirical.lo == b[0].empirical.lo);
  CHECK(a[0].empirical.hi == b[0].empirical.hi);
  CHECK(a[0].formula_value == doctest::Approx(std::sqrt(10.0) - 3.0).epsilon(1e-12));
  REQUIRE(a[0].probe_value.has_value());
  CHECK(*a[0].probe_value ==
        doctest::Approx(3.0 - 2.0 * std::numbers::sqrt2).epsilon(1e-8));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gft/radii.hpp"

using namespace gft;

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
const Region kLem = Region::lemniscate();
const Region kPar = Region::parabola();
const Region kMin0 = Region::half_plane_min(0.0);
const Region kMax2 = Region::half_plane_max(2.0);
}  // namespace

TEST_CASE("coverage: 24 pairs at the default parameters") {
  int count = 0;
  for (ClassId cls : kAllClasses)
    for (const Region& region : {kLem, kMax2, kMin0, kPar})
      if (covered(cls, region)) ++count;
  CHECK(count == 24);

  CHECK(covered(ClassId::F3, kLem));
  CHECK_FALSE(covered(ClassId::F4, kLem));
  CHECK_FALSE(covered(ClassId::F6, kMax2));
  CHECK_THROWS_AS(formula_radius(ClassId::F4, kLem), NotCoveredError);
}

TEST_CASE("printed constants to 1e-5") {
  CHECK(formula_radius(ClassId::F1, kLem).value == doctest::Approx(0.10247).epsilon(1e-4));
  CHECK(formula_radius(ClassId::F1, kPar).value == doctest::Approx(0.12311).epsilon(1e-4));
  CHECK(formula_radius(ClassId::F1, kMin0).value ==
        doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F2, kLem).value == doctest::Approx(0.13009).epsilon(1e-4));
  CHECK(formula_radius(ClassId::F2, kPar).value ==
        doctest::Approx(std::sqrt(10.0) - 3.0).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F3, kPar).value == doctest::Approx(0.154701).epsilon(1e-5));
  CHECK(formula_radius(ClassId::F4, kPar).value == doctest::Approx(0.154701).epsilon(1e-5));
  CHECK(formula_radius(ClassId::F5, kPar).value ==
        doctest::Approx(1.0 / (std::sqrt(5.0) + 2.0)).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F5, kMax2).value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F6, kPar).value ==
        doctest::Approx(5.0 - 2.0 * std::sqrt(6.0)).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F8, kPar).value ==
        doctest::Approx(3.0 - 2.0 * kSqrt2).epsilon(1e-12));
}

TEST_CASE("frozen high-precision reference values") {
  CHECK(formula_radius(ClassId::F1, kLem).value ==
        doctest::Approx(0.10246615122164).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F2, kLem).value ==
        doctest::Approx(0.13009304312806).epsilon(1e-12));
  CHECK(formula_radius(ClassId::F3, kLem).value ==
        doctest::Approx(0.13009304312806).epsilon(1e-12));
}

TEST_CASE("sharpness flags") {
  // Sharp for every covered pair except the five lower-bound-only results.
  int sharp_count = 0;
  for (ClassId cls : kAllClasses)
    for (const Region& region : {kLem, kMax2, kMin0, kPar})
      if (covered(cls, region) && formula_radius(cls, region).sharp) ++sharp_count;
  CHECK(sharp_count == 19);

  CHECK_FALSE(formula_radius(ClassId::F2, kPar).sharp);
  CHECK_FALSE(formula_radius(ClassId::F3, kLem).sharp);
  CHECK_FALSE(formula_radius(ClassId::F3, kMax2).sharp);
  CHECK_FALSE(formula_radius(ClassId::F5, kLem).sharp);
  CHECK_FALSE(formula_radius(ClassId::F5, kMax2).sharp);
  CHECK(formula_radius(ClassId::F1, kLem).sharp);
  CHECK(formula_radius(ClassId::F2, kLem).sharp);
}

TEST_CASE("conjectured values") {
  CHECK(conjecture_covered(ClassId::F2, kPar));
  CHECK(conjecture_covered(ClassId::F3, kLem));
  CHECK(conjecture_covered(ClassId::F3, kMax2));
  CHECK(conjecture_covered(ClassId::F5, kLem));
  CHECK(conjecture_covered(ClassId::F5, kMax2));
  CHECK_FALSE(conjecture_covered(ClassId::F1, kLem));
  CHECK_THROWS_AS(conjectured_radius(ClassId::F1, kLem), NotCoveredError);

  CHECK(conjectured_radius(ClassId::F2, kPar).value ==
        doctest::Approx(3.0 - 2.0 * kSqrt2).epsilon(1e-12));
  CHECK(conjectured_radius(ClassId::F3, kLem).value ==
        doctest::Approx(0.142009).epsilon(1e-5));
  CHECK(conjectured_radius(ClassId::F5, kLem).value ==
        doctest::Approx(0.198912).epsilon(1e-5));
  CHECK(conjectured_radius(ClassId::F3, kMax2).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(conjectured_radius(ClassId::F5, kMax2).value ==
        doctest::Approx(1.0 / (1.0 + kSqrt2)).epsilon(1e-12));

  // Lower bound below conjecture on every conjectured pair.
  for (ClassId cls : kAllClasses)
    for (const Region& region : {kLem, kMax2, kMin0, kPar})
      if (conjecture_covered(cls, region))
        CHECK(formula_radius(cls, region).value <
              conjectured_radius(cls, region).value);
}

TEST_CASE("structural coincidences between the theorems") {
  // The parabolic radius equals the order-1/2 half-plane radius.
  const Region half = Region::half_plane_min(0.5);
  for (ClassId cls : {ClassId::F1, ClassId::F3, ClassId::F5})
    CHECK(formula_radius(cls, kPar).value ==
          doctest::Approx(formula_radius(cls, half).value).epsilon(1e-13));
  for (ClassId cls : {ClassId::F4, ClassId::F6, ClassId::F7, ClassId::F8})
    CHECK(formula_radius(cls, kPar).value ==
          doctest::Approx(formula_radius(cls, half).value).epsilon(1e-13));

  // F6 and F7 share all results; F3/F4 agree on the half-plane family.
  for (const Region& region : {kMin0, half, kPar}) {
    CHECK(formula_radius(ClassId::F6, region).value ==
          formula_radius(ClassId::F7, region).value);
    CHECK(formula_radius(ClassId::F3, region).value ==
          doctest::Approx(formula_radius(ClassId::F4, region).value).epsilon(1e-14));
  }

  // The proven parabolic lower bound for F2 sits below its conjectured value.
  CHECK(std::sqrt(10.0) - 3.0 < 3.0 - 2.0 * kSqrt2);
}

TEST_CASE("solver re-derives the closed forms") {
  for (ClassId cls : kAllClasses)
    for (const Region& region : {kLem, kMax2, kMin0, kPar}) {
      if (!covered(cls, region)) continue;
      CHECK(solve_radius(cls, region, 1e-12) ==
            doctest::Approx(formula_radius(cls, region).value).epsilon(1e-9));
    }
  for (double alpha : {0.1, 0.5, 0.9})
    for (ClassId cls : kAllClasses) {
      const Region region = Region::half_plane_min(alpha);
      CHECK(solve_radius(cls, region, 1e-12) ==
            doctest::Approx(formula_radius(cls, region).value).epsilon(1e-9));
    }
  for (double beta : {1.1, 3.0, 10.0})
    for (ClassId cls : {ClassId::F1, ClassId::F2, ClassId::F3, ClassId::F5}) {
      const Region region = Region::half_plane_max(beta);
      CHECK(solve_radius(cls, region, 1e-12) ==
            doctest::Approx(formula_radius(cls, region).value).epsilon(1e-9));
    }
}

TEST_CASE("solver options and errors") {
  CHECK_THROWS_AS(solve_radius(ClassId::F1, kLem, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_radius(ClassId::F4, kLem, 1e-9), NotCoveredError);
  // Without the sharper one-sided bound the F2 parabolic route degrades to
  // the symmetric-disk value (2*sqrt(3)-3)/3.
  CHECK(solve_radius(ClassId::F2, kPar, 1e-12, false) ==
        doctest::Approx((2.0 * std::sqrt(3.0) - 3.0) / 3.0).epsilon(1e-9));
  CHECK(solve_radius(ClassId::F2, kPar, 1e-12, true) ==
        doctest::Approx(std::sqrt(10.0) - 3.0).epsilon(1e-9));
}

TEST_CASE("monotonicity in the region parameters") {
  for (ClassId cls : kAllClasses) {
    double prev = 1.0;
    for (double alpha : {0.0, 0.2, 0.4, 0.6, 0.8}) {
      const double v = formula_radius(cls, Region::half_plane_min(alpha)).value;
      CHECK(v < prev);
      CHECK(v > 0.0);
      prev = v;
    }
  }
  for (ClassId cls : {ClassId::F1, ClassId::F2, ClassId::F3, ClassId::F5}) {
    double prev = 0.0;
    for (double beta : {1.2, 1.6, 2.5, 5.0}) {
      const double v = formula_radius(cls, Region::half_plane_max(beta)).value;
      CHECK(v > prev);
      CHECK(v < 1.0);
      prev = v;
    }
  }
}

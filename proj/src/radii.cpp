#include "gft/radii.hpp"

#include <cmath>
#include <numbers>

namespace gft {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

bool starlike_functional(ClassId cls) {
  return functional_kind(cls) == FunctionalKind::Starlike;
}

RadiusResult make_result(ClassId cls, const Region& region, double value,
                         bool sharp, Provenance prov, std::string form) {
  return RadiusResult{cls, region, value, sharp, prov, std::move(form)};
}

[[noreturn]] void not_covered(ClassId cls, const Region&) {
  throw NotCoveredError("no radius result in the source theorems for class " +
                        std::string(class_name(cls)) + " with this region");
}

}  // namespace

bool covered(ClassId cls, const Region& region) {
  if (starlike_functional(cls)) return true;
  return region.kind == RegionKind::HalfPlaneMin ||
         region.kind == RegionKind::Parabola;
}

RadiusResult formula_radius(ClassId cls, const Region& region) {
  if (!covered(cls, region)) not_covered(cls, region);
  const double al = region.alpha;
  const double be = region.beta;

  switch (cls) {
    case ClassId::F1:
      switch (region.kind) {
        case RegionKind::Lemniscate:
          return make_result(cls, region,
                             (kSqrt2 - 1.0) / (2.0 + std::sqrt(7.0 - 2.0 * kSqrt2)),
                             true, Provenance::Theorem,
                             "(sqrt(2)-1)/(2+sqrt(7-2*sqrt(2)))");
        case RegionKind::HalfPlaneMax:
          return make_result(cls, region,
                             (be - 1.0) / (2.0 + std::sqrt(4.0 + (be - 1.0) * (be - 1.0))),
                             true, Provenance::Theorem,
                             "(beta-1)/(2+sqrt(4+(beta-1)^2))");
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             (1.0 - al) / (2.0 + std::sqrt(5.0 + al * al - 2.0 * al)),
                             true, Provenance::Theorem,
                             "(1-alpha)/(2+sqrt(5+alpha^2-2*alpha))");
        case RegionKind::Parabola:
          return make_result(cls, region, 1.0 / (4.0 + std::sqrt(17.0)), true,
                             Provenance::Theorem, "1/(4+sqrt(17))");
      }
      break;

    case ClassId::F2:
      switch (region.kind) {
        case RegionKind::Lemniscate:
          return make_result(cls, region,
                             (4.0 - 2.0 * kSqrt2) /
                                 (kSqrt2 * (std::sqrt(17.0 - 4.0 * kSqrt2) + 3.0)),
                             true, Provenance::Theorem,
                             "(4-2*sqrt(2))/(sqrt(2)*(sqrt(17-4*sqrt(2))+3))");
        case RegionKind::HalfPlaneMax:
          return make_result(cls, region,
                             2.0 * (be - 1.0) / (3.0 + std::sqrt(9.0 + 4.0 * be * (be - 1.0))),
                             true, Provenance::Theorem,
                             "2*(beta-1)/(3+sqrt(9+4*beta*(beta-1)))");
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             2.0 * (1.0 - al) /
                                 (3.0 + std::sqrt(9.0 - 4.0 * al + 4.0 * al * al)),
                             true, Provenance::Theorem,
                             "2*(1-alpha)/(3+sqrt(9-4*alpha+4*alpha^2))");
        case RegionKind::Parabola:
          // Proven lower bound only; the sharp value is conjectured.
          return make_result(cls, region, std::sqrt(10.0) - 3.0, false,
                             Provenance::Theorem, "sqrt(10)-3");
      }
      break;

    case ClassId::F3:
      switch (region.kind) {
        case RegionKind::Lemniscate:
          return make_result(cls, region,
                             (4.0 - 2.0 * kSqrt2) /
                                 (kSqrt2 * (std::sqrt(17.0 - 4.0 * kSqrt2) + 3.0)),
                             false, Provenance::Theorem,
                             "(4-2*sqrt(2))/(sqrt(2)*(sqrt(17-4*sqrt(2))+3))");
        case RegionKind::HalfPlaneMax:
          return make_result(cls, region,
                             2.0 * (be - 1.0) / (3.0 + std::sqrt(9.0 + 4.0 * be * (be - 1.0))),
                             false, Provenance::Theorem,
                             "2*(beta-1)/(3+sqrt(9+4*beta*(beta-1)))");
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             2.0 * (1.0 - al) /
                                 (3.0 + std::sqrt(9.0 + 4.0 * (2.0 - al) * (1.0 - al))),
                             true, Provenance::Theorem,
                             "2*(1-alpha)/(3+sqrt(9+4*(2-alpha)*(1-alpha)))");
        case RegionKind::Parabola:
          return make_result(cls, region, (2.0 * std::sqrt(3.0) - 3.0) / 3.0, true,
                             Provenance::Theorem, "(2*sqrt(3)-3)/3");
      }
      break;

    case ClassId::F4:
      switch (region.kind) {
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             2.0 * (1.0 - al) /
                                 (3.0 + std::sqrt(9.0 + 4.0 * (al - 2.0) * (al - 1.0))),
                             true, Provenance::Theorem,
                             "2*(1-alpha)/(3+sqrt(9+4*(alpha-2)*(alpha-1)))");
        case RegionKind::Parabola:
          return make_result(cls, region, (2.0 * std::sqrt(3.0) - 3.0) / 3.0, true,
                             Provenance::Theorem, "(2*sqrt(3)-3)/3");
        default:
          break;
      }
      break;

    case ClassId::F5:
      switch (region.kind) {
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             (1.0 - al) / (1.0 + std::sqrt(2.0 + al * al - 2.0 * al)),
                             true, Provenance::Theorem,
                             "(1-alpha)/(1+sqrt(2+alpha^2-2*alpha))");
        case RegionKind::Parabola:
          return make_result(cls, region, 1.0 / (std::sqrt(5.0) + 2.0), true,
                             Provenance::Theorem, "1/(sqrt(5)+2)");
        case RegionKind::Lemniscate:
          return make_result(cls, region, 3.0 - 2.0 * kSqrt2, false,
                             Provenance::Theorem, "3-2*sqrt(2)");
        case RegionKind::HalfPlaneMax:
          return make_result(cls, region, (be - 1.0) / (1.0 + be), false,
                             Provenance::Theorem, "(beta-1)/(1+beta)");
      }
      break;

    case ClassId::F6:
    case ClassId::F7:
      switch (region.kind) {
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             2.0 * (1.0 - al) /
                                 (5.0 + std::sqrt(25.0 + 4.0 * al * (al - 1.0))),
                             true, Provenance::Theorem,
                             "2*(1-alpha)/(5+sqrt(25+4*alpha*(alpha-1)))");
        case RegionKind::Parabola:
          return make_result(cls, region, 5.0 - 2.0 * std::sqrt(6.0), true,
                             Provenance::Theorem, "5-2*sqrt(6)");
        default:
          break;
      }
      break;

    case ClassId::F8:
      switch (region.kind) {
        case RegionKind::HalfPlaneMin:
          return make_result(cls, region,
                             2.0 * (1.0 - al) /
                                 (3.0 + std::sqrt(9.0 + 4.0 * al * (al - 1.0))),
                             true, Provenance::Theorem,
                             "2*(1-alpha)/(3+sqrt(9+4*alpha*(alpha-1)))");
        case RegionKind::Parabola:
          return make_result(cls, region, 3.0 - 2.0 * kSqrt2, true,
                             Provenance::Theorem, "3-2*sqrt(2)");
        default:
          break;
      }
      break;
  }
  not_covered(cls, region);
}

bool conjecture_covered(ClassId cls, const Region& region) {
  if (cls == ClassId::F2) return region.kind == RegionKind::Parabola;
  if (cls == ClassId::F3 || cls == ClassId::F5)
    return region.kind == RegionKind::Lemniscate ||
           region.kind == RegionKind::HalfPlaneMax;
  return false;
}

RadiusResult conjectured_radius(ClassId cls, const Region& region) {
  if (!conjecture_covered(cls, region))
    throw NotCoveredError("no conjecture for this (class, region) pair");
  const double be = region.beta;

  if (cls == ClassId::F2) {
    auto r = make_result(cls, region, 3.0 - 2.0 * kSqrt2, true,
                         Provenance::Conjecture, "3-2*sqrt(2)");
    return r;
  }
  if (cls == ClassId::F3) {
    if (region.kind == RegionKind::Lemniscate)
      return make_result(cls, region,
                         1.5 + 1.5 / kSqrt2 - 0.5 * std::sqrt(13.5 + 7.0 * kSqrt2),
                         true, Provenance::Conjecture,
                         "3/2+3/(2*sqrt(2))-sqrt(27/2+7*sqrt(2))/2");
    return make_result(cls, region,
                       2.0 * (be - 1.0) /
                           (3.0 + std::sqrt(9.0 + 4.0 * (be - 1.0) * (be - 2.0))),
                       true, Provenance::Conjecture,
                       "2*(beta-1)/(3+sqrt(9+4*(beta-1)*(beta-2)))");
  }
  // F5
  if (region.kind == RegionKind::Lemniscate)
    return make_result(cls, region,
                       -1.0 - kSqrt2 + std::sqrt(2.0 * (2.0 + kSqrt2)), true,
                       Provenance::Conjecture, "-1-sqrt(2)+sqrt(2*(2+sqrt(2)))");
  return make_result(cls, region,
                     (be - 1.0) / (1.0 + std::sqrt(be * be + 2.0 - 2.0 * be)),
                     true, Provenance::Conjecture,
                     "(beta-1)/(1+sqrt(beta^2+2-2*beta))");
}

namespace {

// Signed fit margin of the class disk bound against the region at radius r;
// positive while the bound certifies membership.
double fit_margin(ClassId cls, const Region& region, double r, bool use_lb) {
  const DiskBound b = disk_bound(cls, r);
  switch (region.kind) {
    case RegionKind::HalfPlaneMin: {
      const double lo = (use_lb && b.lower) ? *b.lower : b.center - b.deviation;
      return lo - region.alpha;
    }
    case RegionKind::HalfPlaneMax:
      return region.beta - (b.center + b.deviation);
    case RegionKind::Lemniscate:
      if (!(b.center > 0.0 && b.center < kSqrt2)) return -1.0;
      return lemniscate_disk_radius(b.center) - b.deviation;
    case RegionKind::Parabola:
      // With a centered disk and a sharper Re-lower bound available, the
      // parabola condition |w - 1| < Re w follows from deviation <= lower.
      if (use_lb && b.lower && b.center == 1.0) return *b.lower - b.deviation;
      if (!(b.center > 0.5)) return -1.0;
      return parabola_disk_radius(b.center) - b.deviation;
  }
  return -1.0;
}

}  // namespace

double solve_radius(ClassId cls, const Region& region, double tol, bool use_lower_bound) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_radius: tol must be > 0");
  if (!covered(cls, region)) not_covered(cls, region);

  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  if (!(fit_margin(cls, region, lo, use_lower_bound) > 0.0))
    throw std::runtime_error("solve_radius: no positive margin near r = 0");
  if (fit_margin(cls, region, hi, use_lower_bound) >= 0.0)
    throw std::runtime_error("solve_radius: margin does not change sign in (0, 1)");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (fit_margin(cls, region, mid, use_lower_bound) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gft

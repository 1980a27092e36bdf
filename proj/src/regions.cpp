#include "gft/regions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gft {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kBranchKnotLem = 2.0 * std::numbers::sqrt2 / 3.0;
}  // namespace

Region Region::half_plane_min(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("half_plane_min: alpha must be in [0, 1)");
  Region r;
  r.kind = RegionKind::HalfPlaneMin;
  r.alpha = alpha;
  return r;
}

Region Region::half_plane_max(double beta) {
  if (!(beta > 1.0))
    throw std::invalid_argument("half_plane_max: beta must be > 1");
  Region r;
  r.kind = RegionKind::HalfPlaneMax;
  r.beta = beta;
  return r;
}

Region Region::parabola() {
  Region r;
  r.kind = RegionKind::Parabola;
  return r;
}

Region Region::lemniscate() {
  Region r;
  r.kind = RegionKind::Lemniscate;
  return r;
}

double margin(const Region& region, cplx w) {
  switch (region.kind) {
    case RegionKind::HalfPlaneMin:
      return w.real() - region.alpha;
    case RegionKind::HalfPlaneMax:
      return region.beta - w.real();
    case RegionKind::Parabola:
      return w.real() - std::abs(w - 1.0);
    case RegionKind::Lemniscate:
      // |w^2-1| < 1 describes two lobes meeting at the origin; the target set
      // is the right one, so the margin also has to vanish on Re w = 0.
      return std::min(1.0 - std::abs(w * w - 1.0), w.real());
  }
  return 0.0;
}

bool contains(const Region& region, cplx w) { return margin(region, w) > 0.0; }

double lemniscate_disk_radius(double a) {
  if (!(a > 0.0 && a < kSqrt2))
    throw std::domain_error("lemniscate_disk_radius: need 0 < a < sqrt(2)");
  if (a <= kBranchKnotLem) {
    const double s = std::sqrt(1.0 - a * a);
    return std::sqrt(s - (1.0 - a * a));
  }
  return kSqrt2 - a;
}

double parabola_disk_radius(double a) {
  if (!(a > 0.5))
    throw std::domain_error("parabola_disk_radius: need a > 1/2");
  if (a <= 1.5) return a - 0.5;
  return std::sqrt(2.0 * a - 2.0);
}

bool disk_in_region(const Region& region, const DiskSpec& disk) {
  switch (region.kind) {
    case RegionKind::HalfPlaneMin:
      return disk.center - disk.radius > region.alpha;
    case RegionKind::HalfPlaneMax:
      return disk.center + disk.radius < region.beta;
    case RegionKind::Parabola:
      if (!(disk.center > 0.5)) return false;
      return disk.radius < parabola_disk_radius(disk.center);
    case RegionKind::Lemniscate:
      if (!(disk.center > 0.0 && disk.center < kSqrt2)) return false;
      return disk.radius < lemniscate_disk_radius(disk.center);
  }
  return false;
}

bool verify_disk_lemma(const Region& region, double a, int n) {
  if (n < 1) throw std::invalid_argument("verify_disk_lemma: n must be >= 1");
  double r;
  switch (region.kind) {
    case RegionKind::Lemniscate:
      r = lemniscate_disk_radius(a);
      break;
    case RegionKind::Parabola:
      r = parabola_disk_radius(a);
      break;
    default:
      throw std::invalid_argument(
          "verify_disk_lemma: only Parabola and Lemniscate have disk lemmas");
  }

  const double two_pi = 2.0 * std::numbers::pi;
  double min_inflated = 1.0;
  for (int i = 0; i < n; ++i) {
    const double t = two_pi * i / n;
    const cplx dir{std::cos(t), std::sin(t)};
    if (margin(region, a + r * dir) < -1e-12) return false;
    min_inflated = std::min(min_inflated, margin(region, a + 1.001 * r * dir));
  }
  // Tightness: the slightly inflated disk must exit the region somewhere.
  return min_inflated < 0.0;
}

}  // namespace gft

#pragma once

#include <complex>

namespace gft {

using cplx = std::complex<double>;

enum class RegionKind { HalfPlaneMin, HalfPlaneMax, Parabola, Lemniscate };

// A target set in the w-plane for the tested functional (zf'/f or 1 + zf''/f').
//
//   HalfPlaneMin : Re w > alpha,            0 <= alpha < 1
//   HalfPlaneMax : Re w < beta,             beta > 1
//   Parabola     : |w - 1| < Re w
//   Lemniscate   : |w^2 - 1| < 1, Re w > 0  (right-half branch)
struct Region {
  RegionKind kind = RegionKind::HalfPlaneMin;
  double alpha = 0.0;
  double beta = 0.0;

  static Region half_plane_min(double alpha);
  static Region half_plane_max(double beta);
  static Region parabola();
  static Region lemniscate();
};

struct DiskSpec {
  double center = 0.0;
  double radius = 0.0;
};

// Signed inclusion margin: positive strictly inside, zero on the boundary,
// negative outside.  Continuous in w.
double margin(const Region& region, cplx w);

// Strict membership, i.e. margin > 0.
bool contains(const Region& region, cplx w);

// Largest r_a such that {w : |w - a| < r_a} lies inside |w^2 - 1| < 1.
// Domain 0 < a < sqrt(2); throws std::domain_error otherwise.
double lemniscate_disk_radius(double a);

// Largest R_a such that {w : |w - a| < R_a} lies inside |w - 1| < Re w.
// Domain a > 1/2; throws std::domain_error otherwise.
double parabola_disk_radius(double a);

// True iff the closed disk fits strictly inside the region.  Centers outside
// the domain of the curved-region radii yield false, not an error.
bool disk_in_region(const Region& region, const DiskSpec& disk);

// Boundary-sampling check of the disk-containment radius at center a:
// all of n equispaced boundary points satisfy margin >= -1e-12, and the disk
// inflated by a factor 1 + 1e-3 exits the region (tightness).  Only the
// Parabola and Lemniscate kinds are accepted.
bool verify_disk_lemma(const Region& region, double a, int n);

}  // namespace gft

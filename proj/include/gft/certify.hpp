#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gft/classes.hpp"
#include "gft/radii.hpp"
#include "gft/regions.hpp"

namespace gft {

struct SharpnessOutcome {
  double margin_at_radius = 0.0;  // region margin of the extremal at R
  double margin_beyond = 0.0;     // min margin on |z| = R * 1.001, expected < 0
};

// Evaluates the extremal member at its known touching point (+R for
// Lemniscate / HalfPlaneMax, -R for HalfPlaneMin / Parabola).  Requires the
// pair to be flagged sharp.
SharpnessOutcome sharpness_check(ClassId cls, const Region& region);

struct EmpiricalInterval {
  double lo = 0.0;  // largest tested r with every sampled member inside
  double hi = 0.0;  // smallest exit radius over the samples (extremal included)
};

EmpiricalInterval empirical_radius(ClassId cls, const Region& region, int members,
                                   int grid, std::uint64_t seed);

// Exit radius of the class extremal from the region: largest r such that the
// functional image of |z| = r stays inside, found by circle minimization of
// the margin plus bisection in r.  Upper bound for the sharp radius.
double conjecture_probe(ClassId cls, const Region& region);

// Minimum of the region margin of a member's functional over |z| = r
// (coarse grid plus golden-section refinement).
double circle_min_margin(const ClassMember& m, const Region& region, double r,
                         int coarse_grid = 1024);

struct CertRow {
  ClassId cls = ClassId::F1;
  Region region;
  double formula_value = 0.0;
  bool sharp = false;
  Provenance provenance = Provenance::Theorem;
  double solver_value = 0.0;
  std::optional<SharpnessOutcome> sharpness;
  EmpiricalInterval empirical;
  std::optional<double> conjecture_value;
  std::optional<double> probe_value;
  bool passed = false;
  std::string failure;
};

struct ReportConfig {
  std::vector<ClassId> classes{kAllClasses, kAllClasses + 8};
  std::vector<RegionKind> region_kinds{RegionKind::Lemniscate, RegionKind::HalfPlaneMax,
                                       RegionKind::HalfPlaneMin, RegionKind::Parabola};
  double alpha = 0.0;
  double beta = 2.0;
  int members = 200;
  int grid = 256;
  std::uint64_t seed = 2012;
  double tol = 1e-9;
};

// One row per covered (class, region) pair; per-row failures are recorded,
// not thrown.  Deterministic per seed.
std::vector<CertRow> build_report(const ReportConfig& config);

}  // namespace gft

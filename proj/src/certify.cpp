#include "gft/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double margin_at_angle(const ClassMember& m, const Region& region, double r, double t) {
  return margin(region, m.functional(cplx{r * std::cos(t), r * std::sin(t)}));
}

}  // namespace

double circle_min_margin(const ClassMember& m, const Region& region, double r,
                         int coarse_grid) {
  double best = margin_at_angle(m, region, r, 0.0);
  double best_t = 0.0;
  for (int i = 1; i < coarse_grid; ++i) {
    const double t = kTwoPi * i / coarse_grid;
    const double v = margin_at_angle(m, region, r, t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  // Golden-section refinement in the bracketing arc.
  const double step = kTwoPi / coarse_grid;
  double a = best_t - step, b = best_t + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = margin_at_angle(m, region, r, x1);
  double f2 = margin_at_angle(m, region, r, x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = margin_at_angle(m, region, r, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = margin_at_angle(m, region, r, x2);
    }
  }
  return std::min({best, f1, f2});
}

SharpnessOutcome sharpness_check(ClassId cls, const Region& region) {
  const RadiusResult res = formula_radius(cls, region);
  if (!res.sharp)
    throw std::invalid_argument("sharpness_check: pair is not flagged sharp");
  const ClassMember extremal = extremal_member(cls);
  const double radius = res.value;

  const bool at_plus = region.kind == RegionKind::Lemniscate ||
                       region.kind == RegionKind::HalfPlaneMax;
  const cplx z0{at_plus ? radius : -radius, 0.0};

  SharpnessOutcome out;
  out.margin_at_radius = margin(region, extremal.functional(z0));
  const double beyond = radius * 1.001;
  out.margin_beyond =
      beyond < 1.0 ? circle_min_margin(extremal, region, beyond, 2048) : 0.0;
  return out;
}

namespace {

bool inside_on_grid(const ClassMember& m, const Region& region, double r, int grid) {
  for (int i = 0; i < grid; ++i) {
    if (margin_at_angle(m, region, r, kTwoPi * i / grid) <= 0.0) return false;
  }
  return true;
}

// Per-member exit bracket [lo, hi]: inside at lo, outside at hi (hi capped).
std::pair<double, double> exit_bracket(const ClassMember& m, const Region& region,
                                       int grid) {
  double lo = 1e-6, hi = 0.95;
  if (!inside_on_grid(m, region, lo, grid)) return {0.0, lo};
  if (inside_on_grid(m, region, hi, grid)) return {hi, hi};
  for (int it = 0; it < 48; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (inside_on_grid(m, region, mid, grid))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace

EmpiricalInterval empirical_radius(ClassId cls, const Region& region, int members,
                                   int grid, std::uint64_t seed) {
  if (members < 1) throw std::invalid_argument("empirical_radius: members >= 1");
  if (grid < 8) throw std::invalid_argument("empirical_radius: grid too small");

  std::vector<ClassMember> pool;
  pool.reserve(static_cast<std::size_t>(members) + 1);
  pool.push_back(extremal_member(cls));
  for (int i = 0; i < members; ++i)
    pool.push_back(make_member(cls, seed + static_cast<std::uint64_t>(i)));

  EmpiricalInterval interval{1.0, 1.0};
  for (const auto& m : pool) {
    const auto [lo, hi] = exit_bracket(m, region, grid);
    interval.lo = std::min(interval.lo, lo);
    interval.hi = std::min(interval.hi, hi);
  }
  interval.lo = std::min(interval.lo, interval.hi);
  return interval;
}

double conjecture_probe(ClassId cls, const Region& region) {
  if (!conjecture_covered(cls, region))
    throw NotCoveredError("conjecture_probe: pair has no conjecture");
  const ClassMember extremal = extremal_member(cls);

  double lo = 1e-6, hi = 0.98;
  if (!(circle_min_margin(extremal, region, lo) > 0.0))
    throw std::runtime_error("conjecture_probe: extremal exits immediately");
  if (circle_min_margin(extremal, region, hi) > 0.0) return hi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    if (circle_min_margin(extremal, region, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

Region region_for(RegionKind kind, const ReportConfig& config) {
  switch (kind) {
    case RegionKind::HalfPlaneMin:
      return Region::half_plane_min(config.alpha);
    case RegionKind::HalfPlaneMax:
      return Region::half_plane_max(config.beta);
    case RegionKind::Parabola:
      return Region::parabola();
    case RegionKind::Lemniscate:
      return Region::lemniscate();
  }
  return Region::parabola();
}

void append_failure(CertRow& row, const std::string& text) {
  row.passed = false;
  if (!row.failure.empty()) row.failure += "; ";
  row.failure += text;
}

}  // namespace

std::vector<CertRow> build_report(const ReportConfig& config) {
  std::vector<CertRow> rows;
  for (ClassId cls : config.classes) {
    for (RegionKind kind : config.region_kinds) {
      const Region region = region_for(kind, config);
      if (!covered(cls, region)) continue;

      CertRow row;
      row.cls = cls;
      row.region = region;
      row.passed = true;
      try {
        const RadiusResult formula = formula_radius(cls, region);
        row.formula_value = formula.value;
        row.sharp = formula.sharp;
        row.provenance = formula.provenance;

        row.solver_value = solve_radius(cls, region, config.tol * 1e-2);
        if (std::abs(row.solver_value - row.formula_value) > config.tol)
          append_failure(row, "solver disagrees with formula");

        if (formula.sharp) {
          row.sharpness = sharpness_check(cls, region);
          if (std::abs(row.sharpness->margin_at_radius) > 1e-8)
            append_failure(row, "extremal margin at R not ~0");
          if (!(row.sharpness->margin_beyond < -1e-10))
            append_failure(row, "extremal does not exit just past R");
        }

        row.empirical =
            empirical_radius(cls, region, config.members, config.grid, config.seed);
        if (row.formula_value > row.empirical.hi + 1e-6)
          append_failure(row, "sampled member exits below the proven radius");

        if (conjecture_covered(cls, region)) {
          row.conjecture_value = conjectured_radius(cls, region).value;
          row.probe_value = conjecture_probe(cls, region);
          if (row.formula_value > *row.probe_value + 1e-9)
            append_failure(row, "proven value exceeds the probe upper bound");
          if (*row.probe_value > row.empirical.hi + 1e-6)
            append_failure(row, "probe exceeds the empirical upper estimate");
        }
      } catch (const std::exception& e) {
        append_failure(row, std::string("exception: ") + e.what());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace gft

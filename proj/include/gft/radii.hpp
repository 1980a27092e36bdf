#pragma once

#include <stdexcept>
#include <string>

#include "gft/classes.hpp"
#include "gft/regions.hpp"

namespace gft {

enum class Provenance { Theorem, Conjecture };

struct RadiusResult {
  ClassId cls = ClassId::F1;
  Region region;
  double value = 0.0;
  bool sharp = false;
  Provenance provenance = Provenance::Theorem;
  std::string closed_form;
};

struct NotCoveredError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The starlike-functional classes (F1, F2, F3, F5) are covered for all four
// region kinds; the convex-functional classes (F4, F6, F7, F8) for
// HalfPlaneMin (order-alpha convexity) and Parabola (uniform convexity).
bool covered(ClassId cls, const Region& region);

// Closed-form radius from the printed expression, with sharpness flag.
// Throws NotCoveredError for uncovered pairs.
RadiusResult formula_radius(ClassId cls, const Region& region);

bool conjecture_covered(ClassId cls, const Region& region);

// Conjectured sharp value for the non-sharp pairs.
RadiusResult conjectured_radius(ClassId cls, const Region& region);

// Independent re-derivation: bisection on the disk-fit margin of the class
// disk bound against the region (using the sharper lower bound in place of
// center - deviation when the class defines one and use_lower_bound is set).
double solve_radius(ClassId cls, const Region& region, double tol,
                    bool use_lower_bound = true);

}  // namespace gft

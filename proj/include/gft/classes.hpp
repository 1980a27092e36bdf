#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gft/herglotz.hpp"
#include "gft/regions.hpp"

namespace gft {

// The eight classes, each defined by a ratio constraint against a companion
// function g:
//   F1: Re(f/g) > 0,      Re(g/z) > 0        (functional zf'/f)
//   F2: Re(f/g) > 0,      Re(g/z) > 1/2      (functional zf'/f)
//   F3: |f/g - 1| < 1,    Re(g/z) > 0        (functional zf'/f)
//   F4: |f'/g' - 1| < 1,  Re g' > 0          (functional 1 + zf''/f')
//   F5: |f/g - 1| < 1,    g convex           (functional zf'/f)
//   F6: |f'/g' - 1| < 1,  g univalent        (functional 1 + zf''/f')
//   F7: |f'/g' - 1| < 1,  g starlike         (functional 1 + zf''/f')
//   F8: |f'/g' - 1| < 1,  g convex           (functional 1 + zf''/f')
enum class ClassId { F1, F2, F3, F4, F5, F6, F7, F8 };

enum class FunctionalKind { Starlike, Convex };

FunctionalKind functional_kind(ClassId id);
std::string_view class_name(ClassId id);
std::optional<ClassId> parse_class(std::string_view name);

inline constexpr ClassId kAllClasses[] = {ClassId::F1, ClassId::F2, ClassId::F3,
                                          ClassId::F4, ClassId::F5, ClassId::F6,
                                          ClassId::F7, ClassId::F8};

// Per-class bound on the functional over |z| = r: it lies in the disk
// |w - center| <= deviation, and when `lower` is present Re w >= lower as
// well (a sharper one-sided bound with a bounded validity range in r).
struct DiskBound {
  double center = 1.0;
  double deviation = 0.0;
  std::optional<double> lower;
};

DiskBound disk_bound(ClassId id, double r);

// Largest r for which the sharper lower bound of F2 is available.
double lower_bound_max_r();

// A concrete (f, g) pair with exact evaluators for f, its derivatives and
// the tested functional.  Immutable after construction.
class ClassMember {
 public:
  ClassId id() const;
  cplx functional(cplx z) const;  // zf'/f or 1 + zf''/f'
  cplx f(cplx z) const;
  cplx f_prime(cplx z) const;
  cplx f_second(cplx z) const;    // convex-functional classes only

  struct Impl;
  explicit ClassMember(std::shared_ptr<const Impl> impl);

 private:
  std::shared_ptr<const Impl> impl_;
};

// Assemble a member from explicit Herglotz measures.  The first measure
// drives the companion piece (p = g/z, g' or g itself depending on the
// class), the second the linking ratio.  Membership constraints are checked
// on a 64-point grid of |z| = 0.95 at construction.
ClassMember assemble_member(ClassId id, const HerglotzMeasure& companion,
                            const HerglotzMeasure& ratio);

// Random member, deterministic per seed.
ClassMember make_member(ClassId id, std::uint64_t seed);

// The designated extremal pair for the class, with closed-form functional.
ClassMember extremal_member(ClassId id);

cplx eval_functional(const ClassMember& m, cplx z);

}  // namespace gft

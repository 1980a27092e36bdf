#include "gft/classes.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kConstraintTol = 1e-9;
constexpr int kConstraintGrid = 64;
constexpr double kConstraintRadius = 0.95;

using Fn = std::function<cplx(cplx)>;

// Gauss-Legendre nodes/weights on [0, 1], computed once.
struct GaussRule {
  std::array<double, 12> node{};
  std::array<double, 12> weight{};
  GaussRule() {
    const int n = 12;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
          const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      node[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
      weight[static_cast<std::size_t>(i)] = 0.5 * w;
      node[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + x);
      weight[static_cast<std::size_t>(n - 1 - i)] = 0.5 * w;
    }
  }
};

// f(z) = z * int_0^1 f'(tz) dt.  f' is analytic in the disk, so a composite
// rule on the radial segment converges fast; used only for the classes whose
// f has no elementary closed form.
cplx integrate_from_derivative(const Fn& fprime, cplx z) {
  static const GaussRule rule;
  const int panels = 40;
  cplx acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = static_cast<double>(p) / panels;
    for (std::size_t i = 0; i < rule.node.size(); ++i) {
      const double t = a + rule.node[i] / panels;
      acc += rule.weight[i] / panels * fprime(t * z);
    }
  }
  return z * acc;
}

}  // namespace

FunctionalKind functional_kind(ClassId id) {
  switch (id) {
    case ClassId::F4:
    case ClassId::F6:
    case ClassId::F7:
    case ClassId::F8:
      return FunctionalKind::Convex;
    default:
      return FunctionalKind::Starlike;
  }
}

std::string_view class_name(ClassId id) {
  switch (id) {
    case ClassId::F1: return "F1";
    case ClassId::F2: return "F2";
    case ClassId::F3: return "F3";
    case ClassId::F4: return "F4";
    case ClassId::F5: return "F5";
    case ClassId::F6: return "F6";
    case ClassId::F7: return "F7";
    case ClassId::F8: return "F8";
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'F' || name[0] == 'f') &&
      name[1] >= '1' && name[1] <= '8')
    return static_cast<ClassId>(name[1] - '1');
  return std::nullopt;
}

double lower_bound_max_r() { return p_half_lower_max_r(); }

DiskBound disk_bound(ClassId id, double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("disk_bound: need 0 < r < 1");
  const double d = 1.0 - r * r;
  DiskBound b;
  switch (id) {
    case ClassId::F1:
      b = {1.0, 4.0 * r / d, std::nullopt};
      break;
    case ClassId::F2:
      b = {1.0, (3.0 * r + r * r) / d, std::nullopt};
      if (r <= p_half_lower_max_r())
        b.lower = 1.0 - 2.0 * r / d + p_half_logderiv_lower(r);
      break;
    case ClassId::F3:
    case ClassId::F4:
      b = {1.0, (3.0 * r + r * r) / d, std::nullopt};
      break;
    case ClassId::F5:
      b = {1.0 / d, (2.0 * r + r * r) / d, std::nullopt};
      break;
    case ClassId::F6:
    case ClassId::F7:
      b = {(1.0 + r * r) / d, (5.0 * r + r * r) / d, std::nullopt};
      break;
    case ClassId::F8:
      b = {(1.0 + r * r) / d, (3.0 * r + r * r) / d, std::nullopt};
      break;
  }
  return b;
}

struct ClassMember::Impl {
  ClassId id;
  Fn functional_fn;
  Fn f_fn;
  Fn fprime_fn;
  Fn fsecond_fn;  // empty for starlike-functional classes
};

ClassMember::ClassMember(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ClassId ClassMember::id() const { return impl_->id; }
cplx ClassMember::functional(cplx z) const { return impl_->functional_fn(z); }
cplx ClassMember::f(cplx z) const { return impl_->f_fn(z); }
cplx ClassMember::f_prime(cplx z) const { return impl_->fprime_fn(z); }

cplx ClassMember::f_second(cplx z) const {
  if (!impl_->fsecond_fn)
    throw std::logic_error("f_second: only available for convex-functional classes");
  return impl_->fsecond_fn(z);
}

cplx eval_functional(const ClassMember& m, cplx z) { return m.functional(z); }

namespace {

struct ConstraintCheck {
  // ratio(z) must satisfy |ratio - 1| < 1 (equivalently the companion
  // condition when phrased through Re); companion(z) must have Re > floor.
  Fn ratio_minus_one_abs;  // returns |expr|, checked < 1 + tol
  Fn companion_re;         // returns Re expr, checked > floor - tol
  double floor = 0.0;
};

void run_constraint_check(ClassId id, const ConstraintCheck& c) {
  for (int i = 0; i < kConstraintGrid; ++i) {
    const double t = kTwoPi * i / kConstraintGrid;
    const cplx z{kConstraintRadius * std::cos(t), kConstraintRadius * std::sin(t)};
    if (c.ratio_minus_one_abs &&
        !(std::abs(c.ratio_minus_one_abs(z)) < 1.0 + kConstraintTol))
      throw std::logic_error(std::string("membership constraint failed for ") +
                             std::string(class_name(id)));
    if (c.companion_re && !(c.companion_re(z).real() > c.floor - kConstraintTol))
      throw std::logic_error(std::string("companion constraint failed for ") +
                             std::string(class_name(id)));
  }
}

std::shared_ptr<const ClassMember::Impl> build_product_member(
    ClassId id, const HerglotzMeasure& companion, const HerglotzMeasure& ratio,
    double companion_order, int ratio_sign) {
  // f(z) = z p(z) h(z)^{+-1}; zf'/f = 1 + zp'/p +- zh'/h.
  auto p = std::make_shared<CaratheodoryFunction>(CaratheodoryFunction{companion, companion_order});
  auto h = std::make_shared<CaratheodoryFunction>(
      CaratheodoryFunction{ratio, ratio_sign > 0 ? 0.0 : 0.5});
  const double sgn = ratio_sign > 0 ? 1.0 : -1.0;

  auto impl = std::make_shared<ClassMember::Impl>();
  impl->id = id;
  impl->functional_fn = [p, h, sgn](cplx z) {
    return 1.0 + eval_zlogderiv(*p, z) + sgn * eval_zlogderiv(*h, z);
  };
  if (ratio_sign > 0) {
    impl->f_fn = [p, h](cplx z) { return z * eval_p(*p, z) * eval_p(*h, z); };
    impl->fprime_fn = [p, h](cplx z) {
      return eval_p(*p, z) * eval_p(*h, z) + z * eval_p_deriv(*p, z) * eval_p(*h, z) +
             z * eval_p(*p, z) * eval_p_deriv(*h, z);
    };
  } else {
    impl->f_fn = [p, h](cplx z) { return z * eval_p(*p, z) / eval_p(*h, z); };
    impl->fprime_fn = [p, h](cplx z) {
      const cplx pv = eval_p(*p, z), hv = eval_p(*h, z);
      return (pv * hv + z * eval_p_deriv(*p, z) * hv - z * pv * eval_p_deriv(*h, z)) /
             (hv * hv);
    };
  }

  ConstraintCheck check;
  if (ratio_sign > 0) {
    // Re(f/g) > 0 with g = z p.
    auto f_fn = impl->f_fn;
    check.companion_re = [f_fn, p](cplx z) { return f_fn(z) / (z * eval_p(*p, z)); };
    check.floor = 0.0;
    run_constraint_check(id, check);
    ConstraintCheck check2;
    check2.companion_re = [p](cplx z) { return eval_p(*p, z); };
    check2.floor = companion_order;
    run_constraint_check(id, check2);
  } else {
    auto f_fn = impl->f_fn;
    check.ratio_minus_one_abs = [f_fn, p](cplx z) {
      return f_fn(z) / (z * eval_p(*p, z)) - 1.0;
    };
    check.companion_re = [p](cplx z) { return eval_p(*p, z); };
    check.floor = companion_order;
    run_constraint_check(id, check);
  }
  return impl;
}

std::shared_ptr<const ClassMember::Impl> build_f4_member(
    const HerglotzMeasure& companion, const HerglotzMeasure& ratio) {
  auto p = std::make_shared<CaratheodoryFunction>(CaratheodoryFunction{companion, 0.0});
  auto h = std::make_shared<CaratheodoryFunction>(CaratheodoryFunction{ratio, 0.5});

  auto impl = std::make_shared<ClassMember::Impl>();
  impl->id = ClassId::F4;
  impl->functional_fn = [p, h](cplx z) {
    return 1.0 + eval_zlogderiv(*p, z) - eval_zlogderiv(*h, z);
  };
  impl->fprime_fn = [p, h](cplx z) { return eval_p(*p, z) / eval_p(*h, z); };
  impl->fsecond_fn = [p, h](cplx z) {
    const cplx pv = eval_p(*p, z), hv = eval_p(*h, z);
    return (eval_p_deriv(*p, z) * hv - pv * eval_p_deriv(*h, z)) / (hv * hv);
  };
  auto fprime = impl->fprime_fn;
  impl->f_fn = [fprime](cplx z) { return integrate_from_derivative(fprime, z); };

  ConstraintCheck check;
  check.ratio_minus_one_abs = [fprime, p](cplx z) { return fprime(z) / eval_p(*p, z) - 1.0; };
  check.companion_re = [p](cplx z) { return eval_p(*p, z); };
  run_constraint_check(ClassId::F4, check);
  return impl;
}

std::shared_ptr<const ClassMember::Impl> build_f5_member(
    const HerglotzMeasure& companion, const HerglotzMeasure& ratio) {
  auto g = std::make_shared<ConvexMember>(companion);
  auto h = std::make_shared<CaratheodoryFunction>(CaratheodoryFunction{ratio, 0.5});

  auto impl = std::make_shared<ClassMember::Impl>();
  impl->id = ClassId::F5;
  impl->functional_fn = [g, h](cplx z) {
    return g->zlogderiv(z) - eval_zlogderiv(*h, z);
  };
  impl->f_fn = [g, h](cplx z) { return g->g(z) / eval_p(*h, z); };
  impl->fprime_fn = [g, h](cplx z) {
    const cplx hv = eval_p(*h, z);
    return (g->g_prime(z) * hv - g->g(z) * eval_p_deriv(*h, z)) / (hv * hv);
  };

  ConstraintCheck check;
  auto f_fn = impl->f_fn;
  check.ratio_minus_one_abs = [f_fn, g](cplx z) { return f_fn(z) / g->g(z) - 1.0; };
  check.companion_re = [g](cplx z) { return g->zlogderiv(z); };
  check.floor = 0.5;  // Marx-Strohhacker: convex g has Re zg'/g > 1/2
  run_constraint_check(ClassId::F5, check);
  return impl;
}

std::shared_ptr<const ClassMember::Impl> build_deriv_ratio_member(
    ClassId id, const HerglotzMeasure& companion, const HerglotzMeasure& ratio) {
  // F6/F7: f' = g'/h with g starlike; F8: f' = g'/h with g convex.
  auto h = std::make_shared<CaratheodoryFunction>(CaratheodoryFunction{ratio, 0.5});
  auto impl = std::make_shared<ClassMember::Impl>();
  impl->id = id;

  Fn gprime, z_second_over_first, companion_re;
  double companion_floor = 0.0;
  if (id == ClassId::F8) {
    auto g = std::make_shared<ConvexMember>(companion);
    gprime = [g](cplx z) { return g->g_prime(z); };
    z_second_over_first = [g](cplx z) { return g->z_second_over_first(z); };
    companion_re = [g](cplx z) { return 1.0 + g->z_second_over_first(z); };
  } else {
    auto g = std::make_shared<StarlikeMember>(companion, 0.0);
    gprime = [g](cplx z) { return g->g_prime(z); };
    z_second_over_first = [g](cplx z) { return g->z_second_over_first(z); };
    companion_re = [g](cplx z) { return g->zlogderiv(z); };
  }

  impl->functional_fn = [z_second_over_first, h](cplx z) {
    return 1.0 + z_second_over_first(z) - eval_zlogderiv(*h, z);
  };
  impl->fprime_fn = [gprime, h](cplx z) { return gprime(z) / eval_p(*h, z); };
  auto functional = impl->functional_fn;
  auto fprime = impl->fprime_fn;
  impl->fsecond_fn = [functional, fprime, h, z_second_over_first](cplx z) {
    if (z == cplx{0.0, 0.0}) {
      // f''(0) = lim (w(z)-1)/z with w the convex functional.
      const double eps = 1e-7;
      return (functional(cplx{eps, 0.0}) - functional(cplx{-eps, 0.0})) / (2.0 * eps);
    }
    return fprime(z) * (functional(z) - 1.0) / z;
  };
  impl->f_fn = [fprime](cplx z) { return integrate_from_derivative(fprime, z); };

  ConstraintCheck check;
  check.ratio_minus_one_abs = [fprime, gprime](cplx z) {
    return fprime(z) / gprime(z) - 1.0;
  };
  check.companion_re = companion_re;
  check.floor = companion_floor;
  run_constraint_check(id, check);
  return impl;
}

}  // namespace

ClassMember assemble_member(ClassId id, const HerglotzMeasure& companion,
                            const HerglotzMeasure& ratio) {
  switch (id) {
    case ClassId::F1:
      return ClassMember(build_product_member(id, companion, ratio, 0.0, +1));
    case ClassId::F2:
      return ClassMember(build_product_member(id, companion, ratio, 0.5, +1));
    case ClassId::F3:
      return ClassMember(build_product_member(id, companion, ratio, 0.0, -1));
    case ClassId::F4:
      return ClassMember(build_f4_member(companion, ratio));
    case ClassId::F5:
      return ClassMember(build_f5_member(companion, ratio));
    case ClassId::F6:
    case ClassId::F7:
    case ClassId::F8:
      return ClassMember(build_deriv_ratio_member(id, companion, ratio));
  }
  throw std::invalid_argument("assemble_member: unknown class");
}

ClassMember make_member(ClassId id, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int k1 = 1 + static_cast<int>(rng() % 8);
  const int k2 = 1 + static_cast<int>(rng() % 8);
  const auto m1 = sample_measure(rng(), k1);
  const auto m2 = sample_measure(rng(), k2);
  return assemble_member(id, m1, m2);
}

namespace {

std::shared_ptr<const ClassMember::Impl> extremal_impl(ClassId id) {
  auto impl = std::make_shared<ClassMember::Impl>();
  impl->id = id;

  auto starlike_fprime = [](Fn f, Fn w) {
    return [f = std::move(f), w = std::move(w)](cplx z) -> cplx {
      if (z == cplx{0.0, 0.0}) return 1.0;
      return f(z) * w(z) / z;
    };
  };
  auto convex_fsecond = [](Fn fprime, Fn w, double w_deriv0) {
    return [fprime = std::move(fprime), w = std::move(w), w_deriv0](cplx z) -> cplx {
      if (z == cplx{0.0, 0.0}) return w_deriv0;
      return fprime(z) * (w(z) - 1.0) / z;
    };
  };

  switch (id) {
    case ClassId::F1:
      impl->functional_fn = [](cplx z) { return 1.0 + 4.0 * z / (1.0 - z * z); };
      impl->f_fn = [](cplx z) {
        const cplx q = (1.0 + z) / (1.0 - z);
        return z * q * q;
      };
      impl->fprime_fn = starlike_fprime(impl->f_fn, impl->functional_fn);
      break;
    case ClassId::F2:
      impl->functional_fn = [](cplx z) { return (1.0 + 3.0 * z) / (1.0 - z * z); };
      impl->f_fn = [](cplx z) { return z * (1.0 + z) / ((1.0 - z) * (1.0 - z)); };
      impl->fprime_fn = starlike_fprime(impl->f_fn, impl->functional_fn);
      break;
    case ClassId::F3:
      impl->functional_fn = [](cplx z) {
        return (1.0 + 3.0 * z - 2.0 * z * z) / (1.0 - z * z);
      };
      impl->f_fn = [](cplx z) { return z * (1.0 + z) * (1.0 + z) / (1.0 - z); };
      impl->fprime_fn = starlike_fprime(impl->f_fn, impl->functional_fn);
      break;
    case ClassId::F4:
      impl->functional_fn = [](cplx z) {
        return (1.0 + 3.0 * z - 2.0 * z * z) / (1.0 - z * z);
      };
      impl->fprime_fn = [](cplx z) { return (1.0 + z) * (1.0 + z) / (1.0 - z); };
      impl->f_fn = [](cplx z) {
        return -z * z / 2.0 - 3.0 * z - 4.0 * std::log(1.0 - z);
      };
      impl->fsecond_fn = convex_fsecond(impl->fprime_fn, impl->functional_fn, 3.0);
      break;
    case ClassId::F5:
      impl->functional_fn = [](cplx z) {
        return (1.0 + 2.0 * z - z * z) / (1.0 - z * z);
      };
      impl->f_fn = [](cplx z) { return z * (1.0 + z) / (1.0 - z); };
      impl->fprime_fn = starlike_fprime(impl->f_fn, impl->functional_fn);
      break;
    case ClassId::F6:
    case ClassId::F7:
      impl->functional_fn = [](cplx z) { return (1.0 + 5.0 * z) / (1.0 - z * z); };
      impl->fprime_fn = [](cplx z) {
        const cplx u = 1.0 - z;
        return (1.0 + z) * (1.0 + z) / (u * u * u);
      };
      impl->f_fn = [](cplx z) {
        const cplx u = 1.0 - z;
        return 2.0 / (u * u) - 4.0 / u - std::log(u) + 2.0;
      };
      impl->fsecond_fn = convex_fsecond(impl->fprime_fn, impl->functional_fn, 5.0);
      break;
    case ClassId::F8:
      impl->functional_fn = [](cplx z) { return (1.0 + 3.0 * z) / (1.0 - z * z); };
      impl->fprime_fn = [](cplx z) {
        const cplx u = 1.0 - z;
        return (1.0 + z) / (u * u);
      };
      impl->f_fn = [](cplx z) { return 2.0 / (1.0 - z) + std::log(1.0 - z) - 2.0; };
      impl->fsecond_fn = convex_fsecond(impl->fprime_fn, impl->functional_fn, 3.0);
      break;
  }
  return impl;
}

}  // namespace

ClassMember extremal_member(ClassId id) { return ClassMember(extremal_impl(id)); }

}  // namespace gft

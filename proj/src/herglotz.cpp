#include "gft/herglotz.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace gft {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Truncation order for convex-member series: (N+2) * 0.99^(N+1) / 0.01,
// a majorant for the tail of sum (n+1) r^n at r = 0.99, is below 1e-12.
constexpr int kConvexSeriesOrder = 4200;

void require_in_disk(cplx z) {
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("evaluation point must satisfy |z| < 1");
}

// Principal-branch power of 1 - x*z.  The base never meets (-inf, 0] for
// |z| < 1; that is checked, not assumed.
cplx one_minus_xz_pow(cplx x, cplx z, double exponent) {
  const cplx base = 1.0 - x * z;
  if (!(base.real() > 0.0))
    throw std::logic_error("1 - x*z left the right half-plane");
  return std::exp(exponent * std::log(base));
}

cplx eval_q(const HerglotzMeasure& m, cplx z) {
  cplx s = 0.0;
  for (const auto& a : m.atoms) s += a.weight * (1.0 + a.node * z) / (1.0 - a.node * z);
  return s;
}

cplx eval_q_deriv(const HerglotzMeasure& m, cplx z) {
  cplx s = 0.0;
  for (const auto& a : m.atoms) {
    const cplx d = 1.0 - a.node * z;
    s += a.weight * 2.0 * a.node / (d * d);
  }
  return s;
}

}  // namespace

void HerglotzMeasure::validate() const {
  if (atoms.empty())
    throw std::invalid_argument("HerglotzMeasure: at least one atom required");
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!(a.weight > 0.0))
      throw std::invalid_argument("HerglotzMeasure: weights must be positive");
    if (std::abs(std::abs(a.node) - 1.0) > 1e-12)
      throw std::invalid_argument("HerglotzMeasure: nodes must be unimodular");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("HerglotzMeasure: weights must sum to 1");
}

HerglotzMeasure single_atom(cplx node) {
  HerglotzMeasure m;
  m.atoms.push_back({1.0, node});
  m.validate();
  return m;
}

HerglotzMeasure sample_measure(std::uint64_t seed, int k) {
  if (k < 1) throw std::invalid_argument("sample_measure: k must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Flat simplex via normalized exponentials.
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& wi : w) {
    wi = -std::log1p(-unit(rng));
    total += wi;
  }

  HerglotzMeasure m;
  m.atoms.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const double t = kTwoPi * unit(rng);
    m.atoms.push_back({w[static_cast<std::size_t>(i)] / total,
                       cplx{std::cos(t), std::sin(t)}});
  }
  m.validate();
  return m;
}

cplx eval_p(const CaratheodoryFunction& p, cplx z) {
  require_in_disk(z);
  return p.order + (1.0 - p.order) * eval_q(p.measure, z);
}

cplx eval_p_deriv(const CaratheodoryFunction& p, cplx z) {
  require_in_disk(z);
  return (1.0 - p.order) * eval_q_deriv(p.measure, z);
}

cplx eval_zlogderiv(const CaratheodoryFunction& p, cplx z) {
  require_in_disk(z);
  const cplx pv = p.order + (1.0 - p.order) * eval_q(p.measure, z);
  if (std::abs(pv) < 1e-14)
    throw std::runtime_error("eval_zlogderiv: p(z) vanishes to working precision");
  return z * (1.0 - p.order) * eval_q_deriv(p.measure, z) / pv;
}

StarlikeMember::StarlikeMember(HerglotzMeasure measure, double alpha)
    : measure_(std::move(measure)), alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw std::invalid_argument("StarlikeMember: alpha must be in [0, 1)");
  measure_.validate();
}

cplx StarlikeMember::g(cplx z) const {
  require_in_disk(z);
  cplx prod = 1.0;
  for (const auto& a : measure_.atoms)
    prod *= one_minus_xz_pow(a.node, z, -2.0 * (1.0 - alpha_) * a.weight);
  return z * prod;
}

cplx StarlikeMember::zlogderiv(cplx z) const {
  require_in_disk(z);
  return alpha_ + (1.0 - alpha_) * eval_q(measure_, z);
}

cplx StarlikeMember::g_prime(cplx z) const {
  if (z == cplx{0.0, 0.0}) return 1.0;
  return g(z) * zlogderiv(z) / z;
}

cplx StarlikeMember::z_second_over_first(cplx z) const {
  // zg''/g' = S - 1 + zS'/S with S = zg'/g.
  const cplx s = zlogderiv(z);
  const cplx zs_deriv = (1.0 - alpha_) * z * eval_q_deriv(measure_, z);
  return s - 1.0 + zs_deriv / s;
}

StarlikeMember starlike_member(const HerglotzMeasure& m, double alpha) {
  return StarlikeMember(m, alpha);
}

ConvexMember::ConvexMember(HerglotzMeasure measure) : measure_(std::move(measure)) {
  measure_.validate();
  const std::size_t k = measure_.atoms.size();

  // g' satisfies P(z) g'' = Q(z) g' with P = prod (1 - x_j z) and
  // Q = sum_k 2 w_k x_k prod_{j != k} (1 - x_j z), which turns the series
  // for g' into a short recurrence.
  std::vector<cplx> pc{1.0};
  for (const auto& a : measure_.atoms) {
    std::vector<cplx> next(pc.size() + 1, 0.0);
    for (std::size_t i = 0; i < pc.size(); ++i) {
      next[i] += pc[i];
      next[i + 1] -= a.node * pc[i];
    }
    pc = std::move(next);
  }
  std::vector<cplx> qc(k, 0.0);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<cplx> part{2.0 * measure_.atoms[t].weight * measure_.atoms[t].node};
    for (std::size_t j = 0; j < k; ++j) {
      if (j == t) continue;
      std::vector<cplx> next(part.size() + 1, 0.0);
      for (std::size_t i = 0; i < part.size(); ++i) {
        next[i] += part[i];
        next[i + 1] -= measure_.atoms[j].node * part[i];
      }
      part = std::move(next);
    }
    for (std::size_t i = 0; i < part.size(); ++i) qc[i] += part[i];
  }

  std::vector<cplx> a(kConvexSeriesOrder + 1, 0.0);
  a[0] = 1.0;
  for (int m = 0; m < kConvexSeriesOrder; ++m) {
    cplx rhs = 0.0;
    for (std::size_t i = 0; i < qc.size(); ++i) {
      const int idx = m - static_cast<int>(i);
      if (idx >= 0) rhs += qc[i] * a[static_cast<std::size_t>(idx)];
    }
    for (std::size_t i = 1; i < pc.size(); ++i) {
      const int idx = m - static_cast<int>(i) + 1;
      if (idx >= 0)
        rhs -= pc[i] * static_cast<double>(idx) * a[static_cast<std::size_t>(idx)];
    }
    a[static_cast<std::size_t>(m) + 1] = rhs / static_cast<double>(m + 1);
  }

  g_coeffs_.assign(static_cast<std::size_t>(kConvexSeriesOrder) + 2, 0.0);
  for (int n = 1; n <= kConvexSeriesOrder + 1; ++n)
    g_coeffs_[static_cast<std::size_t>(n)] =
        a[static_cast<std::size_t>(n - 1)] / static_cast<double>(n);
}

cplx ConvexMember::g(cplx z) const {
  if (!(std::abs(z) <= 0.99))
    throw std::domain_error("ConvexMember: evaluation restricted to |z| <= 0.99");
  cplx acc = 0.0;
  for (std::size_t n = g_coeffs_.size(); n-- > 1;) acc = acc * z + g_coeffs_[n];
  return acc * z;
}

cplx ConvexMember::g_prime(cplx z) const {
  if (!(std::abs(z) <= 0.99))
    throw std::domain_error("ConvexMember: evaluation restricted to |z| <= 0.99");
  cplx prod = 1.0;
  for (const auto& a : measure_.atoms)
    prod *= one_minus_xz_pow(a.node, z, -2.0 * a.weight);
  return prod;
}

cplx ConvexMember::zlogderiv(cplx z) const {
  if (z == cplx{0.0, 0.0}) return 1.0;
  return z * g_prime(z) / g(z);
}

cplx ConvexMember::z_second_over_first(cplx z) const {
  if (!(std::abs(z) <= 0.99))
    throw std::domain_error("ConvexMember: evaluation restricted to |z| <= 0.99");
  return eval_q(measure_, z) - 1.0;
}

ConvexMember convex_member(const HerglotzMeasure& m) { return ConvexMember(m); }

double p_half_lower_max_r() { return std::sqrt(8.0 * std::numbers::sqrt2 - 11.0); }

double p_half_logderiv_lower(double r) {
  if (!(r > 0.0 && r <= p_half_lower_max_r()))
    throw std::domain_error("p_half_logderiv_lower: r outside (0, sqrt(8*sqrt(2)-11)]");
  if (r < 1.0 / 3.0) return -r / (1.0 + r);
  const double s = std::numbers::sqrt2 - std::sqrt(1.0 - r * r);
  return -(s * s) / (1.0 - r * r);
}

namespace {

template <typename F>
bool all_on_circle(double r, int n, F&& ok) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("need 0 < r < 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    if (!ok(cplx{r * std::cos(t), r * std::sin(t)})) return false;
  }
  return true;
}

}  // namespace

bool check_growth_lemma(const CaratheodoryFunction& p, double r, int n) {
  const double al = p.order;
  const double center = (1.0 + (1.0 - 2.0 * al) * r * r) / (1.0 - r * r);
  const double dev = 2.0 * (1.0 - al) * r / (1.0 - r * r);
  return all_on_circle(r, n, [&](cplx z) {
    return std::abs(eval_p(p, z) - center) <= dev + 1e-10;
  });
}

bool check_logderiv_lemma(const CaratheodoryFunction& p, double r, int n) {
  const double al = p.order;
  const double bound = 2.0 * r * (1.0 - al) / ((1.0 - r) * (1.0 + (1.0 - 2.0 * al) * r));
  return all_on_circle(r, n, [&](cplx z) {
    return std::abs(eval_zlogderiv(p, z)) <= bound + 1e-10;
  });
}

bool check_logderiv_lower(const CaratheodoryFunction& p, double r, int n) {
  if (std::abs(p.order - 0.5) > 1e-12)
    throw std::invalid_argument("check_logderiv_lower: p must have order 1/2");
  const double bound = p_half_logderiv_lower(r);
  return all_on_circle(r, n, [&](cplx z) {
    return eval_zlogderiv(p, z).real() >= bound - 1e-10;
  });
}

}  // namespace gft

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gft/regions.hpp"

namespace gft {

struct HerglotzAtom {
  double weight = 0.0;
  cplx node{1.0, 0.0};
};

// Finite atomic probability measure on the unit circle.  Convex combinations
// of the half-plane maps (1 + xz)/(1 - xz) over the atoms give functions of
// positive real part with exact closed-form derivatives.
struct HerglotzMeasure {
  std::vector<HerglotzAtom> atoms;

  // Throws std::invalid_argument unless the weights sum to 1 and every node
  // is unimodular, both to 1e-12.
  void validate() const;
};

HerglotzMeasure single_atom(cplx node);

// Deterministic per seed: weights from the flat simplex distribution,
// nodes uniform on the unit circle.  k must be >= 1.
HerglotzMeasure sample_measure(std::uint64_t seed, int k);

// p(z) = alpha + (1 - alpha) sum_k w_k (1 + x_k z)/(1 - x_k z),
// so p(0) = 1 and Re p > alpha on the disk.
struct CaratheodoryFunction {
  HerglotzMeasure measure;
  double order = 0.0;
};

cplx eval_p(const CaratheodoryFunction& p, cplx z);
cplx eval_p_deriv(const CaratheodoryFunction& p, cplx z);

// z p'(z)/p(z) from the closed-form derivative.  Throws std::runtime_error
// if |p(z)| < 1e-14.
cplx eval_zlogderiv(const CaratheodoryFunction& p, cplx z);

// g(z) = z prod_k (1 - x_k z)^{-2(1-alpha) w_k}, so that
// zg'(z)/g(z) = alpha + (1 - alpha) q(z) lies in P(alpha).
class StarlikeMember {
 public:
  StarlikeMember(HerglotzMeasure measure, double alpha);

  cplx g(cplx z) const;
  cplx g_prime(cplx z) const;
  cplx zlogderiv(cplx z) const;             // zg'/g
  cplx z_second_over_first(cplx z) const;   // zg''/g'

 private:
  HerglotzMeasure measure_;
  double alpha_;
};

StarlikeMember starlike_member(const HerglotzMeasure& m, double alpha);

// g'(z) = prod_k (1 - x_k z)^{-2 w_k}, so 1 + zg''/g' = q(z) has positive
// real part and g is convex.  g itself comes from power-series integration
// of g', truncated so the tail is below 1e-12 at |z| = 0.99; evaluation is
// restricted to |z| <= 0.99.
class ConvexMember {
 public:
  explicit ConvexMember(HerglotzMeasure measure);

  cplx g(cplx z) const;
  cplx g_prime(cplx z) const;
  cplx zlogderiv(cplx z) const;             // zg'/g
  cplx z_second_over_first(cplx z) const;   // zg''/g' = q(z) - 1

  const std::vector<cplx>& series() const { return g_coeffs_; }

 private:
  HerglotzMeasure measure_;
  std::vector<cplx> g_coeffs_;  // g(z) = sum_{n>=1} g_coeffs_[n] z^n
};

ConvexMember convex_member(const HerglotzMeasure& m);

// Lower bound for Re zp'/p when p is in P(1/2); piecewise with a knot at
// r = 1/3, valid for r <= sqrt(8*sqrt(2)-11).
double p_half_logderiv_lower(double r);
double p_half_lower_max_r();

// Empirical verifiers of the growth / log-derivative bounds on n equispaced
// points of |z| = r, tolerance 1e-10.
bool check_growth_lemma(const CaratheodoryFunction& p, double r, int n);
bool check_logderiv_lemma(const CaratheodoryFunction& p, double r, int n);
// Requires order 1/2 and r <= sqrt(8*sqrt(2)-11); throws otherwise.
bool check_logderiv_lower(const CaratheodoryFunction& p, double r, int n);

}  // namespace gft

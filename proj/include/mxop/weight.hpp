// Matrix weights: a continuous part kernel(t) * density(t) on a support
// interval plus finitely many point masses zeta * delta_{t0} * M. Exact
// moments and inner products are available whenever the density is
// polynomial; rational densities go through quadrature instead.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mxop/exact_value.hpp"
#include "mxop/kernel.hpp"
#include "mxop/sturm.hpp"

namespace mxop {

struct Support {
  std::optional<Rat> lo, hi;  // empty = infinite on that side

  static Support real_line() { return {std::nullopt, std::nullopt}; }
  static Support half_line() { return {Rat(0), std::nullopt}; }
  static Support interval(Rat a, Rat b) { return {std::move(a), std::move(b)}; }

  bool contains_interior(const Rat& t) const {
    return (!lo || t > *lo) && (!hi || t < *hi);
  }
  // k distinct rational points in the interior, spread over the bounded
  // directions and marching away from any finite endpoint.
  std::vector<Rat> interior_samples(int k) const;

  friend bool operator==(const Support& a, const Support& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

struct PointMass {
  Rat t0;
  Rat zeta;
  QMat mass;
};

class WeightSpec {
 public:
  WeightSpec(Support s, Kernel k, RatMat density, std::vector<PointMass> masses = {});
  static WeightSpec from_quasi(const Support& s, const QuasiRatMat& w,
                               std::vector<PointMass> masses = {});

  const Support& support() const { return support_; }
  const Kernel& kernel() const { return kernel_; }
  const RatMat& density() const { return density_; }
  const std::vector<PointMass>& masses() const { return masses_; }
  int size() const { return density_.size(); }

  bool has_continuous() const { return !density_.is_zero(); }
  QuasiRatMat continuous() const { return {kernel_, density_}; }

  WeightSpec with_mass(const PointMass& m) const;
  WeightSpec scaled(const Rat& c) const;  // scales the continuous part only

 private:
  Support support_;
  Kernel kernel_;
  RatMat density_;
  std::vector<PointMass> masses_;
};

// k-th moment of the scalar kernel over the support. Recognized families:
// exp(-t^2) on R, exp(-t) t^alpha on (0, inf), (1-t^2)^mu on (-1, 1), and
// the trivial kernel on a bounded interval. Throws on anything else.
ExactValue kernel_moment(const Kernel& k, const Support& s, int degree);

// <P, Q> = int P W Q^* dt + sum zeta P(t0) M Q(t0)^T. Requires a polynomial
// density.
EMat exact_inner_product(const WeightSpec& w, const PolyMat& p, const PolyMat& q);

// Continuous part tends to zero at both support endpoints (finite endpoint:
// kernel exponent plus the density's order there is positive; infinite
// endpoint: decaying exponential, or negative total degree without one).
bool decay_check(const WeightSpec& w, std::string* why = nullptr);

// W(t) positive semidefinite for every t in the open support (principal
// minors nonnegative via Sturm chains, kernel structurally positive) with a
// nonzero determinant somewhere, and every point mass PSD. Returns a
// human-readable witness on failure.
std::optional<std::string> positivity_check(const WeightSpec& w);

struct ReducibilityReport {
  bool commuting;       // normalized samples commute pairwise
  std::string witness;  // offending sample pair when they do not
};

// Sampling probe, not a decision procedure: congruence-normalize by the
// LDL^T factor of W(t0), then test whether the normalized evaluations
// commute pairwise. Noncommuting samples certify irreducibility; commuting
// ones only fail to find an obstruction.
ReducibilityReport reducibility_probe(const WeightSpec& w, const Rat& t0,
                                      const std::vector<Rat>& samples);

}  // namespace mxop

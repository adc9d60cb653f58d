// Numeric cross-checks for the exact layer: Gauss rules from the classical
// three-term recurrences, assembled with Golub-Welsch.
#pragma once

#include "mxop/weight.hpp"

namespace mxop {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rule for the scalar kernel on its natural support. Recognizes the
// Gaussian, Laguerre and symmetric Jacobi kernels; a trivial kernel is
// treated as Jacobi with exponent zero.
QuadRule gauss_rule(const Kernel& k, int points);

// Entrywise numeric value of the matrix inner product, point masses
// included. Integer pole orders of the integrand at the kernel's centers
// are folded into the kernel exponents first, so the sampled function is
// smooth; any pole left on the closed support throws. The continuous part
// is multiplied by cont_scale.
Mat<double> numeric_inner_product(const WeightSpec& w, const PolyMat& p, const PolyMat& q,
                                  int points = 200, double cont_scale = 1.0);

// Numeric value of an exact scalar.
double to_double(const ExactValue& v);

Mat<double> emat_to_double(const EMat& m);

}  // namespace mxop

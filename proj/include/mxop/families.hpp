// The worked 2x2 families: Hermite, Laguerre and Gegenbauer type classical
// weights together with the quasi-Darboux pipelines that turn them into
// exceptional families. Each example builder returns the whole chain
// (classical polynomials, factorization steps, transformed operator,
// exceptional weight and family) with the defining identities re-checked
// along the way.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mxop/darboux.hpp"

namespace mxop {

Poly hermite_poly(int n);                      // physicists' normalization
Poly laguerre_monic(int n, const Rat& alpha);  // weight e^{-t} t^alpha
Poly jacobi_monic(int n, const Rat& mu);       // weight (1-t^2)^mu, mu > -1

// Weight e^{-t^2} (xi E22 + (xi + a^2 t^2) E11 + a t (E12 + E21))^T ordering
// aside: density [[xi + a^2 t^2, a t], [a t, 1]]. The operator algebra is
// spanned by D1..D4 and the identity; combo takes u = (u1, u2, u3, u4, u5)
// and returns u5 I + u1 D1 + u2 D2 + u3 D3 + u4 D4.
struct HermiteFamily {
  Rat a;
  Rat xi;

  WeightSpec weight() const;
  PolyMat poly(int n) const;
  EMat norm(int n) const;
  DiffOp op(int i) const;  // i in 1..4
  DiffOp combo(const std::array<Rat, 5>& u) const;
  // Eigenvalue of poly(n) under combo(u), in closed form.
  QMat eigenvalue(int n, const std::array<Rat, 5>& u) const;
};

// Weight e^{-t} t^alpha [[t + a^2 t^2, a t], [a t, 1]] on the half line.
// op(1) and op(2) span the second-order algebra together with the identity;
// op(3) is the third addition, of order three. The seed is the
// non-polynomial kernel element of op(1) used by the example pipeline.
struct LaguerreFamily {
  Rat a;
  Rat alpha;

  WeightSpec weight() const;
  PolyMat poly(int n) const;
  EMat norm(int n) const;
  DiffOp op(int i) const;  // i in 1..3
  DiffOp combo(const Rat& u0, const Rat& u1, const Rat& u2) const;
  QuasiRatMat seed() const;
  RatMat seed_u() const;
  // Eigenvalue of the seed under combo(u0, u1, u2); u1 drops out because
  // op(1) annihilates the seed.
  QMat seed_eigenvalue(const Rat& u0, const Rat& u2) const;
};

// Weight (1-t^2)^{r/2-1} [[a(t^2-1)+r, -rt], [-rt, (r-a)(t^2-1)+r]] on
// (-1, 1), for r > 0, 0 < a < r; the pipeline additionally needs a away
// from 1, 2, r-1 and r-2.
struct GegenbauerFamily {
  Rat a;
  Rat r;

  GegenbauerFamily(Rat a_, Rat r_);

  WeightSpec weight() const;
  PolyMat poly(int n) const;
  EMat norm(int n) const;
  DiffOp dtilde() const;
  QuasiRatMat seed() const;
  RatMat seed_u() const;
  // The parameter region where the transformed weight is positive definite;
  // empty result means admissible.
  static std::optional<std::string> admissible(const Rat& a, const Rat& r);
};

// One quasi-Darboux stage: before = B o A - Psi through fact, after is the
// transformed operator, and gamma(n) is the eigenvalue under `before` of the
// stage's incoming polynomial of index n.
struct DarbouxStep {
  DiffOp before;
  Factorization fact;
  DiffOp after;
  std::function<QMat(int)> gamma;
};

struct ExampleRun {
  int id;
  std::map<std::string, Rat> params;
  std::set<int> gaps;  // indices where the exceptional family has no member
  std::function<PolyMat(int)> classical;
  std::vector<DarbouxStep> steps;
  DiffOp exceptional;
  WeightSpec weight;
  // Raw chain weight = weight_scale * stored continuous part.
  Rat weight_scale;
  // Extra constant on the continuous part for numeric work; the density of
  // example 5 carries 1/sqrt(pi), which has no exact representation here.
  double cont_scale;
  std::function<PolyMat(int)> family;
};

// A second seed reaching an exceptional weight proportional to the main
// route's, with a larger degree jump.
struct AltRoute {
  Rat a;
  DiffOp dtilde;
  QuasiRatMat seed;
  RatMat u;
  Factorization fact;
  DiffOp exceptional;
  QuasiRatMat weight_raw;
  std::set<int> gaps;
  std::function<PolyMat(int)> family;
};

ExampleRun example1(const Rat& a);  // a^2 > 2
ExampleRun example2(const Rat& a);
ExampleRun example3(const Rat& a, const Rat& alpha);  // a != 0, alpha > -1
ExampleRun example4(const Rat& a, const Rat& r);
ExampleRun example5(const Rat& a, const Rat& zeta);  // a^2 > 2, zeta >= 0
AltRoute example1_alt(const Rat& a);  // a^2 > 2
AltRoute example2_alt(const Rat& a);  // a^2 > 1

// Degree-j eigenfunctions of the classical operator behind example 5; tau
// picks the kernel direction that stays free at degrees 2 and 3.
PolyMat example5_candidate(int j, const Rat& a, const Rat& zeta, const Rat& tau);

struct Obstruction {
  bool feasible;
  Rat tau2, tau3;      // witness choice when feasible
  std::string detail;  // first blocking entry otherwise
};

// Whether t P2 = A P3 + B P2 + C P1 can hold over the tau-parameterized
// degree-2 and degree-3 candidates of example 5.
Obstruction example5_obstruction(const Rat& a, const Rat& zeta);

// Left-sided Gram-Schmidt against an exact Gram form, gram(i, j) =
// <ps[i], ps[j]>. Inputs must have strictly increasing degrees; outputs are
// returned monic.
std::vector<PolyMat> gram_schmidt(const std::vector<PolyMat>& ps,
                                  const std::function<QMat(int, int)>& gram);

}  // namespace mxop

// Right-acting matrix differential operators D(y) = sum_j y^(j) F_j with
// rational-function coefficient matrices. Eigenvalues sit on the left in
// this convention: D(P) = Gamma P.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mxop/weight.hpp"

namespace mxop {

class DiffOp {
 public:
  // coef[j] multiplies y^(j); all square of one size, at least one entry.
  explicit DiffOp(std::vector<RatMat> coef);
  static DiffOp order0(const RatMat& f0) { return DiffOp({f0}); }
  static DiffOp first_order(const RatMat& f0, const RatMat& f1) { return DiffOp({f0, f1}); }
  static DiffOp second_order(const RatMat& f0, const RatMat& f1, const RatMat& f2) {
    return DiffOp({f0, f1, f2});
  }

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  int size() const { return coef_[0].size(); }
  // The coefficient of y^(j); zero beyond the order.
  RatMat coef(int j) const;
  bool is_zero() const;

  RatMat apply(const RatMat& y) const;
  RatMat apply(const PolyMat& y) const { return apply(to_ratmat(y)); }
  // Result must come out polynomial; throws otherwise.
  PolyMat apply_poly(const PolyMat& y) const { return to_polymat(apply(y)); }
  QuasiRatMat apply(const QuasiRatMat& y) const;

  DiffOp operator-() const;
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }
  friend DiffOp operator*(const RatFunc& c, const DiffOp& d);
  friend bool operator==(const DiffOp& a, const DiffOp& b);
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<RatMat> coef_;
};

// outer(inner(y)); the result is checked against direct application on the
// monomials t^k I before it is returned.
DiffOp compose(const DiffOp& outer, const DiffOp& inner);

// Formal adjoint with respect to w: E'(y) = (sum_j (-1)^j (y w E_j^T)^(j)) w^{-1}.
// The kernel of w cancels, so the coefficients come out rational.
DiffOp formal_adjoint(const DiffOp& e, const QuasiRatMat& w);

// Solves D(P) = Gamma P for a constant Gamma; empty when D(P) is not
// polynomial or Gamma fails to be constant namely when P is not an
// eigenfunction.
std::optional<QMat> eigencheck(const DiffOp& d, const PolyMat& p, std::string* why = nullptr);

// The three symmetry identities of a second-order operator against the
// continuous part of w,
//   F2 W = W F2*,  2 (F2 W)' - F1 W = W F1*,
//   (F2 W)'' - (F1 W)' + F0 W = W F0*,
// plus vanishing of F2 W and (F2 W)' - F1 W at the support endpoints, plus
// the point-mass conditions F2(t0) M = 0, F1(t0) M = 0, F0(t0) M = M F0(t0)^T.
// Returns a witness for the first failure.
std::optional<std::string> symmetry_check(const DiffOp& d, const WeightSpec& w);

}  // namespace mxop

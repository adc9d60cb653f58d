// Exact scalars of the form sum_i c_i * u_i with rational c_i over a small
// set of transcendental units: 1, sqrt(pi), Gamma(alpha+1), B(1/2, s).
// Sums are unrestricted; products and quotients exist only when the units
// cancel or one side is rational, which is all the engine ever needs. A
// Gamma unit at integer alpha collapses to the rational alpha! on entry.
#pragma once

#include <map>
#include <string>

#include "mxop/matrix.hpp"

namespace mxop {

struct Unit {
  enum class Kind { One, SqrtPi, GammaAlphaPlus1, BetaHalf };
  Kind kind = Kind::One;
  Rat param = Rat(0);  // alpha for Gamma, s for B(1/2, s)

  static Unit one() { return {}; }
  static Unit sqrt_pi() { return {Kind::SqrtPi, Rat(0)}; }
  static Unit gamma_alpha_plus1(const Rat& alpha) { return {Kind::GammaAlphaPlus1, alpha}; }
  static Unit beta_half(const Rat& s) { return {Kind::BetaHalf, s}; }

  bool is_one() const { return kind == Kind::One; }
  std::string str() const;

  friend bool operator==(const Unit& a, const Unit& b) {
    return a.kind == b.kind && a.param == b.param;
  }
  friend bool operator!=(const Unit& a, const Unit& b) { return !(a == b); }
  friend bool operator<(const Unit& a, const Unit& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.param < b.param;
  }
};

class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(Rat r) { set_term(Unit::one(), std::move(r)); }  // NOLINT
  ExactValue(long n) : ExactValue(Rat(n)) {}                  // NOLINT
  ExactValue(const Rat& c, const Unit& u) { set_term(u, c); }

  static ExactValue sqrt_pi(const Rat& c = Rat(1)) { return {c, Unit::sqrt_pi()}; }
  // Collapses to the rational alpha! when alpha is a nonnegative integer, and
  // to a rational multiple of sqrt(pi) when alpha is a half-integer > -1.
  static ExactValue gamma_alpha_plus1(const Rat& alpha, const Rat& c = Rat(1));
  // Ladders s down by B(1/2,s) = B(1/2,s-1) 2(s-1)/(2s-1) until s lands in
  // (0,1], so two values that differ by an integer step share one unit.
  // Integer s bottoms out at B(1/2,1) = 2, a plain rational.
  static ExactValue beta_half(Rat s, Rat c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()
  Rat coef(const Unit& u) const;
  const std::map<Unit, Rat>& terms() const { return terms_; }

  ExactValue operator-() const;
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }
  // Defined when either side is rational or the units cancel; throws
  // otherwise rather than invent sqrt(pi)^2.
  friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator/(const ExactValue& a, const ExactValue& b);
  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

  std::string str() const;

 private:
  void set_term(const Unit& u, Rat c) {
    if (c != 0) terms_[u] = std::move(c);
  }
  std::map<Unit, Rat> terms_;  // unit -> nonzero coefficient
};

inline std::string entry_to_string(const ExactValue& v) { return v.str(); }

using EMat = Mat<ExactValue>;

EMat emat_from_q(const QMat& m, const Unit& u = Unit::one());
// The one unit shared by every nonzero entry; One for a zero matrix. Throws
// when entries mix units, which no single-weight Gram block ever does.
Unit emat_unit(const EMat& m);
QMat emat_coef(const EMat& m, const Unit& u);
// num * den^{-1} through the shared units: (u_num / u_den) * A * B^{-1}.
EMat emat_div_right(const EMat& num, const EMat& den);
EMat emat_scale(const Rat& c, const EMat& m);
EMat emat_mul(const QMat& a, const EMat& b);
EMat emat_mul(const EMat& a, const QMat& b);

}  // namespace mxop

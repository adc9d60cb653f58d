// Scalar kernels of the form exp(e(t)) * prod_i (s_i (t - c_i))^(g_i) with
// polynomial e, rational exponents g_i and orientation signs s_i in {+1,-1}.
// The orientation makes factors like (1 - t)^g positive on their natural
// side without ever evaluating a rational power of a negative base, and the
// logarithmic derivative e'(t) + sum_i g_i / (t - c_i) stays rational, which
// is what lets every derivative in the engine remain exact.
#pragma once

#include <optional>

#include "mxop/matrix.hpp"

namespace mxop {

struct PowerFactor {
  Rat center;
  Rat exponent;  // nonzero in canonical form
  int sign;      // +1: (t - center), -1: (center - t)

  friend bool operator==(const PowerFactor& a, const PowerFactor& b) {
    return a.center == b.center && a.exponent == b.exponent && a.sign == b.sign;
  }
};

class Kernel {
 public:
  Kernel() = default;  // the constant 1

  static Kernel exp_poly(Poly e);
  static Kernel power(const Rat& center, const Rat& exponent, int sign);
  static Kernel gaussian() { return exp_poly(Poly{Rat(0), Rat(0), Rat(-1)}); }
  // e^{-t} t^alpha on the half line.
  static Kernel laguerre(const Rat& alpha);
  // (1 - t^2)^mu oriented positive on (-1, 1).
  static Kernel jacobi(const Rat& mu);

  const Poly& exp_arg() const { return exp_arg_; }
  const std::vector<PowerFactor>& factors() const { return factors_; }
  bool is_trivial() const { return exp_arg_.is_zero() && factors_.empty(); }

  Kernel times(const Kernel& o) const;
  Kernel reciprocal() const;

  RatFunc log_derivative() const;

  // Pointwise value; throws when a factor's base is nonpositive with a
  // fractional or negative exponent.
  double eval(double t) const;

  // Structurally positive on the open interval (every factor base positive
  // there); the exponential part is always positive.
  bool positive_on(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const;

  // Exponent of (t - c) collected over factors at center c (0 if absent).
  Rat exponent_at(const Rat& c) const;

  friend bool operator==(const Kernel& a, const Kernel& b) {
    return a.exp_arg_ == b.exp_arg_ && a.factors_ == b.factors_;
  }
  friend bool operator!=(const Kernel& a, const Kernel& b) { return !(a == b); }

  std::string str() const;

 private:
  void push_factor(const PowerFactor& f);
  Poly exp_arg_;
  std::vector<PowerFactor> factors_;
};

// kernel(t) * body(t) with a rational-function body. Addition requires equal
// kernels (or a zero side); products multiply the kernels. Differentiation
// folds the kernel's logarithmic derivative into the body, so the result
// lives in the same class.
class QuasiRatMat {
 public:
  QuasiRatMat() = default;
  QuasiRatMat(RatMat body) : body_(std::move(body)) { canonicalize(); }  // NOLINT
  QuasiRatMat(Kernel k, RatMat body) : kernel_(std::move(k)), body_(std::move(body)) {
    canonicalize();
  }

  const Kernel& kernel() const { return kernel_; }
  const RatMat& body() const { return body_; }
  int size() const { return body_.size(); }
  bool is_zero() const { return body_.is_zero(); }
  bool is_rational() const { return kernel_.is_trivial(); }
  // Requires is_rational().
  const RatMat& to_ratmat() const;

  QuasiRatMat derivative() const;
  QuasiRatMat inverse() const;
  QuasiRatMat transpose() const { return QuasiRatMat(kernel_, body_.transpose()); }

  QuasiRatMat operator-() const { return QuasiRatMat(kernel_, -body_); }
  friend QuasiRatMat operator+(const QuasiRatMat& a, const QuasiRatMat& b);
  friend QuasiRatMat operator-(const QuasiRatMat& a, const QuasiRatMat& b) { return a + (-b); }
  friend QuasiRatMat operator*(const QuasiRatMat& a, const QuasiRatMat& b) {
    return QuasiRatMat(a.kernel_.times(b.kernel_), a.body_ * b.body_);
  }
  friend QuasiRatMat operator*(const RatMat& a, const QuasiRatMat& b) {
    return QuasiRatMat(b.kernel_, a * b.body_);
  }
  friend QuasiRatMat operator*(const QuasiRatMat& a, const RatMat& b) {
    return QuasiRatMat(a.kernel_, a.body_ * b);
  }
  friend bool operator==(const QuasiRatMat& a, const QuasiRatMat& b) {
    return a.kernel_ == b.kernel_ && a.body_ == b.body_;
  }
  friend bool operator!=(const QuasiRatMat& a, const QuasiRatMat& b) { return !(a == b); }

  Mat<double> eval(double t) const;

  // Every entry tends to zero as t -> c from either side: the kernel's
  // exponent at c plus the least entry order is positive.
  bool vanishes_at(const Rat& c) const;
  // Every entry tends to zero toward the chosen infinity, by exponential
  // decay or by negative total degree.
  bool vanishes_at_infinity(bool plus) const;

  std::string str() const;

 private:
  void canonicalize() {
    if (body_.size() && body_.is_zero()) kernel_ = Kernel();
  }
  Kernel kernel_;
  RatMat body_;
};

}  // namespace mxop

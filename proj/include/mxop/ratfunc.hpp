// Rational functions in one variable, kept in canonical form at all times:
// numerator and denominator coprime, denominator monic. Equality on the
// representation is therefore equality of functions.
#pragma once

#include <string>

#include "mxop/poly.hpp"

namespace mxop {

class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}  // NOLINT
  RatFunc(long constant) : num_(Rat(constant)), den_(Rat(1)) {}   // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}           // NOLINT
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  // Requires is_constant().
  Rat constant_value() const;
  // Requires is_polynomial().
  Poly to_poly() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative() const;
  RatFunc pow(int e) const;

  // Throws on poles.
  Rat eval(const Rat& t) const;
  double eval(double t) const;

  // Order of vanishing at t = c: positive at a zero, negative at a pole,
  // zero otherwise.
  int order_at(const Rat& c) const;
  // deg num - deg den; degree of growth at infinity (zero polynomial: INT_MIN).
  int degree_at_infinity() const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace mxop

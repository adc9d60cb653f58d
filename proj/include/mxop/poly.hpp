// Dense univariate polynomials over Rat, ascending coefficient order.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mxop/rational.hpp"

namespace mxop {

class Poly {
 public:
  Poly() = default;
  Poly(const Rat& constant);  // NOLINT: implicit by design, scalars promote
  Poly(long constant) : Poly(Rat(constant)) {}
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly variable();                       // t
  static Poly monomial(int k, const Rat& c = 1);  // c t^k

  // Degree of the zero polynomial is the sentinel -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  // Coefficient of t^k; zero outside the stored range.
  const Rat& coef(int k) const;
  Rat leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const;
  Poly derivative() const;
  // Antiderivative with zero constant term.
  Poly antiderivative() const;

  Rat eval(const Rat& t) const;
  double eval(double t) const;

  // Euclidean division; denominator must be nonzero.
  static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);
  // Division known to be exact; throws if a remainder appears.
  static Poly exact_div(const Poly& num, const Poly& den);
  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);

  // Multiplicity of the root t = c (0 when p(c) != 0, degree+1 convention not
  // used: the zero polynomial throws).
  int root_multiplicity(const Rat& c) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace mxop

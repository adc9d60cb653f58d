#include "mxop/ratfunc.hpp"

#include <climits>

namespace mxop {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  const Rat lead = den_.leading();
  if (lead != 1) {
    const Rat inv = Rat(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc::constant_value: not constant");
  return num_.coef(0);
}

Poly RatFunc::to_poly() const {
  if (!is_polynomial()) throw std::domain_error("RatFunc::to_poly: has a denominator");
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
  // (n/d)' = (n'd - nd')/d^2; normalize() removes the common factors.
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("RatFunc::pow: zero to a negative power");
    return RatFunc(den_, num_).pow(-e);
  }
  return RatFunc(num_.pow(e), den_.pow(e));
}

Rat RatFunc::eval(const Rat& t) const {
  const Rat d = den_.eval(t);
  if (d == 0) throw std::domain_error("RatFunc::eval: pole at t = " + rat_str(t));
  return num_.eval(t) / d;
}

double RatFunc::eval(double t) const { return num_.eval(t) / den_.eval(t); }

int RatFunc::order_at(const Rat& c) const {
  if (is_zero()) throw std::domain_error("RatFunc::order_at: zero function");
  // num and den are coprime, so at most one of the two multiplicities is set.
  return num_.root_multiplicity(c) - den_.root_multiplicity(c);
}

int RatFunc::degree_at_infinity() const {
  if (is_zero()) return INT_MIN;
  return num_.degree() - den_.degree();
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace mxop

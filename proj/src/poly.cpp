#include "mxop/poly.hpp"

#include <sstream>

namespace mxop {

namespace {
const Rat kZero = 0;
}

Poly::Poly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::variable() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::monomial(int k, const Rat& c) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  if (c == 0) return Poly();
  std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coef(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

Rat Poly::leading() const {
  if (is_zero()) throw std::domain_error("Poly::leading: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  Poly r = p;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc(Rat(1)), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
  if (is_zero()) return Poly();
  std::vector<Rat> v(c_.size() + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i + 1] = c_[i] / Rat(static_cast<long>(i) + 1);
  return Poly(std::move(v));
}

Rat Poly::eval(const Rat& t) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

double Poly::eval(double t) const {
  double r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * t + rat_to_double(c_[i]);
  return r;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  if (den.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
  quot = Poly();
  rem = num;
  const int dd = den.degree();
  const Rat lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    const Rat c = rem.leading() / lead;
    quot += Poly::monomial(k, c);
    rem -= Poly::monomial(k, c) * den;
  }
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
  Poly q, r;
  divmod(num, den, q, r);
  if (!r.is_zero()) throw std::domain_error("Poly::exact_div: inexact division");
  return q;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.leading()) * a;
}

int Poly::root_multiplicity(const Rat& c) const {
  if (is_zero()) throw std::domain_error("Poly::root_multiplicity: zero polynomial");
  const Poly lin{-c, Rat(1)};
  int m = 0;
  Poly p = *this;
  while (true) {
    Poly q, r;
    divmod(p, lin, q, r);
    if (!r.is_zero()) return m;
    ++m;
    p = std::move(q);
  }
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = coef(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Rat mag = rat_abs(c);
    if (k == 0 || mag != 1) os << rat_str(mag);
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace mxop

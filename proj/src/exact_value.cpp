#include "mxop/exact_value.hpp"

#include <sstream>
#include <stdexcept>

namespace mxop {

std::string Unit::str() const {
  switch (kind) {
    case Kind::One:
      return "1";
    case Kind::SqrtPi:
      return "sqrt(pi)";
    case Kind::GammaAlphaPlus1:
      return "Gamma(" + rat_str(param + 1) + ")";
    case Kind::BetaHalf:
      return "B(1/2," + rat_str(param) + ")";
  }
  return "?";
}

ExactValue ExactValue::gamma_alpha_plus1(const Rat& alpha, const Rat& c) {
  if (rat_is_integer(alpha) && alpha >= 0) {
    Rat f(1);
    for (Rat k(2); k <= alpha; k += 1) f *= k;
    return ExactValue(c * f);
  }
  if (rat_is_integer(alpha + alpha) && alpha >= Rat(-1, 2)) {
    // Gamma(alpha+1) = Gamma(1/2) * prod of the half-integer ladder.
    Rat f(1);
    for (Rat s(1, 2); s < alpha + 1; s += 1) f *= s;
    return sqrt_pi(c * f);
  }
  return {c, Unit::gamma_alpha_plus1(alpha)};
}

ExactValue ExactValue::beta_half(Rat s, Rat c) {
  while (s > 1) {
    c *= 2 * (s - 1) / (2 * s - 1);
    s -= 1;
  }
  if (s == 1) return ExactValue(2 * c);
  return {c, Unit::beta_half(s)};
}

bool ExactValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat ExactValue::rational_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational()) throw std::domain_error("ExactValue: not rational: " + str());
  return terms_.begin()->second;
}

Rat ExactValue::coef(const Unit& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Rat(0) : it->second;
}

ExactValue ExactValue::operator-() const {
  ExactValue r;
  for (const auto& [u, c] : terms_) r.terms_.emplace(u, -c);
  return r;
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  ExactValue r = a;
  for (const auto& [u, c] : b.terms_) {
    auto it = r.terms_.find(u);
    if (it == r.terms_.end()) {
      r.terms_.emplace(u, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  if (a.is_rational() || b.is_rational()) {
    const ExactValue& scalar = a.is_rational() ? a : b;
    const ExactValue& other = a.is_rational() ? b : a;
    if (scalar.is_zero()) return ExactValue();
    ExactValue r;
    Rat s = scalar.rational_value();
    for (const auto& [u, c] : other.terms_) r.terms_.emplace(u, s * c);
    return r;
  }
  throw std::domain_error("ExactValue: product of irrationals: " + a.str() + " * " + b.str());
}

ExactValue operator/(const ExactValue& a, const ExactValue& b) {
  if (b.is_zero()) throw std::domain_error("ExactValue: division by zero");
  if (b.terms_.size() != 1)
    throw std::domain_error("ExactValue: division by a sum: " + b.str());
  const auto& [bu, bc] = *b.terms_.begin();
  if (a.is_zero()) return ExactValue();
  ExactValue r;
  for (const auto& [au, ac] : a.terms_) {
    if (bu.is_one())
      r.terms_.emplace(au, ac / bc);
    else if (au == bu)
      r.terms_.emplace(Unit::one(), ac / bc);
    else
      throw std::domain_error("ExactValue: quotient leaves the algebra: " + a.str() + " / " +
                              b.str());
  }
  return r;
}

std::string ExactValue::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat mag = (!first && c < 0) ? Rat(-c) : c;
    first = false;
    if (u.is_one())
      os << rat_str(mag);
    else if (mag == 1)
      os << u.str();
    else if (mag == -1)
      os << "-" << u.str();
    else
      os << rat_str(mag) << "*" << u.str();
  }
  return os.str();
}

EMat emat_from_q(const QMat& m, const Unit& u) {
  EMat r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = ExactValue(m.at(i, j), u);
  return r;
}

Unit emat_unit(const EMat& m) {
  Unit u = Unit::one();
  bool seen = false;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      const auto& v = m.at(i, j);
      if (v.is_zero()) continue;
      if (v.terms().size() != 1)
        throw std::domain_error("emat_unit: mixed-unit entry " + v.str());
      Unit w = v.terms().begin()->first;
      if (!seen) {
        u = w;
        seen = true;
      } else if (w != u) {
        throw std::domain_error("emat_unit: entries disagree on unit");
      }
    }
  return u;
}

QMat emat_coef(const EMat& m, const Unit& u) {
  QMat r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = m.at(i, j).coef(u);
  return r;
}

EMat emat_div_right(const EMat& num, const EMat& den) {
  if (num.is_zero()) return EMat(num.size());
  Unit un = emat_unit(num);
  Unit ud = emat_unit(den);
  QMat a = emat_coef(num, un);
  QMat b = emat_coef(den, ud);
  QMat prod = a * mat_inverse(b);
  ExactValue ratio = ExactValue(Rat(1), un) / ExactValue(Rat(1), ud);
  EMat r(prod.size());
  for (int i = 0; i < prod.size(); ++i)
    for (int j = 0; j < prod.size(); ++j) r.at(i, j) = ExactValue(prod.at(i, j)) * ratio;
  return r;
}

EMat emat_scale(const Rat& c, const EMat& m) {
  EMat r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = ExactValue(c) * m.at(i, j);
  return r;
}

EMat emat_mul(const QMat& a, const EMat& b) {
  EMat r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      ExactValue s;
      for (int k = 0; k < a.size(); ++k) s = s + ExactValue(a.at(i, k)) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

EMat emat_mul(const EMat& a, const QMat& b) {
  EMat r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      ExactValue s;
      for (int k = 0; k < a.size(); ++k) s = s + a.at(i, k) * ExactValue(b.at(k, j));
      r.at(i, j) = s;
    }
  return r;
}

}  // namespace mxop

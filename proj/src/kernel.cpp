#include "mxop/kernel.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mxop {

Kernel Kernel::exp_poly(Poly e) {
  Kernel k;
  k.exp_arg_ = std::move(e);
  return k;
}

Kernel Kernel::power(const Rat& center, const Rat& exponent, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("Kernel: sign must be +1 or -1");
  Kernel k;
  k.push_factor({center, exponent, sign});
  return k;
}

Kernel Kernel::laguerre(const Rat& alpha) {
  return exp_poly(Poly{Rat(0), Rat(-1)}).times(power(Rat(0), alpha, +1));
}

Kernel Kernel::jacobi(const Rat& mu) {
  // 1 - t^2 = (1 - t)(t + 1), both factors positive on (-1, 1).
  return power(Rat(1), mu, -1).times(power(Rat(-1), mu, +1));
}

void Kernel::push_factor(const PowerFactor& f) {
  if (f.exponent == 0) return;
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (it->center != f.center) continue;
    if (it->sign != f.sign)
      throw std::domain_error("Kernel: mixed orientations at one center");
    it->exponent += f.exponent;
    if (it->exponent == 0) factors_.erase(it);
    return;
  }
  factors_.push_back(f);
  std::sort(factors_.begin(), factors_.end(),
            [](const PowerFactor& a, const PowerFactor& b) { return a.center < b.center; });
}

Kernel Kernel::times(const Kernel& o) const {
  Kernel k;
  k.exp_arg_ = exp_arg_ + o.exp_arg_;
  k.factors_ = factors_;
  for (const auto& f : o.factors_) k.push_factor(f);
  return k;
}

Kernel Kernel::reciprocal() const {
  Kernel k;
  k.exp_arg_ = Rat(-1) * exp_arg_;
  k.factors_ = factors_;
  for (auto& f : k.factors_) f.exponent = -f.exponent;
  return k;
}

RatFunc Kernel::log_derivative() const {
  RatFunc r(exp_arg_.derivative());
  for (const auto& f : factors_) {
    // d/dt log (s(t-c))^g = g/(t-c), orientation drops out.
    r = r + RatFunc(Poly(f.exponent), Poly{-f.center, Rat(1)});
  }
  return r;
}

double Kernel::eval(double t) const {
  double v = std::exp(exp_arg_.eval(t));
  for (const auto& f : factors_) {
    double base = f.sign * (t - rat_to_double(f.center));
    double g = rat_to_double(f.exponent);
    if (base > 0) {
      v *= std::pow(base, g);
    } else if (base == 0 && g > 0) {
      return 0.0;
    } else if (base < 0 && rat_is_integer(f.exponent)) {
      v *= std::pow(base, g);
    } else {
      throw std::domain_error("Kernel::eval outside domain");
    }
  }
  return v;
}

bool Kernel::positive_on(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const {
  for (const auto& f : factors_) {
    if (f.sign > 0) {
      // need t - c > 0 on the interval, i.e. c <= lo
      if (!lo || f.center > *lo) return false;
    } else {
      if (!hi || f.center < *hi) return false;
    }
  }
  return true;
}

Rat Kernel::exponent_at(const Rat& c) const {
  for (const auto& f : factors_)
    if (f.center == c) return f.exponent;
  return Rat(0);
}

std::string Kernel::str() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  if (!exp_arg_.is_zero()) {
    os << "exp(" << exp_arg_.str("t") << ")";
    first = false;
  }
  for (const auto& f : factors_) {
    if (!first) os << "*";
    first = false;
    os << "(";
    if (f.sign > 0) {
      os << "t";
      if (f.center > 0)
        os << " - " << rat_str(f.center);
      else if (f.center < 0)
        os << " + " << rat_str(-f.center);
    } else {
      os << rat_str(f.center) << " - t";
    }
    os << ")^(" << rat_str(f.exponent) << ")";
  }
  return os.str();
}

const RatMat& QuasiRatMat::to_ratmat() const {
  if (!is_rational()) throw std::domain_error("QuasiRatMat: kernel is not trivial");
  return body_;
}

QuasiRatMat QuasiRatMat::derivative() const {
  RatFunc ld = kernel_.log_derivative();
  RatMat d = mat_derivative(body_);
  for (int i = 0; i < body_.size(); ++i)
    for (int j = 0; j < body_.size(); ++j)
      d.at(i, j) = d.at(i, j) + ld * body_.at(i, j);
  return QuasiRatMat(kernel_, std::move(d));
}

QuasiRatMat QuasiRatMat::inverse() const {
  return QuasiRatMat(kernel_.reciprocal(), mat_inverse(body_));
}

QuasiRatMat operator+(const QuasiRatMat& a, const QuasiRatMat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.kernel_ != b.kernel_)
    throw std::domain_error("QuasiRatMat: cannot add different kernels");
  return QuasiRatMat(a.kernel_, a.body_ + b.body_);
}

Mat<double> QuasiRatMat::eval(double t) const {
  double k = kernel_.eval(t);
  Mat<double> m = mat_eval(body_, t);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m.at(i, j) *= k;
  return m;
}

std::string QuasiRatMat::str() const {
  if (kernel_.is_trivial()) return body_.str();
  return kernel_.str() + " * " + body_.str();
}

bool QuasiRatMat::vanishes_at(const Rat& c) const {
  if (is_zero()) return true;
  int least = INT_MAX;
  for (int i = 0; i < body_.size(); ++i)
    for (int j = 0; j < body_.size(); ++j) {
      if (body_.at(i, j).is_zero()) continue;
      least = std::min(least, body_.at(i, j).order_at(c));
    }
  return kernel_.exponent_at(c) + Rat(least) > 0;
}

bool QuasiRatMat::vanishes_at_infinity(bool plus) const {
  if (is_zero()) return true;
  const Poly& e = kernel_.exp_arg();
  if (!e.is_zero()) {
    // A nontrivial exponential dominates every power.
    const int lead = rat_sign(e.leading());
    const int sign_at_inf = (plus || e.degree() % 2 == 0) ? lead : -lead;
    return sign_at_inf < 0;
  }
  int top = INT_MIN;
  for (int i = 0; i < body_.size(); ++i)
    for (int j = 0; j < body_.size(); ++j) {
      if (body_.at(i, j).is_zero()) continue;
      top = std::max(top, body_.at(i, j).degree_at_infinity());
    }
  Rat total(top);
  for (const auto& f : kernel_.factors()) total += f.exponent;
  return total < 0;
}

}  // namespace mxop

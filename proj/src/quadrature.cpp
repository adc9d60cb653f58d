#include "mxop/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "mxop/sturm.hpp"

namespace mxop {

namespace {

QuadRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& beta,
                      double b0) {
  const int n = static_cast<int>(diag.size());
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) d[i] = diag[i];
  for (int i = 0; i + 1 < n; ++i) e[i] = std::sqrt(beta[i + 1]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e);
  if (es.info() != Eigen::Success) throw std::runtime_error("gauss_rule: eigensolver failed");
  QuadRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()[i];
    const double v = es.eigenvectors()(0, i);
    r.weights[i] = b0 * v * v;
  }
  return r;
}

enum class Family { Gaussian, Laguerre, Jacobi };

struct KernelShape {
  Family family;
  Rat exponent;  // alpha or mu, by family
};

KernelShape classify(const Kernel& k) {
  if (k.exp_arg() == Poly{Rat(0), Rat(0), Rat(-1)} && k.factors().empty())
    return {Family::Gaussian, Rat(0)};
  if (k.exp_arg() == Poly{Rat(0), Rat(-1)}) {
    for (const auto& f : k.factors())
      if (f.center != 0 || f.sign != 1)
        throw std::invalid_argument("gauss_rule: unsupported kernel " + k.str());
    return {Family::Laguerre, k.exponent_at(Rat(0))};
  }
  if (k.exp_arg().is_zero()) {
    const Rat mu = k.exponent_at(Rat(1));
    if (k.exponent_at(Rat(-1)) != mu)
      throw std::invalid_argument("gauss_rule: unsupported kernel " + k.str());
    for (const auto& f : k.factors())
      if (!((f.center == 1 && f.sign == -1) || (f.center == -1 && f.sign == 1)))
        throw std::invalid_argument("gauss_rule: unsupported kernel " + k.str());
    return {Family::Jacobi, mu};
  }
  throw std::invalid_argument("gauss_rule: unsupported kernel " + k.str());
}

QuadRule rule_for(const KernelShape& shape, int points) {
  if (points < 1) throw std::invalid_argument("gauss_rule: need at least one point");
  std::vector<double> diag(points, 0.0);
  std::vector<double> beta(points, 0.0);
  double b0 = 0;
  switch (shape.family) {
    case Family::Gaussian:
      b0 = std::sqrt(M_PI);
      for (int k = 1; k < points; ++k) beta[k] = k / 2.0;
      break;
    case Family::Laguerre: {
      const double al = rat_to_double(shape.exponent);
      b0 = std::tgamma(al + 1);
      for (int k = 0; k < points; ++k) diag[k] = 2 * k + al + 1;
      for (int k = 1; k < points; ++k) beta[k] = k * (k + al);
      break;
    }
    case Family::Jacobi: {
      const double mu = rat_to_double(shape.exponent);
      b0 = std::sqrt(M_PI) * std::tgamma(mu + 1) / std::tgamma(mu + 1.5);
      if (points > 1) beta[1] = 1 / (2 * mu + 3);
      for (int k = 2; k < points; ++k)
        beta[k] = k * (k + 2 * mu) / ((2 * k + 2 * mu + 1) * (2 * k + 2 * mu - 1));
      break;
    }
  }
  return golub_welsch(diag, beta, b0);
}

}  // namespace

QuadRule gauss_rule(const Kernel& k, int points) {
  if (k.is_trivial()) return rule_for({Family::Jacobi, Rat(0)}, points);
  return rule_for(classify(k), points);
}

Mat<double> numeric_inner_product(const WeightSpec& w, const PolyMat& p, const PolyMat& q,
                                  int points, double cont_scale) {
  const int sz = w.size();
  if (p.size() != sz || q.size() != sz)
    throw std::invalid_argument("numeric_inner_product: size mismatch");
  Mat<double> acc(sz);
  if (w.has_continuous()) {
    const QuasiRatMat& cw = w.continuous();
    RatMat integrand = to_ratmat(p) * cw.body() * to_ratmat(q).transpose();
    KernelShape shape = cw.kernel().is_trivial() ? KernelShape{Family::Jacobi, Rat(0)}
                                                 : classify(cw.kernel());
    std::vector<Rat> centers;
    if (shape.family == Family::Laguerre) centers.push_back(Rat(0));
    if (shape.family == Family::Jacobi) {
      centers.push_back(Rat(1));
      centers.push_back(Rat(-1));
    }
    int fold = 0;
    for (const Rat& c : centers)
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
          const Poly& den = integrand.at(i, j).den();
          if (!den.is_constant()) fold = std::max(fold, den.root_multiplicity(c));
        }
    if (fold > 0) {
      // Shift integer pole orders at the centers from the body into the
      // kernel exponent, so the sampled function stays smooth. A Jacobi
      // kernel folds the symmetric factor, dropping both exponents at once.
      Poly mult(Rat(1));
      const Poly base = shape.family == Family::Laguerre ? Poly{Rat(0), Rat(1)}
                                                         : Poly{Rat(1), Rat(0), Rat(-1)};
      for (int i = 0; i < fold; ++i) mult = mult * base;
      integrand = RatFunc(mult) * integrand;
      shape.exponent -= fold;
      if (shape.exponent <= -1)
        throw std::domain_error("numeric_inner_product: nonintegrable pole at a kernel center");
    }
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    if (shape.family == Family::Laguerre) lo = Rat(0);
    if (shape.family == Family::Jacobi) {
      lo = Rat(-1);
      hi = Rat(1);
    }
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        const Poly& den = integrand.at(i, j).den();
        if (!den.is_constant() && !has_no_roots_in_closed(den, lo, hi))
          throw std::domain_error("numeric_inner_product: pole on the support");
      }
    const QuadRule rule = rule_for(shape, points);
    for (size_t n = 0; n < rule.nodes.size(); ++n) {
      const Mat<double> v = mat_eval(integrand, rule.nodes[n]);
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) acc.at(i, j) += rule.weights[n] * v.at(i, j);
    }
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) acc.at(i, j) *= cont_scale;
  }
  for (const PointMass& m : w.masses()) {
    const QMat pv = mat_eval(p, m.t0);
    const QMat qv = mat_eval(q, m.t0);
    const QMat add = mat_scale(m.zeta, pv * m.mass * qv.transpose());
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) acc.at(i, j) += rat_to_double(add.at(i, j));
  }
  return acc;
}

double to_double(const ExactValue& v) {
  double s = 0;
  for (const auto& [u, c] : v.terms()) {
    double uval = 1;
    switch (u.kind) {
      case Unit::Kind::One:
        uval = 1;
        break;
      case Unit::Kind::SqrtPi:
        uval = std::sqrt(M_PI);
        break;
      case Unit::Kind::GammaAlphaPlus1:
        uval = std::tgamma(rat_to_double(u.param) + 1);
        break;
      case Unit::Kind::BetaHalf: {
        const double sp = rat_to_double(u.param);
        uval = std::sqrt(M_PI) * std::tgamma(sp) / std::tgamma(sp + 0.5);
        break;
      }
    }
    s += rat_to_double(c) * uval;
  }
  return s;
}

Mat<double> emat_to_double(const EMat& m) {
  return m.map<double>([](const ExactValue& v) { return to_double(v); });
}

}  // namespace mxop

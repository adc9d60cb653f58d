#include "mxop/diffop.hpp"

#include <sstream>
#include <stdexcept>

namespace mxop {

namespace {

Rat binom(int n, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
  return r;
}

RatMat nth_derivative(RatMat m, int n) {
  for (int i = 0; i < n; ++i) m = mat_derivative(m);
  return m;
}

}  // namespace

DiffOp::DiffOp(std::vector<RatMat> coef) : coef_(std::move(coef)) {
  if (coef_.empty()) throw std::invalid_argument("DiffOp: no coefficients");
  for (const auto& c : coef_)
    if (c.size() != coef_[0].size()) throw std::invalid_argument("DiffOp: size mismatch");
  while (coef_.size() > 1 && coef_.back().is_zero()) coef_.pop_back();
}

RatMat DiffOp::coef(int j) const {
  if (j >= 0 && j < static_cast<int>(coef_.size())) return coef_[j];
  return RatMat(size());
}

bool DiffOp::is_zero() const {
  for (const auto& c : coef_)
    if (!c.is_zero()) return false;
  return true;
}

RatMat DiffOp::apply(const RatMat& y) const {
  RatMat acc(size());
  RatMat d = y;
  for (size_t j = 0; j < coef_.size(); ++j) {
    if (j > 0) d = mat_derivative(d);
    if (!coef_[j].is_zero()) acc = acc + d * coef_[j];
  }
  return acc;
}

QuasiRatMat DiffOp::apply(const QuasiRatMat& y) const {
  QuasiRatMat acc;
  QuasiRatMat d = y;
  for (size_t j = 0; j < coef_.size(); ++j) {
    if (j > 0) d = d.derivative();
    if (!coef_[j].is_zero()) acc = acc + d * coef_[j];
  }
  return acc;
}

DiffOp DiffOp::operator-() const {
  std::vector<RatMat> c;
  c.reserve(coef_.size());
  for (const auto& f : coef_) c.push_back(-f);
  return DiffOp(std::move(c));
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  if (a.size() != b.size()) throw std::invalid_argument("DiffOp: size mismatch");
  std::vector<RatMat> c;
  const size_t n = std::max(a.coef_.size(), b.coef_.size());
  c.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    RatMat f(a.size());
    if (j < a.coef_.size()) f = f + a.coef_[j];
    if (j < b.coef_.size()) f = f + b.coef_[j];
    c.push_back(std::move(f));
  }
  return DiffOp(std::move(c));
}

DiffOp operator*(const RatFunc& c, const DiffOp& d) {
  std::vector<RatMat> out;
  out.reserve(d.coef_.size());
  for (const auto& f : d.coef_) {
    RatMat g(f.size());
    for (int i = 0; i < f.size(); ++i)
      for (int j = 0; j < f.size(); ++j) g.at(i, j) = c * f.at(i, j);
    out.push_back(std::move(g));
  }
  return DiffOp(std::move(out));
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.size() != b.size()) return false;
  const int n = std::max(a.order(), b.order());
  for (int j = 0; j <= n; ++j)
    if (!(a.coef(j) == b.coef(j))) return false;
  return true;
}

std::string DiffOp::str() const {
  std::ostringstream os;
  for (size_t j = 0; j < coef_.size(); ++j) {
    if (j) os << "\n";
    os << "F" << j << " = " << coef_[j].str();
  }
  return os.str();
}

DiffOp compose(const DiffOp& outer, const DiffOp& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  const int n = outer.size();
  const int p = outer.order(), q = inner.order();
  std::vector<RatMat> f(static_cast<size_t>(p + q) + 1, RatMat(n));
  // outer(inner(y)) = sum_j (sum_i y^(i) E_i)^(j) T_j
  //                 = sum_{j,l<=j,i} C(j,l) y^(i+l) E_i^(j-l) T_j.
  for (int j = 0; j <= p; ++j) {
    if (outer.coef(j).is_zero()) continue;
    for (int l = 0; l <= j; ++l) {
      const Rat c = binom(j, l);
      for (int i = 0; i <= q; ++i) {
        if (inner.coef(i).is_zero()) continue;
        RatMat term = nth_derivative(inner.coef(i), j - l) * outer.coef(j);
        f[static_cast<size_t>(i + l)] = f[static_cast<size_t>(i + l)] + mat_scale(c, term);
      }
    }
  }
  DiffOp result(std::move(f));
  // The composed coefficients determine the operator through its action on
  // monomials; cross-check against literal application.
  for (int k = 0; k <= p + q; ++k) {
    RatMat yk(n);
    for (int i = 0; i < n; ++i) yk.at(i, i) = RatFunc(Poly::monomial(k, Rat(1)));
    if (!(result.apply(yk) == outer.apply(inner.apply(yk))))
      throw std::logic_error("compose: monomial probe mismatch at degree " + std::to_string(k));
  }
  return result;
}

DiffOp formal_adjoint(const DiffOp& e, const QuasiRatMat& w) {
  const int n = e.size();
  if (w.size() != n) throw std::invalid_argument("formal_adjoint: size mismatch");
  const int m = e.order();
  // G_j = w E_j^T and its derivatives; coefficient of y^(l) is
  // (sum_{j>=l} (-1)^j C(j,l) G_j^(j-l)) w^{-1}.
  std::vector<QuasiRatMat> g;
  g.reserve(static_cast<size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) g.push_back(w * e.coef(j).transpose());
  const QuasiRatMat winv = w.inverse();
  std::vector<RatMat> out;
  out.reserve(static_cast<size_t>(m) + 1);
  for (int l = 0; l <= m; ++l) {
    QuasiRatMat acc;
    for (int j = l; j <= m; ++j) {
      QuasiRatMat d = g[static_cast<size_t>(j)];
      for (int k = 0; k < j - l; ++k) d = d.derivative();
      Rat c = binom(j, l) * (j % 2 ? Rat(-1) : Rat(1));
      acc = acc + QuasiRatMat(d.kernel(), mat_scale(c, d.body()));
    }
    out.push_back((acc * winv).to_ratmat());
  }
  return DiffOp(std::move(out));
}

std::optional<QMat> eigencheck(const DiffOp& d, const PolyMat& p, std::string* why) {
  RatMat dp = d.apply(p);
  if (!is_polynomial(dp)) {
    if (why) *why = "D(P) is not polynomial";
    return std::nullopt;
  }
  RatFunc det = mat_det(to_ratmat(p));
  if (det.is_zero()) {
    if (why) *why = "P is singular as a matrix polynomial";
    return std::nullopt;
  }
  RatMat g = dp * mat_inverse(to_ratmat(p));
  QMat gamma(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (!g.at(i, j).is_constant()) {
        if (why) *why = "D(P) P^{-1} entry (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") is not constant: " + g.at(i, j).str();
        return std::nullopt;
      }
      gamma.at(i, j) = g.at(i, j).constant_value();
    }
  return gamma;
}

namespace {

bool quasi_equal(const QuasiRatMat& a, const QuasiRatMat& b) {
  return (a - b).is_zero();
}

// The boundary terms must vanish against every power of t, so an infinite
// endpoint needs genuine exponential decay; rational decay is not enough.
bool vanishes_against_powers(const QuasiRatMat& q, const std::optional<Rat>& endpoint,
                             bool plus) {
  if (q.is_zero()) return true;
  if (endpoint) return q.vanishes_at(*endpoint);
  const Poly& e = q.kernel().exp_arg();
  if (e.is_zero()) return false;
  const int lead = rat_sign(e.leading());
  const int sign_at_inf = (plus || e.degree() % 2 == 0) ? lead : -lead;
  return sign_at_inf < 0;
}

bool vanishes_at_endpoints(const QuasiRatMat& q, const Support& s) {
  return vanishes_against_powers(q, s.lo, false) && vanishes_against_powers(q, s.hi, true);
}

}  // namespace

std::optional<std::string> symmetry_check(const DiffOp& d, const WeightSpec& w) {
  if (d.order() > 2) return "operator order exceeds 2";
  const RatMat &f0 = d.coef(0), &f1 = d.coef(1), &f2 = d.coef(2);
  if (w.has_continuous()) {
    const QuasiRatMat wc = w.continuous();
    const QuasiRatMat s2 = f2 * wc;
    const QuasiRatMat s1 = f1 * wc;
    const QuasiRatMat s0 = f0 * wc;
    if (!quasi_equal(s2, wc * f2.transpose())) return "F2 W != W F2*";
    const QuasiRatMat s2p = s2.derivative();
    if (!quasi_equal(s2p + s2p - s1, wc * f1.transpose()))
      return "2 (F2 W)' - F1 W != W F1*";
    if (!quasi_equal(s2p.derivative() - s1.derivative() + s0, wc * f0.transpose()))
      return "(F2 W)'' - (F1 W)' + F0 W != W F0*";
    if (!vanishes_at_endpoints(s2, w.support()))
      return "F2 W does not vanish at the support endpoints";
    if (!vanishes_at_endpoints(s2p - s1, w.support()))
      return "(F2 W)' - F1 W does not vanish at the support endpoints";
  }
  for (const auto& m : w.masses()) {
    QMat f2v = mat_eval(f2, m.t0);
    QMat f1v = mat_eval(f1, m.t0);
    QMat f0v = mat_eval(f0, m.t0);
    if (!(f2v * m.mass).is_zero())
      return "F2(t0) M != 0 at t0 = " + rat_str(m.t0);
    if (!(f1v * m.mass).is_zero())
      return "F1(t0) M != 0 at t0 = " + rat_str(m.t0);
    if (!(f0v * m.mass == m.mass * f0v.transpose()))
      return "F0(t0) M != M F0(t0)* at t0 = " + rat_str(m.t0);
  }
  return std::nullopt;
}

}  // namespace mxop

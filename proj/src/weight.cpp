#include "mxop/weight.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace mxop {

std::vector<Rat> Support::interior_samples(int k) const {
  std::vector<Rat> out;
  out.reserve(k);
  if (lo && hi) {
    for (int i = 1; i <= k; ++i) out.push_back(*lo + (*hi - *lo) * Rat(i) / Rat(k + 1));
  } else if (lo) {
    for (int i = 1; i <= k; ++i) out.push_back(*lo + Rat(i) / 2);
  } else if (hi) {
    for (int i = 1; i <= k; ++i) out.push_back(*hi - Rat(i) / 2);
  } else {
    for (int i = 0; i < k; ++i) out.push_back(Rat(i - k / 2));
  }
  return out;
}

WeightSpec::WeightSpec(Support s, Kernel k, RatMat density, std::vector<PointMass> masses)
    : support_(std::move(s)),
      kernel_(std::move(k)),
      density_(std::move(density)),
      masses_(std::move(masses)) {
  if (density_ != density_.transpose())
    throw std::invalid_argument("WeightSpec: density must be symmetric");
  for (const auto& m : masses_) {
    if (m.mass.size() != density_.size())
      throw std::invalid_argument("WeightSpec: point mass size mismatch");
    if (m.mass != m.mass.transpose())
      throw std::invalid_argument("WeightSpec: point mass must be symmetric");
  }
  if (density_.is_zero()) kernel_ = Kernel();
}

WeightSpec WeightSpec::from_quasi(const Support& s, const QuasiRatMat& w,
                                  std::vector<PointMass> masses) {
  return WeightSpec(s, w.kernel(), w.body(), std::move(masses));
}

WeightSpec WeightSpec::with_mass(const PointMass& m) const {
  auto masses = masses_;
  masses.push_back(m);
  return WeightSpec(support_, kernel_, density_, std::move(masses));
}

WeightSpec WeightSpec::scaled(const Rat& c) const {
  return WeightSpec(support_, kernel_, mat_scale(c, density_), masses_);
}

namespace {

bool is_gaussian(const Kernel& k, const Support& s) {
  return k.factors().empty() && k.exp_arg() == Poly{Rat(0), Rat(0), Rat(-1)} && !s.lo && !s.hi;
}

bool is_laguerre(const Kernel& k, const Support& s, Rat* alpha) {
  if (k.exp_arg() != Poly{Rat(0), Rat(-1)}) return false;
  if (!s.lo || *s.lo != 0 || s.hi) return false;
  if (k.factors().empty()) {
    *alpha = 0;
    return true;
  }
  if (k.factors().size() != 1) return false;
  const auto& f = k.factors()[0];
  if (f.center != 0 || f.sign != 1) return false;
  *alpha = f.exponent;
  return true;
}

bool is_jacobi(const Kernel& k, const Support& s, Rat* mu) {
  if (!k.exp_arg().is_zero() || k.factors().size() != 2) return false;
  if (!s.lo || !s.hi || *s.lo != -1 || *s.hi != 1) return false;
  const auto& a = k.factors()[0];  // sorted by center: -1 first
  const auto& b = k.factors()[1];
  if (a.center != -1 || a.sign != 1 || b.center != 1 || b.sign != -1) return false;
  if (a.exponent != b.exponent) return false;
  *mu = a.exponent;
  return true;
}

}  // namespace

ExactValue kernel_moment(const Kernel& k, const Support& s, int degree) {
  if (degree < 0) throw std::invalid_argument("kernel_moment: negative degree");
  Rat param;
  if (is_gaussian(k, s)) {
    if (degree % 2 == 1) return ExactValue();
    Rat c(1);
    for (int j = 0; j + 2 <= degree; j += 2) c *= Rat(j + 1) / 2;
    return ExactValue::sqrt_pi(c);
  }
  if (is_laguerre(k, s, &param)) {
    Rat c(1);
    for (int j = 1; j <= degree; ++j) c *= param + j;
    return ExactValue::gamma_alpha_plus1(param, c);
  }
  if (is_jacobi(k, s, &param)) {
    if (degree % 2 == 1) return ExactValue();
    Rat c(1);
    for (int j = 0; j + 2 <= degree; j += 2) c *= Rat(j + 1) / (Rat(j) + 2 * param + 3);
    return ExactValue::beta_half(param + 1, c);
  }
  if (k.is_trivial() && s.lo && s.hi) {
    return ExactValue((rat_pow(*s.hi, degree + 1) - rat_pow(*s.lo, degree + 1)) /
                      Rat(degree + 1));
  }
  throw std::domain_error("kernel_moment: unrecognized kernel/support family");
}

EMat exact_inner_product(const WeightSpec& w, const PolyMat& p, const PolyMat& q) {
  const int n = w.size();
  if (p.size() != n || q.size() != n)
    throw std::invalid_argument("exact_inner_product: size mismatch");
  EMat acc(n);
  if (w.has_continuous()) {
    PolyMat dens = to_polymat(w.density());
    PolyMat integrand = p * dens * q.transpose();
    for (int k = 0; k <= mat_degree(integrand); ++k) {
      ExactValue mk = kernel_moment(w.kernel(), w.support(), k);
      if (mk.is_zero()) continue;
      QMat ck = mat_coef(integrand, k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (ck.at(i, j) != 0) acc.at(i, j) = acc.at(i, j) + ExactValue(ck.at(i, j)) * mk;
    }
  }
  for (const auto& m : w.masses()) {
    QMat pv = mat_eval(p, m.t0);
    QMat qv = mat_eval(q, m.t0);
    QMat term = pv * m.mass * qv.transpose();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (term.at(i, j) != 0)
          acc.at(i, j) = acc.at(i, j) + ExactValue(m.zeta * term.at(i, j));
  }
  return acc;
}

bool decay_check(const WeightSpec& w, std::string* why) {
  if (!w.has_continuous()) return true;
  const Support& s = w.support();
  const QuasiRatMat cont = w.continuous();
  bool lo_ok = s.lo ? cont.vanishes_at(*s.lo) : cont.vanishes_at_infinity(false);
  if (!lo_ok) {
    if (why) *why = "weight does not vanish at the lower endpoint";
    return false;
  }
  bool hi_ok = s.hi ? cont.vanishes_at(*s.hi) : cont.vanishes_at_infinity(true);
  if (!hi_ok && why) *why = "weight does not vanish at the upper endpoint";
  return hi_ok;
}

namespace {

// All principal minors of a symmetric RatMat as sign-equivalent polynomials
// (numerator times denominator), n <= 3.
std::vector<std::pair<std::string, Poly>> principal_minor_polys(const RatMat& m) {
  const int n = m.size();
  if (n > 3) throw std::domain_error("positivity_check: size > 3 not supported");
  std::vector<std::pair<std::string, Poly>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    RatMat sub(static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j)
        sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    RatFunc d = mat_det(sub);
    std::ostringstream name;
    name << "minor {";
    for (size_t i = 0; i < idx.size(); ++i) name << (i ? "," : "") << idx[i] + 1;
    name << "}";
    out.emplace_back(name.str(), d.num() * d.den());
  }
  return out;
}

bool qmat_psd(const QMat& m) {
  // Symmetric input; all principal minors nonnegative.
  const int n = m.size();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    QMat sub(static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j)
        sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    if (mat_det(sub) < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> positivity_check(const WeightSpec& w) {
  const Support& s = w.support();
  if (w.has_continuous()) {
    if (!w.kernel().positive_on(s.lo, s.hi))
      return "kernel is not positive on the support interior";
    for (const auto& [name, p] : principal_minor_polys(w.density())) {
      if (p.is_zero()) continue;
      if (!poly_nonnegative_on(p, s.lo, s.hi))
        return name + " of the density is negative somewhere on the support";
    }
    RatFunc det = mat_det(w.density());
    if (det.is_zero()) return "density is singular everywhere";
  }
  for (const auto& m : w.masses()) {
    QMat scaled = m.mass;
    for (int i = 0; i < scaled.size(); ++i)
      for (int j = 0; j < scaled.size(); ++j) scaled.at(i, j) *= m.zeta;
    if (!qmat_psd(scaled))
      return "point mass at t = " + rat_str(m.t0) + " is not positive semidefinite";
  }
  return std::nullopt;
}

ReducibilityReport reducibility_probe(const WeightSpec& w, const Rat& t0,
                                      const std::vector<Rat>& samples) {
  if (w.size() != 2)
    throw std::domain_error("reducibility_probe: only 2x2 weights supported");
  QMat w0 = mat_eval(w.density(), t0);
  if (w0.at(0, 0) == 0) throw std::domain_error("reducibility_probe: pivot vanishes at t0");
  // Unit lower-triangular congruence making W(t0) diagonal.
  QMat linv = QMat::identity(2);
  linv.at(1, 0) = -w0.at(1, 0) / w0.at(0, 0);
  std::vector<QMat> normalized;
  for (const Rat& t : samples)
    normalized.push_back(linv * mat_eval(w.density(), t) * linv.transpose());
  for (size_t i = 0; i < normalized.size(); ++i)
    for (size_t j = i + 1; j < normalized.size(); ++j) {
      QMat c = normalized[i] * normalized[j] - normalized[j] * normalized[i];
      if (!c.is_zero()) {
        std::ostringstream os;
        os << "normalized W(" << rat_str(samples[i]) << ") and W(" << rat_str(samples[j])
           << ") do not commute";
        return {false, os.str()};
      }
    }
  return {true, ""};
}

}  // namespace mxop

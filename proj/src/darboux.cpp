#include "mxop/darboux.hpp"

#include <stdexcept>

namespace mxop {

namespace {

// (P')^{-1} P and P^{-1} P' stay rational for quasi-rational seeds: the
// kernel factor contributes k'/k times the identity on the logarithmic
// side and cancels outright on the other.
RatMat left_ratio(const PolyMat& seed) {
  RatMat p = to_ratmat(seed);
  return mat_inverse(mat_derivative(p)) * p;
}

RatMat left_ratio(const QuasiRatMat& seed) {
  return (seed.derivative().inverse() * seed).to_ratmat();
}

RatMat log_ratio(const PolyMat& seed) {
  RatMat p = to_ratmat(seed);
  return mat_inverse(p) * mat_derivative(p);
}

RatMat log_ratio(const QuasiRatMat& seed) {
  return (seed.inverse() * seed.derivative()).to_ratmat();
}

template <class Seed>
DiffOp annihilator_impl(const Seed& seed, const RatMat& u) {
  DiffOp a = DiffOp::first_order(-u, left_ratio(seed) * u);
  if (!a.apply(seed).is_zero())
    throw std::logic_error("build_annihilator: seed not annihilated");
  return a;
}

template <class Seed>
DiffOp log_derivative_impl(const Seed& seed) {
  RatMat plog = log_ratio(seed);
  DiffOp a0 = DiffOp::first_order(-plog, RatMat::identity(plog.size()));
  if (!a0.apply(seed).is_zero())
    throw std::logic_error("log_derivative_op: seed not annihilated");
  return a0;
}

template <class Seed>
QuasiRatMat exceptional_weight_impl(const Seed& seed, const RatMat& u, const RatMat& f2,
                                    const QuasiRatMat& w) {
  const RatMat v = mat_inverse(u) * log_ratio(seed);
  QuasiRatMat out = v * (f2 * w) * v.transpose();
  if (!(out - out.transpose()).is_zero())
    throw std::logic_error("exceptional_weight: result is not symmetric");
  return out;
}

template <class Seed>
std::optional<std::string> kernel_form_impl(const DiffOp& d, const Seed& seed,
                                            const RatMat& u, const Factorization& f,
                                            const QuasiRatMat& w) {
  const RatMat plog = log_ratio(seed);
  const RatMat f2 = d.coef(2);

  RatMat l = mat_scale(Rat(1, 2), d.coef(1)) + plog * f2;
  if (!((l * w) - (w * l.transpose())).is_zero())
    return "(F1/2 + P^{-1}P'F2) W is not symmetric";

  const DiffOp a0 = log_derivative_impl(seed);
  const DiffOp a0adj = formal_adjoint(a0, w);
  if (!(-compose(a0adj, compose(DiffOp::order0(f2), a0)) == d))
    return "D != -A0' o F2 o A0";

  const RatMat uinv = mat_inverse(u);
  const RatMat v = uinv * plog;
  if (!(f.b.coef(1) == v * f2)) return "B1 != U^{-1}P^{-1}P' F2";
  if (!(f.b.coef(0) == -(uinv * d.coef(0)) - uinv * mat_derivative(u) * v * f2))
    return "B0 != -U^{-1}F0 - U^{-1}U'U^{-1}P^{-1}P' F2";

  if (!(f.b == -compose(a0adj, DiffOp::order0(v * f2)))) return "B != -A0' o (V F2)";
  return std::nullopt;
}

template <class Seed>
std::optional<std::string> conjugate_route_impl(const DiffOp& dnew, const Seed& seed,
                                                const RatMat& u, const RatMat& f2,
                                                const QuasiRatMat& w) {
  const DiffOp a0 = log_derivative_impl(seed);
  const DiffOp dtilde =
      -compose(a0, compose(formal_adjoint(a0, w), DiffOp::order0(f2)));
  const RatMat v = mat_inverse(u) * log_ratio(seed);
  const DiffOp routed =
      compose(DiffOp::order0(mat_inverse(v)), compose(dtilde, DiffOp::order0(v)));
  if (!(routed == dnew)) return "Dnew(y) != Dtilde(y V) V^{-1}";
  return std::nullopt;
}

}  // namespace

DiffOp build_annihilator(const PolyMat& seed, const RatMat& u) {
  return annihilator_impl(seed, u);
}

DiffOp build_annihilator(const QuasiRatMat& seed, const RatMat& u) {
  return annihilator_impl(seed, u);
}

DiffOp log_derivative_op(const PolyMat& seed) { return log_derivative_impl(seed); }

DiffOp log_derivative_op(const QuasiRatMat& seed) { return log_derivative_impl(seed); }

Factorization factorize(const DiffOp& d, const DiffOp& a) {
  if (d.order() > 2 || a.order() != 1)
    throw std::invalid_argument("factorize: need D of order <= 2 and first-order A");
  const RatMat a0 = a.coef(0), a1 = a.coef(1);
  const RatMat a1inv = mat_inverse(a1);
  const RatMat b1 = a1inv * d.coef(2);
  const RatMat b0 = a1inv * (d.coef(1) - (a0 + mat_derivative(a1)) * b1);
  const RatMat psi = a0 * b0 + mat_derivative(a0) * b1 - d.coef(0);
  Factorization f{a, DiffOp::first_order(b0, b1), psi};
  if (!(compose(f.b, f.a) - DiffOp::order0(psi) == d))
    throw std::logic_error("factorize: B(A(y)) - y Psi does not reproduce D");
  return f;
}

bool eq3f_check(const DiffOp& a, const RatMat& psi, std::string* why) {
  const RatMat lhs = a.apply(psi);
  const RatMat rhs = a.coef(0) * conjugated_psi(a, psi);
  if (lhs == rhs) return true;
  if (why) *why = "A(Psi) != A0 A1^{-1} Psi A1";
  return false;
}

RatMat conjugated_psi(const DiffOp& a, const RatMat& psi) {
  const RatMat a1 = a.coef(1);
  return mat_inverse(a1) * psi * a1;
}

DiffOp darboux_transform(const DiffOp& d, const Factorization& f) {
  DiffOp dnew = compose(f.a, f.b) - DiffOp::order0(conjugated_psi(f.a, f.psi));
  if (!(compose(dnew, f.a) == compose(f.a, d)))
    throw std::logic_error("darboux_transform: intertwining A o D = Dnew o A fails");
  return dnew;
}

QuasiRatMat exceptional_weight(const PolyMat& seed, const RatMat& u, const RatMat& f2,
                               const QuasiRatMat& w) {
  return exceptional_weight_impl(seed, u, f2, w);
}

QuasiRatMat exceptional_weight(const QuasiRatMat& seed, const RatMat& u, const RatMat& f2,
                               const QuasiRatMat& w) {
  return exceptional_weight_impl(seed, u, f2, w);
}

std::optional<std::string> kernel_form_checks(const DiffOp& d, const PolyMat& seed,
                                              const RatMat& u, const Factorization& f,
                                              const QuasiRatMat& w) {
  return kernel_form_impl(d, seed, u, f, w);
}

std::optional<std::string> kernel_form_checks(const DiffOp& d, const QuasiRatMat& seed,
                                              const RatMat& u, const Factorization& f,
                                              const QuasiRatMat& w) {
  return kernel_form_impl(d, seed, u, f, w);
}

std::optional<std::string> conjugate_route_check(const DiffOp& dnew, const PolyMat& seed,
                                                 const RatMat& u, const RatMat& f2,
                                                 const QuasiRatMat& w) {
  return conjugate_route_impl(dnew, seed, u, f2, w);
}

std::optional<std::string> conjugate_route_check(const DiffOp& dnew, const QuasiRatMat& seed,
                                                 const RatMat& u, const RatMat& f2,
                                                 const QuasiRatMat& w) {
  return conjugate_route_impl(dnew, seed, u, f2, w);
}

WeightSpec delta_extension(const WeightSpec& w, const DiffOp& d, const PointMass& m) {
  if (m.zeta == 0) return w;
  bool scalar_mass = true;
  for (int i = 0; i < m.mass.size() && scalar_mass; ++i)
    for (int j = 0; j < m.mass.size() && scalar_mass; ++j)
      if (m.mass.at(i, j) != (i == j ? m.mass.at(0, 0) : Rat(0))) scalar_mass = false;
  if (scalar_mass && m.mass.at(0, 0) != 0)
    throw std::invalid_argument(
        "delta_extension: M proportional to the identity never satisfies F2(t0) M = 0");
  WeightSpec probe(w.support(), Kernel(), RatMat(w.size()), {m});
  if (auto wit = symmetry_check(d, probe))
    throw std::domain_error("delta_extension: " + *wit);
  return w.with_mass(m);
}

EMat chain_gram(const QMat& gamma_n, const EMat& classical_gram) {
  return emat_mul(-gamma_n, classical_gram);
}

}  // namespace mxop
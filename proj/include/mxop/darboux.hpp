// Quasi-Darboux machinery: factor a second-order operator D through a
// first-order annihilator A as D(y) = B(A(y)) - y Psi, push it to the
// transformed operator, and carry the weight along. Every step re-checks
// its own defining identity before returning.
#pragma once

#include "mxop/diffop.hpp"

namespace mxop {

struct Factorization {
  DiffOp a;    // A(y) = y A0 + y' A1
  DiffOp b;    // B(z) = z B0 + z' B1
  RatMat psi;  // D(y) = B(A(y)) - y Psi
};

// A(y) = -y U + y' (P')^{-1} P U, built to annihilate the seed P. The
// quasi-rational overload accepts seeds carrying a kernel factor; the
// ratio (P')^{-1} P stays rational either way.
DiffOp build_annihilator(const PolyMat& seed, const RatMat& u);
DiffOp build_annihilator(const QuasiRatMat& seed, const RatMat& u);

// A0(y) = y' - y P^{-1} P'; annihilates P with unit leading coefficient.
DiffOp log_derivative_op(const PolyMat& seed);
DiffOp log_derivative_op(const QuasiRatMat& seed);

// Unique B and Psi with D(y) = B(A(y)) - y Psi, for invertible A1 and D of
// order at most two. The identity is re-verified exactly before returning.
Factorization factorize(const DiffOp& d, const DiffOp& a);

// A(Psi) = A0 A1^{-1} Psi A1, the compatibility that makes the transformed
// operator intertwine with D.
bool eq3f_check(const DiffOp& a, const RatMat& psi, std::string* why = nullptr);

RatMat conjugated_psi(const DiffOp& a, const RatMat& psi);  // A1^{-1} Psi A1

// The transformed operator A(B(y)) - y A1^{-1} Psi A1; throws unless the
// exact intertwining A o D = Dnew o A holds.
DiffOp darboux_transform(const DiffOp& d, const Factorization& f);

// V F2 W V^* with V = U^{-1} P^{-1} P', the weight attached to the
// transformed operator.
QuasiRatMat exceptional_weight(const PolyMat& seed, const RatMat& u, const RatMat& f2,
                               const QuasiRatMat& w);
QuasiRatMat exceptional_weight(const QuasiRatMat& seed, const RatMat& u, const RatMat& f2,
                               const QuasiRatMat& w);

// Identities special to an annihilator built from a W-symmetric D and an
// eigenfunction seed. Each returns a witness for the first failure.
//   lus:  (F1/2 + P^{-1}P'F2) W = W (F1/2 + P^{-1}P'F2)^*
//   sadj: D = -A0' o F2 o A0           (adjoint taken against W)
//   kt0:  B1 = V F2,  B0 = -U^{-1} F0 - U^{-1} U' V F2
//   kt1:  B  = -A0' o (V F2)
// with V = U^{-1} P^{-1} P'.
std::optional<std::string> kernel_form_checks(const DiffOp& d, const PolyMat& seed,
                                              const RatMat& u, const Factorization& f,
                                              const QuasiRatMat& w);
std::optional<std::string> kernel_form_checks(const DiffOp& d, const QuasiRatMat& seed,
                                              const RatMat& u, const Factorization& f,
                                              const QuasiRatMat& w);

// Dnew(y) = Dtilde(y V) V^{-1} with Dtilde = -A0 o A0' o F2, the route that
// reaches the transformed operator without ever forming B.
std::optional<std::string> conjugate_route_check(const DiffOp& dnew, const PolyMat& seed,
                                                 const RatMat& u, const RatMat& f2,
                                                 const QuasiRatMat& w);
std::optional<std::string> conjugate_route_check(const DiffOp& dnew, const QuasiRatMat& seed,
                                                 const RatMat& u, const RatMat& f2,
                                                 const QuasiRatMat& w);

// Attach a point mass to a weight without breaking the symmetry of d;
// throws when zeta != 0 and the point conditions fail, or when M is a
// multiple of the identity (the extension is only defined for singular M).
WeightSpec delta_extension(const WeightSpec& w, const DiffOp& d, const PointMass& m);

// Exceptional Gram blocks through the factorization chain:
// <A(P_n), A(P_m)>_{V F2 W V^*} = -Gamma_n <P_n, P_m>_W.
EMat chain_gram(const QMat& gamma_n, const EMat& classical_gram);

}  // namespace mxop

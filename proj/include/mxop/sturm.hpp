// Sturm chains: exact real-root counting for polynomials over Rat.
#pragma once

#include <optional>
#include <vector>

#include "mxop/poly.hpp"

namespace mxop {

// Number of distinct real roots of p in the interval (lo, hi]; an empty
// optional bound means the corresponding infinity. The zero polynomial is
// rejected.
int count_real_roots(const Poly& p, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi);

// Distinct real roots on the whole line.
inline int count_real_roots(const Poly& p) {
  return count_real_roots(p, std::nullopt, std::nullopt);
}

// True when p has no real root in the closed interval [lo, hi] (infinite
// bounds close to the whole line). Endpoint roots are checked directly.
bool has_no_roots_in_closed(const Poly& p, const std::optional<Rat>& lo,
                            const std::optional<Rat>& hi);

// Squarefree decomposition p = c * prod_i part[i]^(i+1) (Yun); parts are
// monic, pairwise coprime, possibly constant 1.
std::vector<Poly> squarefree_parts(const Poly& p);

// Exact decision of p(t) >= 0 for every t in the open interval (lo, hi).
// Sign changes can only happen at odd-multiplicity roots, so those are
// counted with Sturm chains and the sign is pinned at one sample point.
bool poly_nonnegative_on(const Poly& p, const std::optional<Rat>& lo,
                         const std::optional<Rat>& hi);

}  // namespace mxop

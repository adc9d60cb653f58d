#include "mxop/sturm.hpp"

namespace mxop {

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> s;
  // Square-free part: distinct roots are what the chain counts anyway, and
  // dividing by gcd(p, p') keeps the chain short.
  Poly f = p;
  const Poly g = Poly::gcd(p, p.derivative());
  if (g.degree() > 0) f = Poly::exact_div(f, g);
  s.push_back(f);
  if (f.degree() > 0) s.push_back(f.derivative());
  while (s.back().degree() > 0) {
    Poly q, r;
    Poly::divmod(s[s.size() - 2], s.back(), q, r);
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

int sign_at(const Poly& p, const std::optional<Rat>& x, bool at_plus_infinity) {
  if (p.is_zero()) return 0;
  if (x) return rat_sign(p.eval(*x));
  const int lead = rat_sign(p.leading());
  if (at_plus_infinity) return lead;
  return p.degree() % 2 == 0 ? lead : -lead;
}

int sign_changes(const std::vector<Poly>& chain, const std::optional<Rat>& x,
                 bool at_plus_infinity) {
  int changes = 0, prev = 0;
  for (const Poly& p : chain) {
    const int s = sign_at(p, x, at_plus_infinity);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const Poly& p, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi) {
  if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  if (lo && hi && *lo >= *hi) return 0;
  const auto chain = sturm_chain(p);
  return sign_changes(chain, lo, false) - sign_changes(chain, hi, true);
}

bool has_no_roots_in_closed(const Poly& p, const std::optional<Rat>& lo,
                            const std::optional<Rat>& hi) {
  if (p.is_zero()) return false;
  if (lo && p.eval(*lo) == 0) return false;
  if (hi && p.eval(*hi) == 0) return false;
  return count_real_roots(p, lo, hi) == 0;
}

std::vector<Poly> squarefree_parts(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_parts: zero polynomial");
  std::vector<Poly> parts;
  if (p.degree() == 0) return parts;
  // Yun's algorithm.
  Poly g = Poly::gcd(p, p.derivative());
  Poly w = Poly::exact_div(p, g);
  Poly y = Poly::exact_div(p.derivative(), g);
  Poly z = y - w.derivative();
  while (!z.is_zero()) {
    Poly a = Poly::gcd(w, z);
    parts.push_back(a);
    w = Poly::exact_div(w, a);
    y = Poly::exact_div(z, a);
    z = y - w.derivative();
  }
  parts.push_back((Rat(1) / w.leading()) * w);  // shed the content
  return parts;
}

bool poly_nonnegative_on(const Poly& p, const std::optional<Rat>& lo,
                         const std::optional<Rat>& hi) {
  if (p.is_zero()) return true;
  if (lo && hi && *lo >= *hi) return true;
  const auto parts = squarefree_parts(p);
  for (size_t i = 0; i < parts.size(); i += 2) {  // odd multiplicities i+1
    if (parts[i].degree() <= 0) continue;
    int inside = count_real_roots(parts[i], lo, hi);
    // count_real_roots works on (lo, hi]; a root exactly at hi does not
    // change the sign inside the open interval.
    if (hi && parts[i].eval(*hi) == 0) --inside;
    if (inside > 0) return false;
  }
  // Constant sign on the interval; pin it at one interior non-root point.
  Rat t;
  if (lo && hi)
    t = (*lo + *hi) / 2;
  else if (lo)
    t = *lo + 1;
  else if (hi)
    t = *hi - 1;
  else
    t = Rat(0);
  Rat step = (lo && hi) ? (*hi - *lo) / 4 : Rat(1);
  for (int tries = 0; tries < 64; ++tries) {
    Rat v = p.eval(t);
    if (v != 0) return v > 0;
    t += step / (tries + 1);
    if ((lo && t <= *lo) || (hi && t >= *hi)) t -= step / (tries + 1) * 2;
  }
  throw std::runtime_error("poly_nonnegative_on: could not find a non-root sample");
}

}  // namespace mxop

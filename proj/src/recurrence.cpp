#include "mxop/recurrence.hpp"

#include <optional>
#include <stdexcept>

namespace mxop {

RecurrenceFit fit_recurrence(const std::function<PolyMat(int)>& family,
                             const std::set<int>& gaps, const Poly& q, int n) {
  if (n < 0 || gaps.count(n)) throw std::invalid_argument("fit_recurrence: bad target index");
  RecurrenceFit fit;
  PolyMat r = q * family(n);
  while (!r.is_zero()) {
    const int d = mat_degree(r);
    const QMat cd = mat_coef(r, d);
    if (gaps.count(d)) {
      fit.witness = "degree " + std::to_string(d) + " lands on a gap with block " + cd.str();
      return fit;
    }
    const PolyMat pd = family(d);
    QMat lead = mat_coef(pd, d);
    QMat c;
    try {
      c = cd * mat_inverse(lead);
    } catch (const std::exception&) {
      fit.witness = "member " + std::to_string(d) + " has a singular leading block";
      return fit;
    }
    fit.coeffs[d] = c;
    r = r - from_qmat(c) * pd;
    if (!r.is_zero() && mat_degree(r) >= d) {
      fit.witness = "elimination stalled at degree " + std::to_string(d);
      return fit;
    }
  }
  fit.exact = true;
  return fit;
}

namespace {

// B = c A for a scalar c, decided exactly. Both zero leaves c free.
std::optional<Rat> entry_ratio(const Poly& a, const Poly& b, bool* bad) {
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  if (a.is_zero() || b.is_zero()) {
    *bad = true;
    return std::nullopt;
  }
  const Rat c = b.leading() / a.leading();
  if (!(c * a == b)) {
    *bad = true;
    return std::nullopt;
  }
  return c;
}

}  // namespace

ConjugationReport conjugation_check(const std::function<PolyMat(int)>& a,
                                    const std::function<PolyMat(int)>& b,
                                    const std::vector<int>& indices) {
  ConjugationReport rep;
  if (indices.empty()) throw std::invalid_argument("conjugation_check: no indices");
  const int sz = a(indices.front()).size();
  std::vector<std::optional<Rat>> right(sz);
  right[0] = Rat(1);
  std::map<int, std::vector<std::optional<Rat>>> lefts;
  for (int n : indices) {
    const PolyMat an = a(n);
    const PolyMat bn = b(n);
    if (an.size() != sz || bn.size() != sz)
      throw std::invalid_argument("conjugation_check: size mismatch");
    std::vector<std::vector<std::optional<Rat>>> ratio(sz, std::vector<std::optional<Rat>>(sz));
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        bool bad = false;
        ratio[i][j] = entry_ratio(an.at(i, j), bn.at(i, j), &bad);
        if (bad) {
          rep.witness = "index " + std::to_string(n) + ": entry (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ") is not a scalar multiple";
          return rep;
        }
      }
    std::vector<std::optional<Rat>> left(sz);
    // Propagate until nothing new: a known r_j fixes l_i through any
    // constrained entry, and a known l_i fixes r_j the same way.
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) {
          if (!ratio[i][j]) continue;
          if (!left[i] && right[j] && *right[j] != 0) {
            left[i] = *ratio[i][j] / *right[j];
            moved = true;
          }
          if (left[i] && !right[j] && *left[i] != 0) {
            right[j] = *ratio[i][j] / *left[i];
            moved = true;
          }
        }
    }
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        if (!ratio[i][j]) continue;
        if (!left[i] || !right[j]) {
          rep.witness = "index " + std::to_string(n) + ": entry (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ") stays undetermined";
          return rep;
        }
        if (*ratio[i][j] != *left[i] * *right[j]) {
          rep.witness = "index " + std::to_string(n) + ": entry (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ") conflicts with the shared right factor";
          return rep;
        }
      }
    lefts[n] = left;
  }
  QMat rmat(sz);
  for (int j = 0; j < sz; ++j) rmat.at(j, j) = right[j] ? *right[j] : Rat(1);
  for (auto& [n, left] : lefts) {
    QMat lmat(sz);
    for (int i = 0; i < sz; ++i) lmat.at(i, i) = left[i] ? *left[i] : Rat(1);
    if (!(from_qmat(lmat) * a(n) * from_qmat(rmat) == b(n))) {
      rep.witness = "index " + std::to_string(n) + ": reconstruction mismatch";
      return rep;
    }
    rep.left[n] = lmat;
  }
  rep.right = rmat;
  rep.ok = true;
  return rep;
}

}  // namespace mxop

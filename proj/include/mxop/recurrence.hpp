// Band recurrences for families with gaps, and diagonal conjugation between
// two families.
#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mxop/matrix.hpp"

namespace mxop {

// q(t) P_n = sum_j coeffs[j] P_j, solved exactly by descending-degree
// elimination against the family members. A degree that lands on a gap with
// a nonzero block left over makes the fit infeasible; the witness says
// where. Members the expansion never touches are simply absent from coeffs.
struct RecurrenceFit {
  bool exact = false;
  std::map<int, QMat> coeffs;
  std::string witness;
};

RecurrenceFit fit_recurrence(const std::function<PolyMat(int)>& family,
                             const std::set<int>& gaps, const Poly& q, int n);

// Solves B_n = L_n A_n R over the given indices with every L_n diagonal and
// one diagonal R shared by all of them, normalized by R_11 = 1. Entries are
// matched by exact scalar proportionality, so the report either certifies
// the identity or names the entry that breaks it.
struct ConjugationReport {
  bool ok = false;
  QMat right;
  std::map<int, QMat> left;
  std::string witness;
};

ConjugationReport conjugation_check(const std::function<PolyMat(int)>& a,
                                    const std::function<PolyMat(int)>& b,
                                    const std::vector<int>& indices);

}  // namespace mxop

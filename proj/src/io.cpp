#include "mxop/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace mxop {

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rat_from_json: expected a string");
  return rat_parse(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(rat_to_json(p.coef(k)));
  if (p.is_zero()) arr = Json::array({rat_to_json(Rat(0))});
  return arr;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("poly_from_json: expected an array");
  std::vector<Rat> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(rat_from_json(e));
  return Poly(std::move(c));
}

Json ratfunc_to_json(const RatFunc& f) {
  return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {

template <typename T, typename F>
Json mat_to_json_with(const Mat<T>& m, F entry) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(entry(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T, typename F>
Mat<T> mat_from_json_with(const Json& j, F entry) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix json: expected rows");
  const int n = static_cast<int>(j.size());
  Mat<T> m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix json: ragged rows");
    for (int k = 0; k < n; ++k) m.at(i, k) = entry(row.at(k));
  }
  return m;
}

}  // namespace

Json qmat_to_json(const QMat& m) {
  return mat_to_json_with(m, [](const Rat& r) { return rat_to_json(r); });
}

QMat qmat_from_json(const Json& j) {
  return mat_from_json_with<Rat>(j, [](const Json& e) { return rat_from_json(e); });
}

Json polymat_to_json(const PolyMat& m) {
  return mat_to_json_with(m, [](const Poly& p) { return poly_to_json(p); });
}

PolyMat polymat_from_json(const Json& j) {
  return mat_from_json_with<Poly>(j, [](const Json& e) { return poly_from_json(e); });
}

Json ratmat_to_json(const RatMat& m) {
  return mat_to_json_with(m, [](const RatFunc& f) { return ratfunc_to_json(f); });
}

RatMat ratmat_from_json(const Json& j) {
  return mat_from_json_with<RatFunc>(j, [](const Json& e) { return ratfunc_from_json(e); });
}

Json kernel_to_json(const Kernel& k) {
  Json factors = Json::array();
  for (const auto& f : k.factors())
    factors.push_back(Json{{"center", rat_to_json(f.center)},
                           {"exponent", rat_to_json(f.exponent)},
                           {"sign", f.sign}});
  return Json{{"exp", poly_to_json(k.exp_arg())}, {"factors", std::move(factors)}};
}

Kernel kernel_from_json(const Json& j) {
  Kernel k = Kernel::exp_poly(poly_from_json(j.at("exp")));
  for (const auto& f : j.at("factors"))
    k = k.times(Kernel::power(rat_from_json(f.at("center")), rat_from_json(f.at("exponent")),
                              f.at("sign").get<int>()));
  return k;
}

Json support_to_json(const Support& s) {
  Json j;
  j["lo"] = s.lo ? rat_to_json(*s.lo) : Json(nullptr);
  j["hi"] = s.hi ? rat_to_json(*s.hi) : Json(nullptr);
  return j;
}

Support support_from_json(const Json& j) {
  Support s;
  if (!j.at("lo").is_null()) s.lo = rat_from_json(j.at("lo"));
  if (!j.at("hi").is_null()) s.hi = rat_from_json(j.at("hi"));
  return s;
}

Json weight_to_json(const WeightSpec& w) {
  Json masses = Json::array();
  for (const auto& m : w.masses())
    masses.push_back(Json{{"t0", rat_to_json(m.t0)},
                          {"zeta", rat_to_json(m.zeta)},
                          {"mass", qmat_to_json(m.mass)}});
  return Json{{"support", support_to_json(w.support())},
              {"kernel", kernel_to_json(w.kernel())},
              {"density", ratmat_to_json(w.density())},
              {"masses", std::move(masses)}};
}

WeightSpec weight_from_json(const Json& j) {
  std::vector<PointMass> masses;
  for (const auto& m : j.at("masses"))
    masses.push_back(PointMass{rat_from_json(m.at("t0")), rat_from_json(m.at("zeta")),
                               qmat_from_json(m.at("mass"))});
  return WeightSpec(support_from_json(j.at("support")), kernel_from_json(j.at("kernel")),
                    ratmat_from_json(j.at("density")), std::move(masses));
}

Json op_to_json(const DiffOp& d) {
  Json coeffs = Json::array();
  for (int k = 0; k <= d.order(); ++k) coeffs.push_back(ratmat_to_json(d.coef(k)));
  return Json{{"coeffs", std::move(coeffs)}};
}

DiffOp op_from_json(const Json& j) {
  std::vector<RatMat> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(ratmat_from_json(c));
  return DiffOp(std::move(coeffs));
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string weight_grid_csv(const WeightSpec& w, double lo, double hi, double step,
                            double cont_scale) {
  if (step <= 0) throw std::invalid_argument("weight_grid_csv: step must be positive");
  if (w.size() != 2) throw std::invalid_argument("weight_grid_csv: expected a 2x2 weight");
  std::string out;
  char buf[64];
  const QuasiRatMat cw = w.continuous();
  for (int k = 0;; ++k) {
    const double t = lo + k * step;
    if (t > hi + step * 1e-9) break;
    const Mat<double> v = cw.eval(t);
    std::snprintf(buf, sizeof buf, "%.12g", t);
    out += buf;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::snprintf(buf, sizeof buf, ",%.12g", cont_scale * v.at(i, j));
        out += buf;
      }
    out += "\n";
  }
  return out;
}

}  // namespace mxop

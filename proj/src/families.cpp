#include "mxop/families.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mxop {

namespace {

RatMat rm2(const RatFunc& e00, const RatFunc& e01, const RatFunc& e10, const RatFunc& e11) {
  return RatMat(2, {e00, e01, e10, e11});
}

PolyMat pm2(const Poly& e00, const Poly& e01, const Poly& e10, const Poly& e11) {
  return PolyMat(2, {e00, e01, e10, e11});
}

RatMat rm_eye(const Rat& c) {
  RatMat m(2);
  m.at(0, 0) = RatFunc(Poly(c));
  m.at(1, 1) = m.at(0, 0);
  return m;
}

Poly mono(int k, const Rat& c) { return Poly::monomial(k, c); }

}  // namespace

Poly hermite_poly(int n) {
  if (n < 0) throw std::invalid_argument("hermite_poly: negative index");
  Poly prev(Rat(1));
  if (n == 0) return prev;
  Poly cur = mono(1, Rat(2));
  for (int k = 1; k < n; ++k) {
    Poly next = mono(1, Rat(2)) * cur - Rat(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly laguerre_monic(int n, const Rat& alpha) {
  if (n < 0) throw std::invalid_argument("laguerre_monic: negative index");
  Poly prev(Rat(1));
  if (n == 0) return prev;
  Poly cur = Poly{-(alpha + 1), Rat(1)};
  for (int k = 1; k < n; ++k) {
    Poly next = (Poly{-(2 * Rat(k) + alpha + 1), Rat(1)}) * cur - (Rat(k) * (Rat(k) + alpha)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly jacobi_monic(int n, const Rat& mu) {
  if (n < 0) throw std::invalid_argument("jacobi_monic: negative index");
  if (mu <= -1) throw std::invalid_argument("jacobi_monic: need mu > -1");
  Poly prev(Rat(1));
  if (n == 0) return prev;
  Poly cur = mono(1, Rat(1));
  for (int k = 1; k < n; ++k) {
    const Rat beta = k == 1 ? Rat(1) / (2 * mu + 3)
                            : Rat(k) * (Rat(k) + 2 * mu) /
                                  ((2 * Rat(k) + 2 * mu + 1) * (2 * Rat(k) + 2 * mu - 1));
    Poly next = mono(1, Rat(1)) * cur - beta * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

WeightSpec HermiteFamily::weight() const {
  const Rat a2 = a * a;
  return WeightSpec(Support::real_line(), Kernel::gaussian(),
                    rm2(Poly{xi, Rat(0), a2}, mono(1, a), mono(1, a), Poly(Rat(1))));
}

PolyMat HermiteFamily::poly(int n) const {
  if (n < 0) throw std::invalid_argument("HermiteFamily::poly: negative index");
  const Poly hn = hermite_poly(n);
  const Poly hm = n > 0 ? hermite_poly(n - 1) : Poly();
  const Rat nn(n);
  const Poly off = (-a * nn) * hm;
  return pm2(hn, off, off, xi * hn + mono(1, a * a * nn) * hm);
}

EMat HermiteFamily::norm(int n) const {
  Rat f(1);
  for (int k = 1; k <= n; ++k) f *= 2 * Rat(k);
  QMat d(2);
  d.at(0, 0) = f * (xi + a * a * Rat(n + 1) / 2);
  d.at(1, 1) = f * xi * (xi + a * a * Rat(n) / 2);
  return emat_from_q(d, Unit::sqrt_pi());
}

DiffOp HermiteFamily::op(int i) const {
  const Rat a2 = a * a;
  switch (i) {
    case 1:
      return DiffOp::second_order(rm2(Poly(Rat(-2)), 0, 0, 0),
                                  rm2(mono(1, Rat(-2)), Poly(2 * a), 0, mono(1, Rat(-2))),
                                  rm_eye(1));
    case 2:
      return DiffOp::second_order(
          rm2(0, 0, 0, Poly(xi)),
          rm2(0, Poly(a * xi / 2), Poly(-a / 2), mono(1, a2 / 2)),
          rm2(Poly(-a2 / 4), mono(1, a2 * a / 4), 0, 0));
    case 3:
      return DiffOp::second_order(
          rm2(0, Poly(xi * (a2 + 2 * xi) / a), 0, 0),
          rm2(Poly(-a2 - xi), mono(1, a * (a2 + 2 * xi)), 0, Poly(xi)),
          rm2(mono(1, -a2 / 2), mono(2, a2 * a / 2), Poly(-a / 2), mono(1, a2 / 2)));
    case 4:
      return DiffOp::second_order(rm2(0, 0, Poly(Rat(1)), 0),
                                  rm2(Poly(a / 2), 0, 0, Poly(-a / 2)),
                                  rm2(0, Poly(-a2 / 4), 0, 0));
    default:
      throw std::invalid_argument("HermiteFamily::op: index must be 1..4");
  }
}

DiffOp HermiteFamily::combo(const std::array<Rat, 5>& u) const {
  DiffOp d = DiffOp::order0(rm_eye(u[4]));
  for (int i = 1; i <= 4; ++i)
    if (u[i - 1] != 0) d = d + RatFunc(Poly(u[i - 1])) * op(i);
  return d;
}

QMat HermiteFamily::eigenvalue(int n, const std::array<Rat, 5>& u) const {
  const Rat u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4];
  const Rat h = a * a * Rat(n) / 2 + xi;
  QMat g(2);
  g.at(0, 0) = -2 * Rat(n + 1) * u1 + u5;
  g.at(0, 1) = u3 == 0 ? Rat(0) : (Rat(n + 1) * a * a + 2 * xi) * u3 / a;
  g.at(1, 0) = h * u4;
  g.at(1, 1) = -2 * Rat(n) * u1 + h * u2 + u5;
  return g;
}

WeightSpec LaguerreFamily::weight() const {
  const Rat a2 = a * a;
  return WeightSpec(Support::half_line(), Kernel::laguerre(alpha),
                    rm2(Poly{Rat(0), Rat(1), a2}, mono(1, a), mono(1, a), Poly(Rat(1))));
}

PolyMat LaguerreFamily::poly(int n) const {
  if (n < 0) throw std::invalid_argument("LaguerreFamily::poly: negative index");
  const Poly t = mono(1, Rat(1));
  const Poly ln1 = laguerre_monic(n, alpha + 1);
  const Poly ln = laguerre_monic(n, alpha);
  const Poly lnext = laguerre_monic(n + 1, alpha);
  const Poly lm1 = n > 0 ? laguerre_monic(n - 1, alpha + 1) : Poly();
  const Rat nn(n);
  return pm2(ln1, a * (lnext - t * ln1), (-a * nn) * lm1, mono(1, a * a * nn) * lm1 + ln);
}

EMat LaguerreFamily::norm(int n) const { return exact_inner_product(weight(), poly(n), poly(n)); }

DiffOp LaguerreFamily::op(int i) const {
  const Rat a2 = a * a;
  const Rat al = alpha;
  switch (i) {
    case 1:
      return DiffOp::second_order(
          rm2(Poly(-al - 3), Poly(a * (al + 1)), 0, Poly(-al - 2)),
          rm2(Poly{al + 2, Rat(-1)}, mono(1, a), 0, Poly{al + 1, Rat(-1)}),
          rm2(mono(1, Rat(1)), 0, 0, mono(1, Rat(1))));
    case 2:
      return DiffOp::second_order(
          rm2(Poly(1 / a2), Poly(-(al + 1) / a), 0, 0),
          rm2(Poly(al + 2), mono(1, -(1 + a2 * (al + 2)) / a), Poly(1 / a), mono(1, Rat(-1))),
          rm2(mono(1, Rat(1)), mono(2, -a), 0, 0));
    case 3:
      return DiffOp({rm2(Poly(-(al + 1) / a), Poly((al + 1) * (a2 * al - 1) / a2), Poly(-1 / a2),
                         Poly((al + 1) / a)),
                     rm2(Poly{2 * (a2 + 1) * (al + 2) / a, -1 / a},
                         Poly{-(al + 2) * (al + 1), -1 / a2 - 2 * a2 * (al + 2) - 2},
                         Poly(1 / a2), Poly{-2 * (al + 1) / a, 1 / a}),
                     rm2(mono(1, a * (al + 5) + 2 / a), Poly{Rat(0), -2 * al - 4, -a2 * (al + 5) - 1},
                         Poly(al + 2), mono(1, -a * (al + 2) - 2 / a)),
                     rm2(mono(2, a), Poly{Rat(0), Rat(0), Rat(-1), -a2}, mono(1, Rat(1)),
                         mono(2, -a))});
    default:
      throw std::invalid_argument("LaguerreFamily::op: index must be 1..3");
  }
}

DiffOp LaguerreFamily::combo(const Rat& u0, const Rat& u1, const Rat& u2) const {
  DiffOp d = DiffOp::order0(rm_eye(u0));
  if (u1 != 0) d = d + RatFunc(Poly(u1)) * op(1);
  if (u2 != 0) d = d + RatFunc(Poly(u2)) * op(2);
  return d;
}

QuasiRatMat LaguerreFamily::seed() const {
  const Rat al = alpha;
  return QuasiRatMat(Kernel::exp_poly(Poly{Rat(0), Rat(1)}),
                     rm2(Poly{-al - 2, Rat(-1)}, Poly{Rat(0), a * (al + 2), a},
                         0, Poly{-al - 1, Rat(-1)}));
}

RatMat LaguerreFamily::seed_u() const {
  const Rat al = alpha;
  return rm2(Poly{al + 3, Rat(1)}, Poly{2 * a, -a}, 0, Poly{al + 2, Rat(1)});
}

QMat LaguerreFamily::seed_eigenvalue(const Rat& u0, const Rat& u2) const {
  const Rat al = alpha;
  QMat g(2);
  g.at(0, 0) = (al + 2) * u2 + u0 + u2 / (a * a);
  g.at(0, 1) = -(al + 2) * u2 / a;
  g.at(1, 0) = u2 / a;
  g.at(1, 1) = u0;
  return g;
}

GegenbauerFamily::GegenbauerFamily(Rat a_, Rat r_) : a(std::move(a_)), r(std::move(r_)) {
  if (!(r > 0) || !(a > 0) || !(a < r))
    throw std::invalid_argument("GegenbauerFamily: need r > 0 and 0 < a < r");
  if (a == 1 || a == 2 || a == r - 1 || a == r - 2)
    throw std::invalid_argument("GegenbauerFamily: a must stay away from 1, 2, r-1, r-2");
}

WeightSpec GegenbauerFamily::weight() const {
  return WeightSpec(Support::interval(Rat(-1), Rat(1)), Kernel::jacobi(r / 2 - 1),
                    rm2(Poly{r - a, Rat(0), a}, mono(1, -r), mono(1, -r),
                        Poly{a, Rat(0), r - a}));
}

PolyMat GegenbauerFamily::poly(int n) const {
  if (n < 0) throw std::invalid_argument("GegenbauerFamily::poly: negative index");
  const Poly t = mono(1, Rat(1));
  const Poly pn = jacobi_monic(n, r / 2 - 1);
  const Poly pd = pn.derivative();
  return pm2(pd, (r - a) * pn + t * pd, a * pn + t * pd, pd);
}

EMat GegenbauerFamily::norm(int n) const {
  return exact_inner_product(weight(), poly(n), poly(n));
}

DiffOp GegenbauerFamily::dtilde() const {
  QMat f0(2);
  f0.at(0, 0) = 2 * (r - 1) * (1 - a) * (2 - r + a);
  f0.at(1, 1) = 2 * (r - 1) * (2 - a) * (a - r + 1);
  return DiffOp::second_order(
      rm2(Poly(f0.at(0, 0)), 0, 0, Poly(f0.at(1, 1))),
      rm2(mono(1, (1 - a) * (2 + a - r) * (r + 2)), Poly(r * r - a * r - 2 * a - 2 * r + 4),
          Poly(a * r + 2 * a - 4 * r + 4), mono(1, (2 - a) * (a - r + 1) * (r + 2))),
      rm2(Poly{(a - 2) * (a - r + 1), Rat(0), (1 - a) * (2 + a - r)}, mono(1, r - 2 * a),
          mono(1, 2 * a - r), Poly{(a - 1) * (a - r + 2), Rat(0), (2 - a) * (a + 1 - r)}));
}

QuasiRatMat GegenbauerFamily::seed() const {
  const RatMat front = rm2(mono(1, Rat(1)), Poly(-1 / (a - r + 1)), Poly(1 / (a - 1)),
                           mono(1, Rat(1)));
  return front * weight().continuous().inverse();
}

RatMat GegenbauerFamily::seed_u() const {
  return rm2(Poly{(r + 1 - a) / (a + 1 - r), Rat(0), 1 - r},
             mono(1, 2 * (1 - r) * (a + 2 - r) / ((a - 2) * (a + 1 - r))),
             mono(1, 2 * (r - 1) * (a - 2) / ((a - 1) * (a + 2 - r))),
             Poly{-(a + 1) / (a - 1), Rat(0), -(a * r - a - r + 1) / (a - 1)});
}

std::optional<std::string> GegenbauerFamily::admissible(const Rat& a, const Rat& r) {
  if (a > 0 && a < 1) {
    if ((r > a && r < a + 1) || r > a + 2) return std::nullopt;
    return "with 0 < a < 1, need a < r < a + 1 or r > a + 2";
  }
  if (a > 1 && a < 2) {
    if (r > a + 1 && r < a + 2) return std::nullopt;
    return "with 1 < a < 2, need a + 1 < r < a + 2";
  }
  if (a > 2) {
    if (r > a && r < a + 1) return std::nullopt;
    return "with a > 2, need a < r < a + 1";
  }
  return "need a > 0 away from 1 and 2";
}

std::vector<PolyMat> gram_schmidt(const std::vector<PolyMat>& ps,
                                  const std::function<QMat(int, int)>& gram) {
  if (ps.empty()) return {};
  const int sz = ps[0].size();
  std::map<std::pair<int, int>, QMat> cache;
  auto g = [&](int i, int j) -> const QMat& {
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gram(i, j)).first;
    return it->second;
  };
  std::vector<std::vector<QMat>> lc;  // lc[j][u]: out_j = sum_u lc[j][u] ps[u]
  std::vector<QMat> norms;
  for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
    std::vector<QMat> row(k + 1, QMat(sz));
    row[k] = QMat::identity(sz);
    for (int j = 0; j < k; ++j) {
      QMat c(sz);
      for (int u = 0; u <= j; ++u) c = c + g(k, u) * lc[j][u].transpose();
      c = c * mat_inverse(norms[j]);
      for (int u = 0; u <= j; ++u) row[u] = row[u] - c * lc[j][u];
    }
    QMat nk(sz);
    for (int u = 0; u <= k; ++u) {
      if (row[u].is_zero()) continue;
      for (int v = 0; v <= k; ++v) {
        if (row[v].is_zero()) continue;
        nk = nk + row[u] * g(u, v) * row[v].transpose();
      }
    }
    if (mat_det(nk) == 0) throw std::domain_error("gram_schmidt: degenerate norm block");
    lc.push_back(std::move(row));
    norms.push_back(std::move(nk));
  }
  std::vector<PolyMat> out;
  out.reserve(ps.size());
  for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
    PolyMat acc(sz);
    for (int u = 0; u <= k; ++u) {
      if (lc[k][u].is_zero()) continue;
      acc = acc + from_qmat(lc[k][u]) * ps[u];
    }
    const int d = mat_degree(acc);
    if (d != mat_degree(ps[k])) throw std::logic_error("gram_schmidt: degree dropped");
    out.push_back(from_qmat(mat_inverse(mat_coef(acc, d))) * acc);
  }
  return out;
}

ExampleRun example1(const Rat& a) {
  if (a * a <= 2) throw std::invalid_argument("example1: need a^2 > 2");
  const HermiteFamily cf{a, 1 - a * a};
  const std::array<Rat, 5> u0 = {Rat(1), Rat(4) / (a * a - 2), Rat(0), Rat(0), Rat(4)};
  const DiffOp d0 = cf.combo(u0);
  const PolyMat p1 = cf.poly(1);
  const RatMat eye = rm_eye(1);
  const DiffOp aop = build_annihilator(p1, eye);
  Factorization f = factorize(d0, aop);
  if (!f.psi.is_zero()) throw std::logic_error("example1: expected a clean factorization");
  DiffOp dd = darboux_transform(d0, f);
  const QuasiRatMat raw = exceptional_weight(p1, eye, d0.coef(2), cf.weight().continuous());
  const Rat scale = 4 * (a * a - 2);
  const QuasiRatMat wx(raw.kernel(), mat_scale(1 / scale, raw.body()));
  auto gamma = [cf, u0](int n) { return cf.eigenvalue(n, u0); };
  return ExampleRun{
      .id = 1,
      .params = {{"a", a}},
      .gaps = {1},
      .classical = [cf](int n) { return cf.poly(n); },
      .steps = {DarbouxStep{d0, f, dd, gamma}},
      .exceptional = dd,
      .weight = WeightSpec::from_quasi(Support::real_line(), wx),
      .weight_scale = scale,
      .cont_scale = 1.0,
      .family =
          [cf, aop](int n) {
            if (n == 1) throw std::out_of_range("example1: index 1 is a gap");
            return aop.apply_poly(cf.poly(n));
          },
  };
}

ExampleRun example2(const Rat& a) {
  const HermiteFamily cf{a, 1};
  const Rat a2 = a * a;
  const std::array<Rat, 5> ut = {Rat(1), Rat(-4) / (a2 + 2), Rat(0), Rat(0), Rat(4)};
  const std::array<Rat, 5> uh = {Rat(1), Rat(-2) / (a2 + 1), Rat(0), Rat(0), Rat(6)};
  const DiffOp dt = cf.combo(ut);
  const DiffOp dh = cf.combo(uh);
  const PolyMat p1 = cf.poly(1);
  const RatMat u1 = to_ratmat(mat_derivative(p1));
  const DiffOp a1 = build_annihilator(p1, u1);
  Factorization f1 = factorize(dt, a1);
  if (!f1.psi.is_zero()) throw std::logic_error("example2: stage one should be clean");
  DiffOp mid = darboux_transform(dt, f1);
  const DiffOp d1h = darboux_transform(dh, factorize(dh, a1));
  const PolyMat p12 = a1.apply_poly(cf.poly(2));
  const RatMat u2 = rm2(Poly(Rat(1) / 2), 0, 0, Poly(1 / (a2 + 2)));
  const DiffOp a2op = build_annihilator(p12, u2);
  Factorization f2 = factorize(d1h, a2op);
  if (!f2.psi.is_zero()) throw std::logic_error("example2: stage two should be clean");
  DiffOp dd = darboux_transform(d1h, f2);
  const QuasiRatMat w1 = exceptional_weight(p1, u1, dt.coef(2), cf.weight().continuous());
  const QuasiRatMat w2 = exceptional_weight(p12, u2, d1h.coef(2), w1);
  const Rat scale = 16 * (3 * a2 + 2) * (3 * a2 + 2);
  const QuasiRatMat wx(w2.kernel(), mat_scale(1 / scale, w2.body()));
  auto g1 = [cf, ut](int n) { return cf.eigenvalue(n, ut); };
  auto g2 = [cf, uh](int n) { return cf.eigenvalue(n, uh); };
  return ExampleRun{
      .id = 2,
      .params = {{"a", a}},
      .gaps = {1, 2},
      .classical = [cf](int n) { return cf.poly(n); },
      .steps = {DarbouxStep{dt, f1, mid, g1}, DarbouxStep{d1h, f2, dd, g2}},
      .exceptional = dd,
      .weight = WeightSpec::from_quasi(Support::real_line(), wx),
      .weight_scale = scale,
      .cont_scale = 1.0,
      .family =
          [cf, a1, a2op](int n) {
            if (n == 1 || n == 2)
              throw std::out_of_range("example2: indices 1 and 2 are gaps");
            return a2op.apply_poly(a1.apply_poly(cf.poly(n)));
          },
  };
}

ExampleRun example3(const Rat& a, const Rat& alpha) {
  if (a == 0) throw std::invalid_argument("example3: need a != 0");
  if (alpha <= -1) throw std::invalid_argument("example3: need alpha > -1");
  const LaguerreFamily cf{a, alpha};
  const DiffOp d1 = cf.op(1);
  const QuasiRatMat seed = cf.seed();
  const RatMat u = cf.seed_u();
  const DiffOp aop = build_annihilator(seed, u);
  Factorization f = factorize(d1, aop);
  if (!f.psi.is_zero()) throw std::logic_error("example3: expected a clean factorization");
  DiffOp dd = darboux_transform(d1, f);
  const QuasiRatMat raw = exceptional_weight(seed, u, d1.coef(2), cf.weight().continuous());
  auto gamma = [d1, cf](int n) {
    auto g = eigencheck(d1, cf.poly(n));
    if (!g) throw std::logic_error("example3: classical polynomial fails the eigencheck");
    return *g;
  };
  return ExampleRun{
      .id = 3,
      .params = {{"a", a}, {"alpha", alpha}},
      .gaps = {0},
      .classical = [cf](int n) { return cf.poly(n); },
      .steps = {DarbouxStep{d1, f, dd, gamma}},
      .exceptional = dd,
      .weight = WeightSpec::from_quasi(Support::half_line(), raw),
      .weight_scale = Rat(1),
      .cont_scale = 1.0,
      .family =
          [cf, aop](int n) {
            if (n == 0) throw std::out_of_range("example3: index 0 is a gap");
            return aop.apply_poly(cf.poly(n - 1));
          },
  };
}

ExampleRun example4(const Rat& a, const Rat& r) {
  const GegenbauerFamily cf(a, r);
  const DiffOp dt = cf.dtilde();
  const QuasiRatMat seed = cf.seed();
  const RatMat u = cf.seed_u();
  const DiffOp aop = build_annihilator(seed, u);
  Factorization f = factorize(dt, aop);
  if (!f.psi.is_zero()) throw std::logic_error("example4: expected a clean factorization");
  DiffOp dd = darboux_transform(dt, f);
  const QuasiRatMat raw = exceptional_weight(seed, u, dt.coef(2), cf.weight().continuous());
  auto gamma = [dt, cf](int n) {
    auto g = eigencheck(dt, cf.poly(n));
    if (!g) throw std::logic_error("example4: classical polynomial fails the eigencheck");
    return *g;
  };
  return ExampleRun{
      .id = 4,
      .params = {{"a", a}, {"r", r}},
      .gaps = {1},
      .classical = [cf](int n) { return cf.poly(n); },
      .steps = {DarbouxStep{dt, f, dd, gamma}},
      .exceptional = dd,
      .weight = WeightSpec::from_quasi(Support::interval(Rat(-1), Rat(1)), raw),
      .weight_scale = Rat(1),
      .cont_scale = 1.0,
      .family =
          [cf, aop](int n) {
            if (n == 1) throw std::out_of_range("example4: index 1 is a gap");
            if (n == 0) return PolyMat::identity(2, Poly(Rat(1)));
            return aop.apply_poly(cf.poly(n - 2));
          },
  };
}

ExampleRun example5(const Rat& a, const Rat& zeta) {
  if (a * a <= 2) throw std::invalid_argument("example5: need a^2 > 2");
  if (zeta < 0) throw std::invalid_argument("example5: need zeta >= 0");
  const HermiteFamily cf{a, 1 - a * a};
  const Rat a2 = a * a;
  const std::array<Rat, 5> ub = {Rat(1), Rat(4) / a2, Rat(0), Rat(0), 4 - Rat(4) / a2};
  const std::array<Rat, 5> u0 = {Rat(1), Rat(4) / (a2 - 2), Rat(0), Rat(0), Rat(4)};
  const DiffOp db = cf.combo(ub);
  const PolyMat p1 = cf.poly(1);
  const RatMat eye = rm_eye(1);
  const DiffOp aop = build_annihilator(p1, eye);
  Factorization f = factorize(db, aop);
  DiffOp dd = darboux_transform(db, f);
  const DiffOp d0 = cf.combo(u0);
  const QuasiRatMat raw = exceptional_weight(p1, eye, d0.coef(2), cf.weight().continuous());
  const Rat scale = 4 * (a2 - 2);
  const QuasiRatMat wx(raw.kernel(), mat_scale(1 / scale, raw.body()));
  QMat mass(2);
  mass.at(1, 1) = Rat(1);
  WeightSpec w5 = delta_extension(WeightSpec::from_quasi(Support::real_line(), wx), dd,
                                  PointMass{Rat(0), zeta, mass});
  auto gamma = [cf, ub](int n) { return cf.eigenvalue(n, ub); };
  // Exact Gram of the transformed inputs: the continuous density is the
  // stage-one weight divided by sqrt(pi), so the chain block is read off as
  // its sqrt(pi) coefficient; the mass adds zeta P_i(0) M P_j(0)^T.
  auto gram_entry = [cf, u0, aop, zeta, scale, mass](int i, int j) {
    const EMat cl = exact_inner_product(cf.weight(), cf.poly(i), cf.poly(j));
    const EMat ch = chain_gram(cf.eigenvalue(i, u0), cl);
    const QMat cont = emat_coef(ch, Unit::sqrt_pi());
    if (emat_from_q(cont, Unit::sqrt_pi()) != ch)
      throw std::logic_error("example5: chain block is not a sqrt(pi) multiple");
    const QMat pi0 = mat_eval(aop.apply_poly(cf.poly(i)), Rat(0));
    const QMat pj0 = mat_eval(aop.apply_poly(cf.poly(j)), Rat(0));
    return mat_scale(1 / scale, cont) + mat_scale(zeta, pi0 * mass * pj0.transpose());
  };
  return ExampleRun{
      .id = 5,
      .params = {{"a", a}, {"zeta", zeta}},
      .gaps = {1},
      .classical = [cf](int n) { return cf.poly(n); },
      .steps = {DarbouxStep{db, f, dd, gamma}},
      .exceptional = dd,
      .weight = w5,
      .weight_scale = scale,
      .cont_scale = 1.0 / std::sqrt(M_PI),
      .family =
          [cf, aop, gram_entry](int n) {
            if (n < 0 || n == 1) throw std::out_of_range("example5: index 1 is a gap");
            std::vector<int> idx;
            std::vector<PolyMat> ps;
            for (int k = 0; k <= n; ++k) {
              if (k == 1) continue;
              idx.push_back(k);
              ps.push_back(aop.apply_poly(cf.poly(k)));
            }
            auto out = gram_schmidt(
                ps, [&](int i, int j) { return gram_entry(idx[i], idx[j]); });
            return out.back();
          },
  };
}

AltRoute example1_alt(const Rat& a) {
  if (a * a <= 2) throw std::invalid_argument("example1_alt: need a^2 > 2");
  const HermiteFamily cf{a, 1};
  const Rat a2 = a * a;
  const std::array<Rat, 5> ua = {2 * (a2 - 1), Rat(4), Rat(0), Rat(0), -4 * (a2 - 1)};
  const DiffOp dt = cf.combo(ua);
  const RatMat front =
      rm2(mono(1, Rat(1)), Poly(a / (a2 - 2)), Poly(-a / 2), mono(1, Rat(1)));
  const QuasiRatMat seed = front * cf.weight().continuous().inverse();
  const Rat c11 = 4 * (a2 - 1) / (a2 - 2);
  const RatMat u = rm2(Poly{c11 * (-a2 - 2), Rat(0), c11 * (2 * a2 - 4)},
                       mono(1, -32 * a * (a2 - 1) * (a2 - 2)), mono(1, 8 * a),
                       Poly{8 * (a2 - 2) * (a2 - 2), Rat(0), 8 * (a2 - 2) * (2 * a2 - 4)});
  const DiffOp aop = build_annihilator(seed, u);
  Factorization f = factorize(dt, aop);
  if (!f.psi.is_zero()) throw std::logic_error("example1_alt: expected a clean factorization");
  DiffOp dd = darboux_transform(dt, f);
  QuasiRatMat raw = exceptional_weight(seed, u, dt.coef(2), cf.weight().continuous());
  return AltRoute{a,  dt, seed, u, f, dd, raw, {1}, [cf, aop](int n) {
                    if (n == 1) throw std::out_of_range("example1_alt: index 1 is a gap");
                    if (n == 0) return PolyMat::identity(2, Poly(Rat(1)));
                    return aop.apply_poly(cf.poly(n - 2));
                  }};
}

AltRoute example2_alt(const Rat& a) {
  if (a * a == 1 || 3 * a * a == 2)
    throw std::invalid_argument("example2_alt: degenerate parameter");
  const HermiteFamily cf{a, 1};
  const Rat a2 = a * a;
  const std::array<Rat, 5> ua = {(3 * a2 - 2) / (a2 - 1), Rat(4) / (a2 - 1), Rat(0), Rat(0),
                                 -4 * (3 * a2 - 2) / (a2 - 1)};
  const DiffOp dt = cf.combo(ua);
  const RatMat front = rm2(Poly{-1 / (2 * (a2 - 1)), Rat(0), Rat(1)}, mono(1, a / (a2 - 1)),
                           mono(1, -a), Poly{Rat(1) / 2, Rat(0), Rat(1)});
  const QuasiRatMat seed = front * cf.weight().continuous().inverse();
  const RatMat u = rm2(Poly{Rat(0), -3 / (2 * (a2 - 1)), Rat(0), Rat(1)},
                       Poly{-3 * a * (3 * a2 - 2) / (8 * (a2 - 1)), Rat(0),
                            -3 * a * (3 * a2 - 2) / (4 * (a2 - 1))},
                       Poly{3 * a / (2 * (3 * a2 - 2)), Rat(0), 3 * a / (3 * a2 - 2)},
                       Poly{Rat(0), Rat(3) / 2, Rat(0), Rat(1)});
  const DiffOp aop = build_annihilator(seed, u);
  Factorization f = factorize(dt, aop);
  if (!f.psi.is_zero()) throw std::logic_error("example2_alt: expected a clean factorization");
  DiffOp dd = darboux_transform(dt, f);
  QuasiRatMat raw = exceptional_weight(seed, u, dt.coef(2), cf.weight().continuous());
  return AltRoute{a,  dt, seed, u, f, dd, raw, {1, 2}, [cf, aop](int n) {
                    if (n == 1 || n == 2)
                      throw std::out_of_range("example2_alt: indices 1 and 2 are gaps");
                    if (n == 0) return PolyMat::identity(2, Poly(Rat(1)));
                    return aop.apply_poly(cf.poly(n - 3));
                  }};
}

PolyMat example5_candidate(int j, const Rat& a, const Rat& zeta, const Rat& tau) {
  const Rat a2 = a * a;
  const Rat k = zeta * (a2 - 2) * (a2 - 2) + 1;
  switch (j) {
    case 0:
      return pm2(Poly(Rat(-1)), Poly(), Poly(), Poly(Rat(-1)));
    case 1:
      return pm2(mono(1, Rat(1)), Poly(-a / 2), Poly(a / (a2 - 2)), mono(1, Rat(1)));
    case 2:
      return pm2(Poly{Rat(-1) / 2, Rat(0), Rat(1)}, mono(1, -a),
                 Poly{tau, -a},
                 Poly{(a2 * k - 1) / (2 * k), tau * (a2 - 2) / a, Rat(1)});
    case 3:
      return pm2(Poly{Rat(0), Rat(-3) / 4, Rat(0), Rat(1) / 2},
                 Poly{3 * a / 8, Rat(0), -3 * a / 4},
                 Poly{Rat(0), Rat(0), -3 * a / (2 * (a2 + 2))} + Poly(tau / 2),
                 Poly{Rat(0), tau * (a2 - 2) / (2 * a), Rat(0), Rat(1) / 2});
    default:
      throw std::invalid_argument("example5_candidate: degree must be 0..3");
  }
}

namespace {

// Sparse polynomials in the two free parameters of the degree-2 and
// degree-3 candidates.
using BiPoly = std::map<std::pair<int, int>, Rat>;
using BiMat = std::array<std::array<BiPoly, 2>, 2>;

BiPoly bi_const(const Rat& c) {
  BiPoly p;
  if (c != 0) p[{0, 0}] = c;
  return p;
}

BiPoly bi_tau(int which, const Rat& c) {
  BiPoly p;
  if (c != 0) p[which == 2 ? std::make_pair(1, 0) : std::make_pair(0, 1)] = c;
  return p;
}

BiPoly bi_add(const BiPoly& x, const BiPoly& y) {
  BiPoly r = x;
  for (const auto& [m, c] : y) {
    auto it = r.find(m);
    if (it == r.end()) {
      r[m] = c;
    } else if ((it->second += c) == 0) {
      r.erase(it);
    }
  }
  return r;
}

BiPoly bi_scale(const Rat& s, const BiPoly& x) {
  BiPoly r;
  if (s == 0) return r;
  for (const auto& [m, c] : x) r[m] = s * c;
  return r;
}

BiPoly bi_sub(const BiPoly& x, const BiPoly& y) { return bi_add(x, bi_scale(Rat(-1), y)); }

BiPoly bi_mul(const BiPoly& x, const BiPoly& y) {
  BiPoly r;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      auto m = std::make_pair(mx.first + my.first, mx.second + my.second);
      auto it = r.find(m);
      if (it == r.end()) {
        if (cx * cy != 0) r[m] = cx * cy;
      } else if ((it->second += cx * cy) == 0) {
        r.erase(it);
      }
    }
  return r;
}

BiMat bm_sub(const BiMat& x, const BiMat& y) {
  BiMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = bi_sub(x[i][j], y[i][j]);
  return r;
}

BiMat bm_scale(const Rat& s, const BiMat& x) {
  BiMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = bi_scale(s, x[i][j]);
  return r;
}

BiMat bm_mul(const BiMat& x, const BiMat& y) {
  BiMat r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = bi_add(bi_mul(x[i][0], y[0][j]), bi_mul(x[i][1], y[1][j]));
  return r;
}

bool bm_is_zero(const BiMat& x) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!x[i][j].empty()) return false;
  return true;
}

}  // namespace

Obstruction example5_obstruction(const Rat& a, const Rat& zeta) {
  if (a * a <= 2) throw std::invalid_argument("example5_obstruction: need a^2 > 2");
  const Rat a2 = a * a;
  const Rat k = zeta * (a2 - 2) * (a2 - 2) + 1;
  // t-coefficient matrices of the candidates, with tau2 and tau3 symbolic.
  BiMat p1c0{}, p1c1{}, p2c0{}, p2c1{}, p2c2{}, p3c0{}, p3c1{}, p3c2{}, p3c3{};
  p1c1[0][0] = p1c1[1][1] = bi_const(Rat(1));
  p1c0[0][1] = bi_const(-a / 2);
  p1c0[1][0] = bi_const(a / (a2 - 2));
  p2c2[0][0] = p2c2[1][1] = bi_const(Rat(1));
  p2c1[0][1] = bi_const(-a);
  p2c1[1][0] = bi_const(-a);
  p2c1[1][1] = bi_tau(2, (a2 - 2) / a);
  p2c0[0][0] = bi_const(Rat(-1) / 2);
  p2c0[1][0] = bi_tau(2, Rat(1));
  p2c0[1][1] = bi_const((a2 * k - 1) / (2 * k));
  p3c3[0][0] = p3c3[1][1] = bi_const(Rat(1) / 2);
  p3c2[0][1] = bi_const(-3 * a / 4);
  p3c2[1][0] = bi_const(-3 * a / (2 * (a2 + 2)));
  p3c1[0][0] = bi_const(Rat(-3) / 4);
  p3c1[1][1] = bi_tau(3, (a2 - 2) / (2 * a));
  p3c0[0][1] = bi_const(3 * a / 8);
  p3c0[1][0] = bi_tau(3, Rat(1) / 2);
  // Match t P2 against 2 P3 + B P2 + C P1 degree by degree; R is what the
  // constant term leaves over.
  if (!bm_is_zero(bm_sub(p2c2, bm_scale(Rat(2), p3c3))))
    throw std::logic_error("example5_obstruction: leading terms fail to match");
  const BiMat b = bm_sub(p2c1, bm_scale(Rat(2), p3c2));
  const BiMat c = bm_sub(bm_sub(p2c0, bm_scale(Rat(2), p3c1)), bm_mul(b, p2c1));
  const BiMat rsum =
      bm_sub(bm_sub(bm_scale(Rat(-2), p3c0), bm_mul(b, p2c0)), bm_mul(c, p1c0));
  // Each entry is an affine condition on (tau2, tau3); eliminate.
  struct Row {
    Rat c2, c3, c0;
    int i, j;
  };
  std::vector<Row> rows;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Row row{Rat(0), Rat(0), Rat(0), i, j};
      for (const auto& [m, coef] : rsum[i][j]) {
        if (m.first + m.second > 1)
          throw std::logic_error("example5_obstruction: nonlinear residue");
        if (m == std::make_pair(1, 0))
          row.c2 = coef;
        else if (m == std::make_pair(0, 1))
          row.c3 = coef;
        else
          row.c0 = coef;
      }
      if (row.c2 != 0 || row.c3 != 0 || row.c0 != 0) rows.push_back(row);
    }
  Obstruction res{true, Rat(0), Rat(0), ""};
  const Row* piv2 = nullptr;
  const Row* piv3 = nullptr;
  std::vector<Row> work = rows;
  for (auto& row : work) {
    if (piv2 && piv2->c2 != 0) {
      const Rat fpiv = row.c2 / piv2->c2;
      row.c2 -= fpiv * piv2->c2;
      row.c3 -= fpiv * piv2->c3;
      row.c0 -= fpiv * piv2->c0;
    }
    if (piv3 && piv3->c3 != 0) {
      const Rat fpiv = row.c3 / piv3->c3;
      row.c3 -= fpiv * piv3->c3;
      row.c0 -= fpiv * piv3->c0;
    }
    if (row.c2 != 0 && !piv2) {
      piv2 = &row;
    } else if (row.c3 != 0 && !piv3) {
      piv3 = &row;
    } else if (row.c2 == 0 && row.c3 == 0 && row.c0 != 0) {
      res.feasible = false;
      res.detail = "entry (" + std::to_string(row.i + 1) + "," + std::to_string(row.j + 1) +
                   ") leaves the constant residue " + rat_str(row.c0);
      return res;
    }
  }
  if (piv3) res.tau3 = -piv3->c0 / piv3->c3;
  if (piv2) res.tau2 = -(piv2->c0 + piv2->c3 * res.tau3) / piv2->c2;
  return res;
}

}  // namespace mxop

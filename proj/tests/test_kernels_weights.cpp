#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mxop/weight.hpp"

using namespace mxop;

namespace {

const Poly t = Poly::variable();

RatMat rm2(RatFunc a, RatFunc b, RatFunc c, RatFunc d) {
  RatMat m(2);
  m.at(0, 0) = std::move(a);
  m.at(0, 1) = std::move(b);
  m.at(1, 0) = std::move(c);
  m.at(1, 1) = std::move(d);
  return m;
}

// e^{-t^2} [[xi + a^2 t^2, a t], [a t, 1]] on the whole line
WeightSpec hermite_weight(const Rat& a, const Rat& xi) {
  RatMat d = rm2(RatFunc(Poly{xi, Rat(0), a * a}), RatFunc(a * t), RatFunc(a * t),
                 RatFunc(Rat(1)));
  return WeightSpec(Support::real_line(), Kernel::gaussian(), d);
}

}  // namespace

TEST_CASE("kernel logarithmic derivatives stay rational") {
  CHECK(Kernel::gaussian().log_derivative() == RatFunc(Poly{Rat(0), Rat(-2)}));
  CHECK(Kernel::laguerre(Rat(1, 2)).log_derivative() ==
        RatFunc(Poly{Rat(1, 2), Rat(-1)}, t));
  CHECK(Kernel::jacobi(Rat(1, 2)).log_derivative() ==
        RatFunc(Poly{Rat(0), Rat(1)}, Poly{Rat(-1), Rat(0), Rat(1)}));
  CHECK(Kernel().log_derivative().is_zero());
}

TEST_CASE("kernel algebra") {
  Kernel g = Kernel::gaussian(), l = Kernel::laguerre(Rat(2, 3));
  CHECK(g.times(g.reciprocal()).is_trivial());
  CHECK(l.times(l.reciprocal()).is_trivial());
  CHECK(g.times(l) == l.times(g));
  CHECK(l.exponent_at(Rat(0)) == Rat(2, 3));
  CHECK(l.exponent_at(Rat(1)) == 0);
  CHECK(Kernel::jacobi(Rat(-1, 2)).exponent_at(Rat(1)) == Rat(-1, 2));
  CHECK(Kernel::jacobi(Rat(-1, 2)).exponent_at(Rat(-1)) == Rat(-1, 2));
  CHECK(l.times(Kernel::power(Rat(0), Rat(1, 3), 1)).exponent_at(Rat(0)) == 1);
}

TEST_CASE("kernel evaluation respects orientation") {
  Kernel j = Kernel::jacobi(Rat(1, 2));
  CHECK(j.eval(0.0) == doctest::Approx(1.0));
  CHECK(j.eval(0.6) == doctest::Approx(std::sqrt(1 - 0.36)));
  CHECK_THROWS(j.eval(2.0));  // negative base under a fractional power
  CHECK(Kernel::gaussian().eval(1.5) == doctest::Approx(std::exp(-2.25)));
  CHECK(j.positive_on(Rat(-1), Rat(1)));
  CHECK(!j.positive_on(Rat(-2), Rat(2)));
  CHECK(Kernel::gaussian().positive_on(std::nullopt, std::nullopt));
}

TEST_CASE("quasi rational derivative folds in the kernel") {
  RatMat b = rm2(RatFunc(t), RatFunc(Rat(1)), RatFunc(Rat(0)), RatFunc(t * t));
  QuasiRatMat q(Kernel::gaussian(), b);
  QuasiRatMat dq = q.derivative();
  CHECK(dq.kernel() == Kernel::gaussian());
  // (e^{-t^2} B)' = e^{-t^2} (B' - 2t B)
  RatMat want = rm2(RatFunc(Poly{Rat(1), Rat(0), Rat(-2)}), RatFunc(Poly{Rat(0), Rat(-2)}),
                    RatFunc(Rat(0)), RatFunc(Poly{Rat(0), Rat(2), Rat(0), Rat(-2)}));
  CHECK(dq.body() == want);

  // fourth order finite differences agree at a generic point
  QuasiRatMat m(Kernel::laguerre(Rat(1, 2)),
                rm2(RatFunc(Poly(Rat(1)), Poly{Rat(1), Rat(1)}), RatFunc(t), RatFunc(Rat(2)),
                    RatFunc(t * t)));
  double t0 = 0.4, h = 5e-3;
  Mat<double> fd(2), ex = m.derivative().eval(t0);
  Mat<double> ym2 = m.eval(t0 - 2 * h), ym1 = m.eval(t0 - h), yp1 = m.eval(t0 + h),
              yp2 = m.eval(t0 + 2 * h);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      fd.at(i, j) =
          (8 * (yp1.at(i, j) - ym1.at(i, j)) - (yp2.at(i, j) - ym2.at(i, j))) / (12 * h);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(fd.at(i, j) == doctest::Approx(ex.at(i, j)).epsilon(1e-6));
}

TEST_CASE("quasi rational algebra") {
  RatMat b = rm2(RatFunc(Poly{Rat(2), Rat(1)}), RatFunc(Rat(1)), RatFunc(Rat(1)),
                 RatFunc(Poly{Rat(1), Rat(1)}));
  QuasiRatMat q(Kernel::gaussian(), b);
  QuasiRatMat qi = q.inverse();
  CHECK((qi * q) == QuasiRatMat(RatMat::identity(2, RatFunc(Rat(1)))));
  CHECK((q * qi).is_rational());

  QuasiRatMat zero(Kernel::laguerre(Rat(1)), RatMat(2));
  CHECK(zero.is_zero());
  CHECK((zero + q) == q);  // a zero side adopts the other kernel
  CHECK_THROWS(QuasiRatMat(Kernel::laguerre(Rat(1)), b) + q);

  RatMat sing(2);
  sing.at(0, 0) = RatFunc(t);
  CHECK_THROWS(QuasiRatMat(Kernel::gaussian(), sing).inverse());

  CHECK(q.transpose().body() == b.transpose());
  CHECK((q - q).is_zero());
}

TEST_CASE("vanishing tests") {
  RatMat one(1);
  one.at(0, 0) = RatFunc(Poly{Rat(1), Rat(1)});
  CHECK(QuasiRatMat(Kernel::gaussian(), one).vanishes_at_infinity(true));
  CHECK(QuasiRatMat(Kernel::gaussian(), one).vanishes_at_infinity(false));
  CHECK(!QuasiRatMat(one).vanishes_at_infinity(true));
  RatMat dec(1);
  dec.at(0, 0) = RatFunc(Poly(Rat(1)), Poly{Rat(1), Rat(0), Rat(1)});
  CHECK(QuasiRatMat(dec).vanishes_at_infinity(true));

  RatMat flat(1);
  flat.at(0, 0) = RatFunc(Rat(3));
  CHECK(QuasiRatMat(Kernel::laguerre(Rat(1, 2)), flat).vanishes_at(Rat(0)));
  RatMat pole(1);
  pole.at(0, 0) = RatFunc(Poly(Rat(1)), t);
  CHECK(!QuasiRatMat(Kernel::laguerre(Rat(1, 2)), pole).vanishes_at(Rat(0)));
  CHECK(QuasiRatMat(Kernel::laguerre(Rat(3, 2)), pole).vanishes_at(Rat(0)));
}

TEST_CASE("support sampling") {
  for (const Support& s : {Support::real_line(), Support::half_line(),
                           Support::interval(Rat(-1), Rat(1))}) {
    auto pts = s.interior_samples(6);
    REQUIRE(pts.size() == 6);
    for (size_t i = 0; i < pts.size(); ++i) {
      CHECK(s.contains_interior(pts[i]));
      for (size_t j = i + 1; j < pts.size(); ++j) CHECK(pts[i] != pts[j]);
    }
  }
  CHECK(Support::half_line().contains_interior(Rat(1, 10)));
  CHECK(!Support::half_line().contains_interior(Rat(0)));
  CHECK(!Support::interval(Rat(-1), Rat(1)).contains_interior(Rat(1)));
}

TEST_CASE("weight spec plumbing") {
  WeightSpec w = hermite_weight(Rat(2), Rat(1));
  CHECK(w.size() == 2);
  CHECK(w.has_continuous());
  CHECK(WeightSpec::from_quasi(Support::real_line(), w.continuous()).density() == w.density());
  CHECK(w.masses().empty());

  QMat m(2);
  m.at(1, 1) = 1;
  WeightSpec wm = w.with_mass(PointMass{Rat(0), Rat(3), m});
  REQUIRE(wm.masses().size() == 1);
  CHECK(wm.masses()[0].zeta == 3);
  CHECK(wm.density() == w.density());

  WeightSpec ws = w.scaled(Rat(1, 2));
  CHECK(ws.density() == mat_scale(Rat(1, 2), w.density()));
}

TEST_CASE("kernel moments in closed form") {
  Support rl = Support::real_line(), hl = Support::half_line();
  Support iv = Support::interval(Rat(-1), Rat(1));
  Kernel g = Kernel::gaussian();
  CHECK(kernel_moment(g, rl, 0) == ExactValue::sqrt_pi());
  CHECK(kernel_moment(g, rl, 1).is_zero());
  CHECK(kernel_moment(g, rl, 2) == ExactValue::sqrt_pi(Rat(1, 2)));
  CHECK(kernel_moment(g, rl, 4) == ExactValue::sqrt_pi(Rat(3, 4)));
  CHECK(kernel_moment(g, rl, 6) == ExactValue::sqrt_pi(Rat(15, 8)));
  CHECK(kernel_moment(g, rl, 7).is_zero());

  CHECK(kernel_moment(Kernel::laguerre(Rat(0)), hl, 5) == ExactValue(Rat(120)));
  CHECK(kernel_moment(Kernel::laguerre(Rat(1, 2)), hl, 0) == ExactValue::sqrt_pi(Rat(1, 2)));

  CHECK(kernel_moment(Kernel::jacobi(Rat(1, 2)), iv, 0) == ExactValue::beta_half(Rat(3, 2)));
  CHECK(kernel_moment(Kernel::jacobi(Rat(1, 2)), iv, 1).is_zero());
  CHECK(kernel_moment(Kernel::jacobi(Rat(2)), iv, 0) == ExactValue(Rat(16, 15)));

  CHECK(kernel_moment(Kernel(), Support::interval(Rat(0), Rat(1)), 3) == ExactValue(Rat(1, 4)));
  CHECK_THROWS(kernel_moment(Kernel::gaussian(), hl, 0));
}

TEST_CASE("moment recurrences hold far out") {
  Support rl = Support::real_line(), hl = Support::half_line();
  Support iv = Support::interval(Rat(-1), Rat(1));
  Kernel g = Kernel::gaussian();
  for (int k = 0; k <= 40; ++k) {
    CHECK(kernel_moment(g, rl, k + 2) ==
          ExactValue(Rat(k + 1, 2)) * kernel_moment(g, rl, k));
  }
  for (const Rat& alpha : {Rat(0), Rat(1, 2)}) {
    Kernel l = Kernel::laguerre(alpha);
    for (int k = 0; k <= 40; ++k) {
      CHECK(kernel_moment(l, hl, k + 1) ==
            ExactValue(Rat(k + 1) + alpha) * kernel_moment(l, hl, k));
    }
  }
  for (const Rat& mu : {Rat(1, 2), Rat(2)}) {
    Kernel j = Kernel::jacobi(mu);
    for (int k = 0; k <= 40; ++k) {
      CHECK(ExactValue(Rat(k) + 2 * mu + 3) * kernel_moment(j, iv, k + 2) ==
            ExactValue(Rat(k + 1)) * kernel_moment(j, iv, k));
    }
  }
}

TEST_CASE("exact inner products reduce to moments") {
  WeightSpec w = hermite_weight(Rat(2), Rat(1));
  PolyMat id = PolyMat::identity(2, Poly(Rat(1)));
  EMat g0 = exact_inner_product(w, id, id);
  // [[m0 + 4 m2, 2 m1], [2 m1, m0]] over the gaussian moments
  CHECK(g0.at(0, 0) == ExactValue::sqrt_pi(Rat(3)));
  CHECK(g0.at(0, 1).is_zero());
  CHECK(g0.at(1, 0).is_zero());
  CHECK(g0.at(1, 1) == ExactValue::sqrt_pi());

  QMat m(2);
  m.at(0, 0) = 1;
  WeightSpec wm = w.with_mass(PointMass{Rat(1), Rat(2), m});
  PolyMat p(2, {t, Poly(Rat(0)), Poly(Rat(0)), t});
  EMat g1 = exact_inner_product(wm, p, p);
  // the mass adds zeta P(1) M P(1)^T on top of the continuous block
  EMat cont = exact_inner_product(w, p, p);
  CHECK(g1.at(0, 0) == cont.at(0, 0) + ExactValue(Rat(2)));
  CHECK(g1.at(1, 1) == cont.at(1, 1));
}

TEST_CASE("decay and positivity checks") {
  WeightSpec good = hermite_weight(Rat(2), Rat(1));
  CHECK(decay_check(good));
  CHECK(!positivity_check(good).has_value());

  WeightSpec bad = hermite_weight(Rat(2), Rat(-3));
  auto wit = positivity_check(bad);
  REQUIRE(wit.has_value());
  CHECK(wit->find("minor") != std::string::npos);

  RatMat one(1);
  one.at(0, 0) = RatFunc(Rat(1));
  std::string why;
  CHECK(!decay_check(WeightSpec(Support::real_line(), Kernel(), one), &why));
  CHECK(!why.empty());

  QMat neg(2);
  neg.at(0, 0) = Rat(-1);
  auto witm = positivity_check(good.with_mass(PointMass{Rat(0), Rat(1), neg}));
  CHECK(witm.has_value());
}

TEST_CASE("reducibility probe") {
  WeightSpec w = hermite_weight(Rat(2), Rat(1));
  auto pts = w.support().interior_samples(4);
  ReducibilityReport rep = reducibility_probe(w, Rat(0), pts);
  CHECK(!rep.commuting);  // noncommuting samples certify irreducibility
  CHECK(!rep.witness.empty());

  RatMat d(2);
  d.at(0, 0) = RatFunc(Poly{Rat(1), Rat(0), Rat(1)});
  d.at(1, 1) = RatFunc(Rat(1));
  WeightSpec wd(Support::real_line(), Kernel::gaussian(), d);
  CHECK(reducibility_probe(wd, Rat(0), pts).commuting);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mxop/matrix.hpp"

using namespace mxop;

namespace {

std::mt19937 rng(777101);

QMat rand_qmat(int n) {
  std::uniform_int_distribution<int> d(-6, 6);
  QMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(d(rng));
  return m;
}

PolyMat rand_polymat(int n, int deg) {
  std::uniform_int_distribution<int> d(-4, 4);
  PolyMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> c(deg + 1);
      for (auto& x : c) x = Rat(d(rng));
      m.at(i, j) = Poly(std::move(c));
    }
  return m;
}

}  // namespace

TEST_CASE("construction and equality") {
  QMat m(2, {Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(m.size() == 2);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 0) == 3);
  CHECK(QMat::identity(3, Rat(1)).at(2, 2) == 1);
  CHECK(QMat::zero(2).is_zero());
  CHECK(!m.is_zero());
  CHECK_THROWS_AS(QMat(0), std::invalid_argument);
  CHECK_THROWS_AS(QMat(2, {Rat(1)}), std::invalid_argument);
  CHECK(m.transpose().at(0, 1) == 3);
  CHECK(m.transpose().transpose() == m);
}

TEST_CASE("ring operations") {
  for (int i = 0; i < 20; ++i) {
    QMat a = rand_qmat(3), b = rand_qmat(3), c = rand_qmat(3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b).transpose() == a.transpose() + b.transpose());
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(Rat(3) * (a + b) == Rat(3) * a + Rat(3) * b);
    CHECK(a - a == QMat::zero(3));
  }
}

TEST_CASE("determinants by cofactor and by elimination") {
  CHECK(mat_det(QMat(2, {Rat(1), Rat(2), Rat(3), Rat(4)})) == -2);
  CHECK(mat_det(QMat(3, {Rat(2), Rat(0), Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(3),
                         Rat(1)})) == Rat(5));

  // Vandermonde at 0, 1, 2, 3 exercises the 4x4 elimination path.
  QMat v(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v.at(i, j) = rat_pow(Rat(i), j);
  CHECK(mat_det(v) == 12);

  // Permutation matrix with zero pivots forces the row swap branch.
  QMat p(4);
  p.at(0, 1) = p.at(1, 0) = p.at(2, 3) = p.at(3, 2) = 1;
  CHECK(mat_det(p) == 1);

  QMat s = rand_qmat(4);
  for (int j = 0; j < 4; ++j) s.at(3, j) = s.at(0, j) + s.at(1, j);
  CHECK(mat_det(s) == 0);

  RatMat r(2);
  r.at(0, 0) = RatFunc(Poly{Rat(0), Rat(1)});
  r.at(0, 1) = RatFunc(Poly(Rat(1)), Poly{Rat(1), Rat(1)});
  r.at(1, 0) = RatFunc(Poly(Rat(2)));
  r.at(1, 1) = RatFunc(Poly{Rat(0), Rat(1)});
  RatFunc want = RatFunc(Poly{Rat(0), Rat(0), Rat(1)}) -
                 RatFunc(Poly(Rat(2)), Poly{Rat(1), Rat(1)});
  CHECK(mat_det(r) == want);
}

TEST_CASE("inverse round trips on the supported sizes") {
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 10; ++i) {
      QMat a = rand_qmat(n);
      if (mat_det(a) == 0) continue;
      CHECK(a * mat_inverse(a) == QMat::identity(n, Rat(1)));
      CHECK(mat_inverse(a) * a == QMat::identity(n, Rat(1)));
    }
  }
  QMat sing(2, {Rat(1), Rat(2), Rat(2), Rat(4)});
  CHECK_THROWS_AS(mat_inverse(sing), std::domain_error);
  CHECK_THROWS_AS(mat_inverse(rand_qmat(4)), std::invalid_argument);

  // rational-function entries invert inside the same field
  RatMat m(2);
  m.at(0, 0) = RatFunc(Poly{Rat(0), Rat(1)});
  m.at(0, 1) = RatFunc(Rat(1));
  m.at(1, 0) = RatFunc(Poly(Rat(1)), Poly{Rat(1), Rat(0), Rat(1)});
  m.at(1, 1) = RatFunc(Poly{Rat(2), Rat(1)});
  RatMat id = RatMat::identity(2, RatFunc(Rat(1)));
  CHECK(m * mat_inverse(m) == id);
  CHECK(mat_inverse(m) * m == id);
}

TEST_CASE("derivatives obey the product rule") {
  for (int i = 0; i < 15; ++i) {
    PolyMat a = rand_polymat(2, 3), b = rand_polymat(2, 3);
    CHECK(mat_derivative(a * b) == mat_derivative(a) * b + a * mat_derivative(b));
  }
  RatMat f(2);
  f.at(0, 0) = RatFunc(Poly(Rat(1)), Poly{Rat(1), Rat(1)});
  f.at(0, 1) = RatFunc(Poly{Rat(0), Rat(1)});
  f.at(1, 0) = RatFunc(Rat(0));
  f.at(1, 1) = RatFunc(Poly{Rat(0), Rat(2)}, Poly{Rat(-1), Rat(1)});
  RatMat g = f * f;
  CHECK(mat_derivative(g) == mat_derivative(f) * f + f * mat_derivative(f));
}

TEST_CASE("evaluation commutes with multiplication") {
  for (int i = 0; i < 10; ++i) {
    PolyMat a = rand_polymat(2, 3), b = rand_polymat(2, 3);
    Rat t(3, 2);
    CHECK(mat_eval(a * b, t) == mat_eval(a, t) * mat_eval(b, t));
  }
}

TEST_CASE("conversions between matrix flavors") {
  PolyMat p(2, {Poly{Rat(1), Rat(2)}, Poly(Rat(0)), Poly(Rat(3)), Poly{Rat(0), Rat(0), Rat(1)}});
  CHECK(to_polymat(to_ratmat(p)) == p);
  CHECK(is_polynomial(to_ratmat(p)));

  RatMat r = to_ratmat(p);
  r.at(0, 1) = RatFunc(Poly(Rat(1)), Poly{Rat(0), Rat(1)});
  CHECK(!is_polynomial(r));
  CHECK_THROWS(to_polymat(r));

  PolyMat c(2, {Poly(Rat(5)), Poly(Rat(0)), Poly(Rat(-1)), Poly(Rat(2))});
  CHECK(from_qmat(to_qmat(c)) == c);
  CHECK_THROWS(to_qmat(p));

  CHECK(mat_degree(p) == 2);
  CHECK(mat_degree(PolyMat(2)) == -1);
  CHECK(mat_coef(p, 1) == QMat(2, {Rat(2), Rat(0), Rat(0), Rat(0)}));
  CHECK(mat_coef(p, 0) == QMat(2, {Rat(1), Rat(0), Rat(3), Rat(0)}));
  CHECK(mat_scale(Rat(2), p).at(0, 0) == Poly{Rat(2), Rat(4)});
}

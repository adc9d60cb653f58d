// Square matrices over an exact coefficient type. The engine instantiates
// Mat<Rat>, Mat<Poly>, Mat<RatFunc> and Mat<double>; determinants and
// inverses are provided for the exact field types.
#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mxop/ratfunc.hpp"

namespace mxop {

inline std::string entry_to_string(const Rat& x) { return rat_str(x); }
inline std::string entry_to_string(const Poly& p) { return p.str(); }
inline std::string entry_to_string(const RatFunc& f) { return f.str(); }
inline std::string entry_to_string(double x) { return std::to_string(x); }

template <class T>
class Mat {
 public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), e_(static_cast<size_t>(n) * n, T()) {
    if (n <= 0) throw std::invalid_argument("Mat: size must be positive");
  }
  Mat(int n, std::initializer_list<T> entries) : Mat(n) {
    if (static_cast<int>(entries.size()) != n * n)
      throw std::invalid_argument("Mat: wrong number of entries");
    std::copy(entries.begin(), entries.end(), e_.begin());
  }

  static Mat identity(int n, const T& one = T(1)) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }
  static Mat zero(int n) { return Mat(n); }

  int size() const { return n_; }
  T& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const T& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == T())) return false;
    return true;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    a.check_same(b);
    for (size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    a.check_same(b);
    for (size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    a.check_same(b);
    Mat r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, Mat m) {
    for (auto& x : m.e_) x = s * x;
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const {
    Mat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  template <class U>
  Mat<U> map(const std::function<U(const T&)>& f) const {
    Mat<U> r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(i, j) = f(at(i, j));
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
      os << (i ? ", [" : "[");
      for (int j = 0; j < n_; ++j) {
        if (j) os << ", ";
        os << entry_to_string(at(i, j));
      }
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void check_same(const Mat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Mat: size mismatch");
  }

  int n_;
  std::vector<T> e_;
};

using QMat = Mat<Rat>;
using PolyMat = Mat<Poly>;
using RatMat = Mat<RatFunc>;

// Determinant by cofactor expansion for n <= 3 and fraction-free elimination
// beyond; T must be a field type (Rat or RatFunc).
template <class T>
T mat_det(const Mat<T>& m) {
  const int n = m.size();
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (n == 3)
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  // Bareiss: every division below is exact.
  Mat<T> a = m;
  T sign(1), prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == T()) {
      int p = k + 1;
      while (p < n && a.at(p, k) == T()) ++p;
      if (p == n) return T();
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

// Inverse via the adjugate; supported for n <= 3 which covers every block
// size this engine produces. Throws on singular input.
template <class T>
Mat<T> mat_inverse(const Mat<T>& m) {
  const int n = m.size();
  const T d = mat_det(m);
  if (d == T()) throw std::domain_error("mat_inverse: singular matrix");
  Mat<T> adj(n);
  if (n == 1) {
    adj.at(0, 0) = T(1);
  } else if (n == 2) {
    adj.at(0, 0) = m.at(1, 1);
    adj.at(0, 1) = -m.at(0, 1);
    adj.at(1, 0) = -m.at(1, 0);
    adj.at(1, 1) = m.at(0, 0);
  } else if (n == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        adj.at(i, j) = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
      }
  } else {
    throw std::invalid_argument("mat_inverse: only sizes up to 3 are supported");
  }
  const T inv = T(1) / d;
  return inv * adj;
}

inline RatMat to_ratmat(const PolyMat& m) {
  return m.map<RatFunc>([](const Poly& p) { return RatFunc(p); });
}

// Throws unless every entry is a polynomial.
inline PolyMat to_polymat(const RatMat& m) {
  return m.map<Poly>([](const RatFunc& f) { return f.to_poly(); });
}

inline bool is_polynomial(const RatMat& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!m.at(i, j).is_polynomial()) return false;
  return true;
}

inline PolyMat mat_derivative(const PolyMat& m) {
  return m.map<Poly>([](const Poly& p) { return p.derivative(); });
}

inline RatMat mat_derivative(const RatMat& m) {
  return m.map<RatFunc>([](const RatFunc& f) { return f.derivative(); });
}

inline QMat mat_eval(const PolyMat& m, const Rat& t) {
  return m.map<Rat>([&](const Poly& p) { return p.eval(t); });
}

inline QMat mat_eval(const RatMat& m, const Rat& t) {
  return m.map<Rat>([&](const RatFunc& f) { return f.eval(t); });
}

inline Mat<double> mat_eval(const RatMat& m, double t) {
  return m.map<double>([&](const RatFunc& f) { return f.eval(t); });
}

inline QMat to_qmat(const PolyMat& m) {
  return m.map<Rat>([](const Poly& p) {
    if (!p.is_constant()) throw std::domain_error("to_qmat: non-constant entry");
    return p.coef(0);
  });
}

inline PolyMat from_qmat(const QMat& m) {
  return m.map<Poly>([](const Rat& x) { return Poly(x); });
}

// Coefficient of t^k, entrywise.
inline QMat mat_coef(const PolyMat& m, int k) {
  return m.map<Rat>([&](const Poly& p) { return p.coef(k); });
}

inline int mat_degree(const PolyMat& m) {
  int d = -1;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) d = std::max(d, m.at(i, j).degree());
  return d;
}

inline PolyMat mat_scale(const Rat& s, const PolyMat& m) {
  return m.map<Poly>([&](const Poly& p) { return s * p; });
}

inline RatMat mat_scale(const Rat& s, const RatMat& m) {
  return m.map<RatFunc>([&](const RatFunc& f) { return RatFunc(Poly(s)) * f; });
}

inline QMat mat_scale(const Rat& s, const QMat& m) {
  return m.map<Rat>([&](const Rat& x) { return s * x; });
}

}  // namespace mxop

#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace rvac {

// Dense row-major matrix. Everything in this project is small (order <= 42),
// so no blocking or views; the kernels layer handles the inner loops.
template <typename T>
class MatT {
 public:
  MatT() = default;
  MatT(int rows, int cols, T fill = T{})
      : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

  static MatT identity(int n) {
    MatT m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return a_[static_cast<std::size_t>(i) * c_ + j];
  }
  T operator()(int i, int j) const {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return a_[static_cast<std::size_t>(i) * c_ + j];
  }

  T* row(int i) { return a_.data() + static_cast<std::size_t>(i) * c_; }
  const T* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * c_; }
  T* data() { return a_.data(); }
  const T* data() const { return a_.data(); }

  bool operator==(const MatT& o) const = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using Mat = MatT<double>;
using CMat = MatT<std::complex<double>>;
using Vec = std::vector<double>;
using CVec = std::vector<std::complex<double>>;
using V3 = std::array<double, 3>;

// Writes both (i,j) and (j,i) so assembled matrices are symmetric by
// construction, bit for bit.
template <typename T>
inline void set_sym(MatT<T>& m, int i, int j, T v) {
  m(i, j) = v;
  m(j, i) = v;
}

template <typename T>
inline bool exactly_symmetric(const MatT<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <typename T>
inline MatT<T> transpose(const MatT<T>& m) {
  MatT<T> t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

template <typename T>
inline MatT<T> operator*(const MatT<T>& a, const MatT<T>& b) {
  assert(a.cols() == b.rows());
  MatT<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
inline MatT<T> operator+(const MatT<T>& a, const MatT<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  MatT<T> c = a;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <typename T>
inline MatT<T> operator-(const MatT<T>& a, const MatT<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  MatT<T> c = a;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <typename T>
inline MatT<T> operator*(T s, const MatT<T>& a) {
  MatT<T> c = a;
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) c(i, j) *= s;
  return c;
}

template <typename T>
inline std::vector<T> operator*(const MatT<T>& a, const std::vector<T>& x) {
  assert(static_cast<int>(x.size()) == a.cols());
  std::vector<T> y(a.rows(), T{});
  for (int i = 0; i < a.rows(); ++i) {
    T acc{};
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

inline double inf_norm(const Mat& m) {
  double best = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

inline double fro_norm(const Mat& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

inline double inf_norm(const Vec& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

template <typename T>
inline T dotv(const std::vector<T>& a, const std::vector<T>& b) {
  assert(a.size() == b.size());
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// (Mx, x) for symmetric M.
inline double quad_form(const Mat& m, const Vec& x) { return dotv(m * x, x); }

} // namespace rvac

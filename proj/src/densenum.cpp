#include "rvac/densenum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rvac/kernels.hpp"

namespace rvac::densenum {

CholResult cholesky_pd(const Mat& m) {
  const int n = m.rows();
  CholResult res;
  res.L = Mat(n, n);
  double trace = 0.0;
  for (int i = 0; i < n; ++i) trace += m(i, i);
  const double pivot_tol = 1e-12 * std::abs(trace) / std::max(n, 1);
  double min_pivot = std::numeric_limits<double>::infinity();
  Mat& L = res.L;
  for (int j = 0; j < n; ++j) {
    double pivot = m(j, j) - kern::nrm2sq(L.row(j), j);
    min_pivot = std::min(min_pivot, pivot);
    if (pivot <= pivot_tol) {
      res.pd = false;
      res.min_pivot = pivot;
      return res;
    }
    const double ljj = std::sqrt(pivot);
    L(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      L(i, j) = (m(i, j) - kern::dot(L.row(i), L.row(j), j)) / ljj;
    }
  }
  res.pd = true;
  res.min_pivot = (n == 0) ? 0.0 : min_pivot;
  return res;
}

EigenResult sym_eigen(const Mat& m, int max_sweeps) {
  const int n = m.rows();
  Mat a = m;
  Mat vt = Mat::identity(n); // rows of vt are eigenvector candidates
  const double scale = fro_norm(m);
  const double tol = 1e-12 * (scale > 0 ? scale : 1.0);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_norm() <= tol) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= tol / (n * n)) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (app - aqq) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- G^T A G with G the (p,q) rotation: rows then columns.
        kern::rot(a.row(p), a.row(q), c, s, n);
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip + s * aiq;
          a(i, q) = -s * aip + c * aiq;
        }
        kern::rot(vt.row(p), vt.row(q), c, s, n);
      }
    }
  }
  if (off_norm() > tol) {
    throw NoConvergence("jacobi eigensolve did not reach tolerance in " +
                        std::to_string(max_sweeps) + " sweeps");
  }

  EigenResult res;
  res.sweeps = sweep;
  res.eigenvalues.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return diag[x] < diag[y]; });
  res.vectors = Mat(n, n);
  for (int k = 0; k < n; ++k) {
    res.eigenvalues[k] = diag[order[k]];
    for (int i = 0; i < n; ++i) res.vectors(i, k) = vt(order[k], i);
  }
  return res;
}

EigenResult sym_eigen_general(const Mat& a, const Mat& b_pd) {
  const CholResult ch = cholesky_pd(b_pd);
  if (!ch.pd) throw SingularMatrix("right-hand matrix not positive definite");
  const int n = a.rows();
  // C = L^-1 A L^-T by two triangular solves.
  Mat c = a;
  // Solve L X = A (forward, column-wise on rows of A).
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      double s = c(i, col);
      for (int k = 0; k < i; ++k) s -= ch.L(i, k) * c(k, col);
      c(i, col) = s / ch.L(i, i);
    }
  }
  // Solve C L^T = X, i.e. for each row solve L y = row^T.
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j < n; ++j) {
      double s = c(row, j);
      for (int k = 0; k < j; ++k) s -= ch.L(j, k) * c(row, k);
      c(row, j) = s / ch.L(j, j);
    }
  }
  EigenResult res = sym_eigen(c);
  // Map vectors back: x = L^-T y.
  Mat x = res.vectors;
  for (int col = 0; col < n; ++col) {
    for (int i = n - 1; i >= 0; --i) {
      double s = x(i, col);
      for (int k = i + 1; k < n; ++k) s -= ch.L(k, i) * x(k, col);
      x(i, col) = s / ch.L(i, i);
    }
  }
  res.vectors = x;
  return res;
}

namespace {

template <typename T>
struct Lu {
  MatT<T> lu;
  std::vector<int> perm;
  int sign = 1;
};

template <typename T>
Lu<T> lu_factor(MatT<T> m) {
  const int n = m.rows();
  Lu<T> f{std::move(m), std::vector<int>(n), 1};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(f.lu(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::abs(f.lu(i, k));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == 0.0) throw SingularMatrix("zero pivot in column " + std::to_string(k));
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(piv, j), f.lu(k, j));
      std::swap(f.perm[piv], f.perm[k]);
      f.sign = -f.sign;
    }
    const T pivot = f.lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const T l = f.lu(i, k) / pivot;
      f.lu(i, k) = l;
      if (l != T{}) {
        for (int j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
      }
    }
  }
  return f;
}

template <typename T>
std::vector<T> lu_apply(const Lu<T>& f, const std::vector<T>& b) {
  const int n = f.lu.rows();
  std::vector<T> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (int i = 1; i < n; ++i) {
    T s = x[i];
    for (int k = 0; k < i; ++k) s -= f.lu(i, k) * x[k];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    T s = x[i];
    for (int k = i + 1; k < n; ++k) s -= f.lu(i, k) * x[k];
    x[i] = s / f.lu(i, i);
  }
  return x;
}

} // namespace

Vec lu_solve(const Mat& m, const Vec& b) {
  return lu_apply(lu_factor(m), b);
}

Mat lu_solve(const Mat& m, const Mat& b) {
  const auto f = lu_factor(m);
  Mat x(b.rows(), b.cols());
  Vec col(b.rows());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < b.rows(); ++i) col[i] = b(i, j);
    const Vec sol = lu_apply(f, col);
    for (int i = 0; i < b.rows(); ++i) x(i, j) = sol[i];
  }
  return x;
}

Mat lu_inverse(const Mat& m) { return lu_solve(m, Mat::identity(m.rows())); }

double lu_det(const Mat& m) {
  try {
    const auto f = lu_factor(m);
    double det = f.sign;
    for (int i = 0; i < m.rows(); ++i) det *= f.lu(i, i);
    return det;
  } catch (const SingularMatrix&) {
    return 0.0;
  }
}

std::complex<double> lu_det(const CMat& m) {
  try {
    const auto f = lu_factor(m);
    std::complex<double> det{static_cast<double>(f.sign), 0.0};
    for (int i = 0; i < m.rows(); ++i) det *= f.lu(i, i);
    return det;
  } catch (const SingularMatrix&) {
    return {0.0, 0.0};
  }
}

CVec lu_solve(const CMat& m, const CVec& b) {
  return lu_apply(lu_factor(m), b);
}

RootResult real_bisect(const std::function<double(double)>& f, double lo,
                       double hi, const RootOptions& opt) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {{lo, 0.0}, 0.0, 0, {}, {}};
  if (fhi == 0.0) return {{hi, 0.0}, 0.0, 0, {}, {}};
  if ((flo > 0) == (fhi > 0)) {
    throw NoBracket("no sign change on [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  int it = 0;
  while (hi - lo > opt.width_tol && it < 2000) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    ++it;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm > 0) == (fhi > 0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  RootResult res;
  const double root = 0.5 * (lo + hi);
  res.root = {root, 0.0};
  res.residual = std::abs(f(root));
  res.iterations = it;
  return res;
}

RootResult complex_newton(const CFn& f, std::complex<double> seed,
                          const RootOptions& opt, const CFn& df) {
  std::complex<double> z = seed;
  const double ftol = opt.f_tol * opt.f_scale;
  for (int it = 0; it < opt.max_iter; ++it) {
    const std::complex<double> fz = f(z);
    if (std::abs(fz) <= ftol) {
      RootResult res;
      res.root = z;
      res.residual = std::abs(fz);
      res.iterations = it;
      return res;
    }
    std::complex<double> d;
    if (df) {
      d = df(z);
    } else {
      const double h = 1e-7 * (1.0 + std::abs(z));
      d = (f(z + h) - f(z - h)) / (2.0 * h);
    }
    if (std::abs(d) == 0.0) {
      throw NewtonDiverged("zero derivative at iterate");
    }
    const std::complex<double> step = fz / d;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NewtonDiverged("iterate left the finite plane");
    }
  }
  throw NewtonDiverged("no convergence in " + std::to_string(opt.max_iter) +
                       " iterations");
}

std::complex<double> principal_sqrt(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() < 0.0) {
    throw BranchCut("radicand on the negative real axis");
  }
  return std::sqrt(z);
}

} // namespace rvac::densenum

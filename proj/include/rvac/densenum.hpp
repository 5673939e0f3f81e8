#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>

#include "rvac/mat.hpp"

namespace rvac::densenum {

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& w) : std::runtime_error(w) {}
};
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& w) : std::runtime_error(w) {}
};
struct NoBracket : std::runtime_error {
  explicit NoBracket(const std::string& w) : std::runtime_error(w) {}
};
struct NewtonDiverged : std::runtime_error {
  explicit NewtonDiverged(const std::string& w) : std::runtime_error(w) {}
};
struct BranchCut : std::runtime_error {
  explicit BranchCut(const std::string& w) : std::runtime_error(w) {}
};

// Cholesky factorization used as the positive-definiteness certificate.
// pd is false when any pivot falls at or below pivot_tol = 1e-12 * trace/dim;
// in that case L holds the partial factor and min_pivot the offending pivot.
struct CholResult {
  bool pd = false;
  Mat L;              // lower triangular, M = L * L^T when pd
  double min_pivot = 0.0;
};
CholResult cholesky_pd(const Mat& m);

// Cyclic Jacobi for symmetric matrices. Eigenvalues ascending; vectors(:,k)
// is the unit eigenvector for eigenvalues[k]. Converges to relative
// off-diagonal norm 1e-12 within max_sweeps or throws NoConvergence.
struct EigenResult {
  std::vector<double> eigenvalues;
  Mat vectors;
  int sweeps = 0;
};
EigenResult sym_eigen(const Mat& m, int max_sweeps = 50);

// Generalized symmetric problem A x = lambda B x with B positive definite.
EigenResult sym_eigen_general(const Mat& a, const Mat& b_pd);

// Partial-pivot LU solve; throws SingularMatrix on a zero pivot column.
Vec lu_solve(const Mat& m, const Vec& b);
Mat lu_solve(const Mat& m, const Mat& b);
Mat lu_inverse(const Mat& m);
double lu_det(const Mat& m);
std::complex<double> lu_det(const CMat& m);
CVec lu_solve(const CMat& m, const CVec& b);

struct RootOptions {
  double f_tol = 1e-10;        // |f(root)| <= f_tol * f_scale
  double f_scale = 1.0;
  double width_tol = 1e-12;    // bisection interval width
  int max_iter = 200;
};

struct RootResult {
  std::complex<double> root;
  double residual = 0.0;       // |f(root)|
  int iterations = 0;
  // Branch certificates for dispersion roots; unset for plain scalar roots.
  std::optional<bool> re_xi_p_negative;
  std::optional<bool> re_xi_v_negative;
};

RootResult real_bisect(const std::function<double(double)>& f, double lo,
                       double hi, const RootOptions& opt = {});

using CFn = std::function<std::complex<double>(std::complex<double>)>;
RootResult complex_newton(const CFn& f, std::complex<double> seed,
                          const RootOptions& opt = {},
                          const CFn& df = nullptr);

// Principal square root: Re >= 0, cut on the negative real axis. Throws
// BranchCut when the radicand sits exactly on the cut, where the sign of the
// imaginary part (and hence the decaying branch) is undetermined.
std::complex<double> principal_sqrt(std::complex<double> z);

} // namespace rvac::densenum

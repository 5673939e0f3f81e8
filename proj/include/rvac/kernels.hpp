#pragma once

#include <cstddef>

// Low-level dense kernels used by the factorizations and eigensolver.
// A scalar reference implementation always exists; on x86 an AVX2 variant
// is selected at runtime when the CPU supports it. Both variants are
// exported so equivalence tests can call them directly.

namespace rvac::kern {

enum class Backend { Auto, Scalar, Avx2, Neon };

// Backend actually used by the dispatching entry points below.
Backend active_backend();
const char* backend_name();
// Force a backend (Backend::Auto restores CPU detection). Returns the
// backend now active. Requests for an unavailable backend fall back to
// Scalar.
Backend set_backend(Backend b);

double dot(const double* x, const double* y, std::size_t n);
double nrm2sq(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);   // y += a*x
void scal(double a, double* x, std::size_t n);                    // x *= a
// Plane rotation: (x, y) <- (c*x + s*y, -s*x + c*y), applied element-wise.
void rot(double* x, double* y, double c, double s, std::size_t n);
// y = A*x, A row-major (rows x cols), y of length rows.
void gemv(const double* a, std::size_t rows, std::size_t cols,
          const double* x, double* y);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double nrm2sq(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols,
          const double* x, double* y);
} // namespace scalar

#if defined(RVAC_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double nrm2sq(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols,
          const double* x, double* y);
} // namespace avx2
#endif

} // namespace rvac::kern

#include "rvac/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace rvac::kern {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double nrm2sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot(double* x, double* y, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -s * xi + c * yi;
  }
}

void gemv(const double* a, std::size_t rows, std::size_t cols,
          const double* x, double* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

} // namespace scalar

namespace {

Backend detect() {
  if (const char* env = std::getenv("RVAC_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
#if defined(RVAC_HAVE_AVX2)
    if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2"))
      return Backend::Avx2;
#endif
  }
#if defined(RVAC_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
  return Backend::Scalar;
}

std::atomic<Backend> g_active{detect()};

} // namespace

Backend active_backend() { return g_active.load(std::memory_order_relaxed); }

const char* backend_name() {
  switch (active_backend()) {
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    default: return "scalar";
  }
}

Backend set_backend(Backend b) {
  Backend chosen = Backend::Scalar;
  if (b == Backend::Auto) {
    chosen = detect();
  } else if (b == Backend::Scalar) {
    chosen = Backend::Scalar;
  }
#if defined(RVAC_HAVE_AVX2)
  else if (b == Backend::Avx2 && __builtin_cpu_supports("avx2")) {
    chosen = Backend::Avx2;
  }
#endif
  g_active.store(chosen, std::memory_order_relaxed);
  return chosen;
}

#if defined(RVAC_HAVE_AVX2)
#define RVAC_DISPATCH(fn, ...)                          \
  do {                                                  \
    if (active_backend() == Backend::Avx2)              \
      return avx2::fn(__VA_ARGS__);                     \
    return scalar::fn(__VA_ARGS__);                     \
  } while (0)
#else
#define RVAC_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

double dot(const double* x, const double* y, std::size_t n) {
  RVAC_DISPATCH(dot, x, y, n);
}
double nrm2sq(const double* x, std::size_t n) { RVAC_DISPATCH(nrm2sq, x, n); }
void axpy(double a, const double* x, double* y, std::size_t n) {
  RVAC_DISPATCH(axpy, a, x, y, n);
}
void scal(double a, double* x, std::size_t n) { RVAC_DISPATCH(scal, a, x, n); }
void rot(double* x, double* y, double c, double s, std::size_t n) {
  RVAC_DISPATCH(rot, x, y, c, s, n);
}
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x,
          double* y) {
  RVAC_DISPATCH(gemv, a, rows, cols, x, y);
}

#undef RVAC_DISPATCH

} // namespace rvac::kern

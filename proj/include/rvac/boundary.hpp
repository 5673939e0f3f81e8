#pragma once

#include <array>
#include <stdexcept>

#include "rvac/mat.hpp"
#include "rvac/state.hpp"

namespace rvac {

struct SuperluminalInterface : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularTransform : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularBoundaryMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Regime { Expansion, Shrinkage };

// Characteristic structure of the vacuum side of a moving interface with
// front function phi.  lambdas holds the closed-form eigenvalues of
// dtphi*I - B1 + d2phi*B2 + d3phi*B3 in the order (+s, +s, -s, -s, 0, 0)
// relative to dtphi, s = sqrt(1 + d2phi^2 + d3phi^2).
struct BoundarySpectrum {
  std::array<double, 6> lambdas;
  int n_incoming_plasma;  // always 1; the front unknown adds one more
  int n_incoming_vacuum;  // 2 under expansion, 4 under shrinkage
  Regime regime;
};

BoundarySpectrum vacuum_boundary_eigen(double dtphi, double d2phi,
                                       double d3phi);

// Change of unknown U = J W with W = (q, Gamma*vN, u2, u3, H, S); K = J^-1.
struct WTransform {
  Mat J;
  Mat K;
  double cond;  // inf-norm condition estimate of K
};

WTransform w_transform(const InterfaceBaseState& base);

// Normal-derivative recovery at a planar base state.
struct NormalRecovery {
  Mat vacuum_map;  // 6x18: (dtV, d2V, d3V) -> d1V
  Mat plasma_map;  // 2x32: (dtU, d2U, d3U, F) -> (d1v1, d1q)
  Vec h_map;       // 16:   (d2U, d3U) -> d1H1
};

NormalRecovery normal_recovery(const InterfaceBaseState& base);

}  // namespace rvac

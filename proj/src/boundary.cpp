#include "rvac/boundary.hpp"

#include <cmath>
#include <string>

#include "rvac/densenum.hpp"
#include "rvac/symbols.hpp"

namespace rvac {

BoundarySpectrum vacuum_boundary_eigen(double dtphi, double d2phi,
                                       double d3phi) {
  const double s = std::sqrt(1.0 + d2phi * d2phi + d3phi * d3phi);
  if (!(std::fabs(dtphi) / s < 1.0)) {
    throw SuperluminalInterface("front speed " + std::to_string(dtphi / s) +
                                " is not subluminal");
  }
  BoundarySpectrum sp;
  sp.lambdas = {dtphi + s, dtphi + s, dtphi - s, dtphi - s, dtphi, dtphi};
  sp.regime = dtphi <= 0.0 ? Regime::Expansion : Regime::Shrinkage;
  sp.n_incoming_plasma = 1;
  sp.n_incoming_vacuum = sp.regime == Regime::Expansion ? 2 : 4;
  return sp;
}

WTransform w_transform(const InterfaceBaseState& base) {
  const DerivedPlasma& d = base.derived;
  Mat K(8, 8);
  const Vec q = q_form(base);
  for (int j = 0; j < 8; ++j) K(0, j) = q[j];
  for (int i = 0; i < 3; ++i)
    K(1, 1 + i) = (i == 0 ? 1.0 : 0.0) - d.v[0] * d.v[i];
  for (int i = 2; i < 8; ++i) K(i, i) = 1.0;

  WTransform w{Mat(8, 8), std::move(K), 0.0};
  try {
    w.J = densenum::lu_inverse(w.K);
  } catch (const densenum::SingularMatrix&) {
    throw SingularTransform("interface variable map is singular");
  }
  w.cond = inf_norm(w.K) * inf_norm(w.J);
  if (!(w.cond <= 1e12)) {
    throw SingularTransform("interface variable map condition " +
                            std::to_string(w.cond));
  }
  return w;
}

NormalRecovery normal_recovery(const InterfaceBaseState& base) {
  NormalRecovery r{Mat(6, 18), Mat(2, 32), Vec(16, 0.0)};

  const VacuumSymbols& vs = maxwell_symbols();
  const BoundarySymbols bs = boundary_symbols(base);
  Mat rhs(6, 18);
  for (int i = 0; i < 6; ++i) {
    rhs(i, i) = 1.0;
    for (int j = 0; j < 6; ++j) {
      rhs(i, 6 + j) = vs.B2(i, j);
      rhs(i, 12 + j) = vs.B3(i, j);
    }
  }
  try {
    r.vacuum_map = densenum::lu_solve(bs.B1hat, rhs);
  } catch (const densenum::SingularMatrix&) {
    throw SingularBoundaryMatrix(
        "vacuum boundary matrix is singular (kappa = " +
        std::to_string(base.kappa) + ")");
  }

  const PlasmaSymbols ps = assemble_plasma_symbols(base.derived);
  const WTransform w = w_transform(base);
  const Mat* tang[3] = {&ps.A0, &ps.A2, &ps.A3};
  for (int row = 0; row < 2; ++row) {
    // row 0 recovers d1v1 via column 0 of J, row 1 recovers d1q via column 1
    const int col = row == 0 ? 0 : 1;
    const double scale = row == 0 ? 1.0 / base.derived.gamma : 1.0;
    for (int blk = 0; blk < 3; ++blk) {
      for (int j = 0; j < 8; ++j) {
        double acc = 0.0;
        for (int a = 0; a < 8; ++a) acc += w.J(a, col) * (*tang[blk])(a, j);
        r.plasma_map(row, 8 * blk + j) = -scale * acc;
      }
    }
    for (int j = 0; j < 8; ++j)
      r.plasma_map(row, 24 + j) = scale * w.J(j, col);
  }

  r.h_map[5] = -1.0;   // -d2H2
  r.h_map[14] = -1.0;  // -d3H3
  return r;
}

}  // namespace rvac

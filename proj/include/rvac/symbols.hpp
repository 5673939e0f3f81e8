#pragma once

#include "rvac/mat.hpp"
#include "rvac/state.hpp"

namespace rvac {

// Symmetric coefficient matrices of the plasma system in the state
// ordering (p, u1, u2, u3, H1, H2, H3, S).
struct PlasmaSymbols {
  Mat A0;
  Mat A1;
  Mat A2;
  Mat A3;
};

PlasmaSymbols assemble_plasma_symbols(const DerivedPlasma& d);

// G_j = A_j - v_j * A0; its quadratic form carries the boundary flux.
Mat assemble_G(const DerivedPlasma& d, int j);

// Constant symmetric symbols of the pre-Maxwell system in the field
// ordering (Hc1, Hc2, Hc3, E1, E2, E3).
struct VacuumSymbols {
  Mat B1;
  Mat B2;
  Mat B3;
};

const VacuumSymbols& maxwell_symbols();

// Secondary symmetrizer family for the vacuum system, parametrized by a
// vector field nu with |nu| < 1.
struct SecondarySymmetrizer {
  Mat Bc0;
  Mat Bc1;
  Mat Bc2;
  Mat Bc3;
  Vec R1;
  Vec R2;
  Mat K1;  // Bc_j = Bc0 * B_j + K_j
  Mat K2;
  Mat K3;
};

SecondarySymmetrizer secondary_symmetrizer(const V3& nu);

// Normal-direction vacuum symbol after front flattening:
//   B1 - dtphi*I - d2phi*B2 - d3phi*B3.
Mat vacuum_front_matrix(double dtphi, double d2phi, double d3phi);

// Same reduction applied to the symmetrized family:
//   Bc1(nu) - kappa*Bc0(nu) - d2phi*Bc2(nu) - d3phi*Bc3(nu).
Mat secondary_front_matrix(const V3& nu, double kappa, double d2phi,
                           double d3phi);

// Boundary-adapted symbols at a planar base state.
struct BoundarySymbols {
  Mat A1hat;   // A1 - kappa*A0          (8x8)
  Mat B1hat;   // B1 - kappa*I           (6x6)
  Mat Bc1hat;  // Bc1 - kappa*Bc0, nu=v  (6x6)
};

BoundarySymbols boundary_symbols(const InterfaceBaseState& base);

// Linear forms in U for the interface flux variables: the total-pressure
// perturbation q(U) and the normal-velocity perturbation vN(U).
Vec q_form(const InterfaceBaseState& base);
Vec vN_form(const InterfaceBaseState& base);

}  // namespace rvac

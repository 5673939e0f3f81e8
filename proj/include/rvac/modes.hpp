#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvac/state.hpp"

namespace rvac {

struct OutOfFamily : std::runtime_error {
  explicit OutOfFamily(const std::string& w) : std::runtime_error(w) {}
};

// Closed-form mode analysis applies to interfaces at rest (kappa = 0, or
// |kappa| <= 0.05 treated by continuation) with u1 = u2 = 0, H1 = H2 = 0 and
// the tangential wave vector along x2. project_family validates membership
// and returns the kappa = 0 projection the closed forms are written for.
struct FamilyState {
  Eos eos;
  PlasmaState plasma;     // projected: u = (0, 0, u3), H = (0, 0, H3)
  DerivedPlasma derived;  // derived at the projection
  double Hc2 = 0.0, Hc3 = 0.0;
  double E1 = 0.0;
  double kappa = 0.0;         // as given on the input state
  bool continuation = false;  // kappa != 0
};

FamilyState project_family(const InterfaceBaseState& base);

struct DispersionParams {
  double w2 = 0.0;   // 1 - v3^2 cs^2
  double m = 0.0;    // H3 / (a sqrt(rho))
  double r = 0.0;    // w^2 (Gamma^2 + m^2 cs^2) / (cs^2 (1 + m^2 w^2))
  double ell = 0.0;  // 1 / (rho h Gamma^2 + H3^2)
};

DispersionParams dispersion_params(const InterfaceBaseState& base);

// Decay exponents of the unique interior modes bounded in x1 for Re tau > 0.
struct XiRoots {
  std::complex<double> xi_p;  // plasma: -sqrt(1 + r tau^2)
  std::complex<double> xi_v;  // vacuum: -sqrt(1 + tau^2)
  bool re_xi_p_negative = false;
  bool re_xi_v_negative = false;
};

XiRoots xi_roots(std::complex<double> tau, const DispersionParams& dp);

// Interior dispersion determinants the xi branches must annihilate:
// det(tau A0 + xi A1 + i A2) on the 7x7 entropy-masked plasma symbol and
// det(tau I - xi B1 + i B2) on the vacuum symbol.
std::complex<double> plasma_dispersion_det(std::complex<double> tau,
                                           std::complex<double> xi,
                                           const InterfaceBaseState& base);
std::complex<double> vacuum_dispersion_det(std::complex<double> tau,
                                           std::complex<double> xi);

// Case A: Hc2 = 0 (vacuum field parallel to the plasma field). The boundary
// system reduces to a 3x3 linear system on (q, v1, E1) whose determinant
// vanishes together with the scalar relation
//   tau^2 sqrt(1+tau^2) = ell (E1_hat + i Hc3_hat tau)^2 sqrt(1+r tau^2).
struct CaseAResult {
  std::complex<double> scalar;  // scalar-relation residual at tau
  std::complex<double> det3;    // 3x3 system determinant at tau
  double scalar_rel = 0.0;
  double det3_rel = 0.0;  // |det3| relative to the Hadamard bound
};

CaseAResult lopatinski_caseA(std::complex<double> tau,
                             const InterfaceBaseState& base);

// Case B: Hc3 = 0 with H3*Hc2 != 0. In y = tau^2 the root condition is
//   G(y) = y sqrt(1+y) - ell (E1_hat^2 - Hc2_hat^2 (1+y)) sqrt(1+r y) = 0,
// cross-checked against the 6x6 system on (q, v1, E1, E2, E3, Hc2).
struct CaseBResult {
  std::complex<double> g;  // G(y)
  std::complex<double> det6;
  double g_rel = 0.0;
  double det6_rel = 0.0;
};

CaseBResult lopatinski_caseB(std::complex<double> y,
                             const InterfaceBaseState& base);

struct ModeRoot {
  std::complex<double> tau;
  std::complex<double> xi_p;
  std::complex<double> xi_v;
  double residual = 0.0;  // |scalar relation| at tau
  double det_rel = 0.0;   // linear-system determinant, relative
  bool branch_ok = false; // Re xi_p < 0 and Re xi_v < 0
};

struct ScanSpec {
  double re_max = 10.0;     // search box Re tau in (0, re_max]
  double im_max = 10.0;     // Im tau in [-im_max, im_max]
  int seeds = 40;           // seed grid points per axis
  double min_re = 1e-4;     // growth rates below this count as neutral
  double root_tol = 1e-10;  // residual acceptance threshold
};

struct ModeClassification {
  std::string verdict;  // unstable | weakly_stable | scan-neutral |
                        // degenerate_out_of_family
  std::string family;   // caseA_parallel_Hc_zero | caseB_Hc2_only | ""
  bool continuation = false;  // verdict extended from kappa = 0 by continuity
  std::vector<ModeRoot> roots;
  std::string note;
};

ModeClassification classify_modes(const InterfaceBaseState& base,
                                  const ScanSpec& scan = {});

} // namespace rvac

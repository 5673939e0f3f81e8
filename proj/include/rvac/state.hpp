#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "rvac/mat.hpp"

namespace rvac {

struct NonPositiveDensity : std::runtime_error {
  explicit NonPositiveDensity(const std::string& w) : std::runtime_error(w) {}
};
struct SuperluminalVelocity : std::runtime_error {
  explicit SuperluminalVelocity(const std::string& w) : std::runtime_error(w) {}
};
struct InvalidBaseState : std::runtime_error {
  explicit InvalidBaseState(const std::string& w) : std::runtime_error(w) {}
};

// Isentropic-exponent closure: p = entropy_scale * exp(S) * rho^gamma_ad.
struct Eos {
  double gamma_ad = 5.0 / 3.0;
  double entropy_scale = 1.0;
};

// Primary plasma unknowns: pressure, relativistic velocity u = Gamma*v,
// magnetic field H, entropy S.
struct PlasmaState {
  double p = 1.0;
  V3 u{0.0, 0.0, 0.0};
  V3 H{0.0, 0.0, 0.0};
  double S = 0.0;
};

struct DerivedPlasma {
  double p = 0.0;      // pressure (copied from the state)
  V3 u{};              // relativistic velocity (copied from the state)
  V3 H{};              // magnetic field (copied from the state)
  double rho = 0.0;    // mass density from the EOS inversion
  double gamma = 1.0;  // Lorentz factor
  V3 v{};              // velocity u/gamma
  V3 b{};              // magnetic 4-vector spatial part
  double b0 = 0.0;     // (u, H)
  double B2 = 0.0;     // |b|^2 - b0^2 = |H|^2/Gamma^2 + (v,H)^2
  double e = 0.0;      // specific internal energy
  double h = 0.0;      // specific enthalpy 1 + e + p/rho
  double q = 0.0;      // total pressure p + B2/2
  double a2 = 0.0;     // p_rho at constant S
  double cs2 = 0.0;    // sound speed squared a2/h
};

struct VacuumState {
  V3 Hc{0.0, 0.0, 0.0}; // vacuum magnetic field
  V3 E{0.0, 0.0, 0.0};  // vacuum electric field
};

// Planar interface base state moving with normal speed kappa < 0 (vacuum
// expands into the plasma). Tangential jump relations tie E2, E3 to Hc.
struct InterfaceBaseState {
  Eos eos;
  PlasmaState plasma;
  DerivedPlasma derived;
  VacuumState vacuum;
  double kappa = -0.1;
};

struct AdmissibilityReport {
  bool rho_positive = false;
  bool pressure_slope_positive = false; // a2 = p_rho > 0
  bool causal = false;                  // 0 < cs2 < 1
  bool subluminal = false;              // |v| < 1
  bool a0_positive_definite = false;    // numeric Cholesky of A0
  bool hyperbolic = false;              // all of the above
  double rho = 0.0;
  double cs2 = 0.0;
  double v_norm = 0.0;
};

double eos_pressure(const Eos& eos, double rho, double S);
double eos_density(const Eos& eos, double p, double S);

DerivedPlasma derive_plasma(const Eos& eos, const PlasmaState& st);

// Analytic admissibility flags plus the numeric A0 certificate; the two
// must agree for every admissible state.
AdmissibilityReport check_hyperbolic(const Eos& eos, const PlasmaState& st);

enum class BasePurpose {
  Stability, // requires kappa <= -delta < 0
  Modes      // closed-form families; kappa in [-0.05, 0]
};

struct BaseParams {
  double p = 1.0;
  // u1 = NaN means "derive from kappa": u1 = kappa * Gamma.
  double u1 = std::nan("");
  double u2 = 0.0;
  double u3 = 0.0;
  double S = 0.0;
  double H2 = 0.0, H3 = 0.0;    // H1 is 0 on the interface
  double Hc2 = 0.0, Hc3 = 0.0;  // Hc1 is 0 on the interface
  double E1 = 0.0;              // E2, E3 follow from kappa and Hc
  double kappa = -0.1;
  double delta = 1e-3;          // expansion margin for Stability purpose
};

InterfaceBaseState make_base_state(const Eos& eos, const BaseParams& bp,
                                   BasePurpose purpose = BasePurpose::Stability);

// mu-hat = E1 + v2*Hc3 - v3*Hc2, the coefficient in front of the boundary
// coupling; its magnitude is the smallness parameter of the sufficient
// stability test.
double mu_hat(const InterfaceBaseState& base);

// D = H2*Hc3 - H3*Hc2; |D| >= eps is the front-symbol ellipticity condition.
double front_symbol_gap(const InterfaceBaseState& base);

// Default ellipticity margin 1e-6 * (|H| * |Hc| + 1).
double default_epsilon(const InterfaceBaseState& base);

} // namespace rvac

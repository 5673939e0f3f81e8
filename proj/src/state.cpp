#include "rvac/state.hpp"

#include <cmath>
#include <sstream>

#include "rvac/densenum.hpp"
#include "rvac/symbols.hpp"

namespace rvac {

namespace {

double norm3(const V3& a) {
  return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

double dot3(const V3& a, const V3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace

double eos_pressure(const Eos& eos, double rho, double S) {
  return eos.entropy_scale * std::exp(S) * std::pow(rho, eos.gamma_ad);
}

double eos_density(const Eos& eos, double p, double S) {
  return std::pow(p / (eos.entropy_scale * std::exp(S)), 1.0 / eos.gamma_ad);
}

DerivedPlasma derive_plasma(const Eos& eos, const PlasmaState& st) {
  if (!(st.p > 0.0) || !std::isfinite(st.p)) {
    throw NonPositiveDensity("pressure " + std::to_string(st.p) +
                             " does not invert to a positive density");
  }
  DerivedPlasma d;
  d.p = st.p;
  d.u = st.u;
  d.H = st.H;
  d.rho = eos_density(eos, st.p, st.S);
  if (!(d.rho > 0.0) || !std::isfinite(d.rho)) {
    throw NonPositiveDensity("density came out nonpositive");
  }
  const double u2 = dot3(st.u, st.u);
  d.gamma = std::sqrt(1.0 + u2);
  for (int i = 0; i < 3; ++i) d.v[i] = st.u[i] / d.gamma;
  const double vnorm = norm3(d.v);
  if (!(vnorm < 1.0) || !std::isfinite(vnorm)) {
    throw SuperluminalVelocity("|v| = " + std::to_string(vnorm));
  }
  d.b0 = dot3(st.u, st.H);
  for (int i = 0; i < 3; ++i) d.b[i] = st.H[i] / d.gamma + d.b0 * d.v[i];
  const double vH = dot3(d.v, st.H);
  d.B2 = dot3(st.H, st.H) / (d.gamma * d.gamma) + vH * vH;
  d.e = st.p / ((eos.gamma_ad - 1.0) * d.rho);
  d.h = 1.0 + d.e + st.p / d.rho;
  d.q = st.p + 0.5 * d.B2;
  d.a2 = eos.gamma_ad * st.p / d.rho;
  d.cs2 = d.a2 / d.h;
  return d;
}

AdmissibilityReport check_hyperbolic(const Eos& eos, const PlasmaState& st) {
  AdmissibilityReport rep;
  DerivedPlasma d;
  try {
    d = derive_plasma(eos, st);
  } catch (const std::runtime_error&) {
    return rep; // all flags false
  }
  rep.rho = d.rho;
  rep.cs2 = d.cs2;
  rep.v_norm = norm3(d.v);
  rep.rho_positive = d.rho > 0.0;
  rep.pressure_slope_positive = d.a2 > 0.0;
  rep.causal = d.cs2 > 0.0 && d.cs2 < 1.0;
  rep.subluminal = rep.v_norm < 1.0;
  const PlasmaSymbols sym = assemble_plasma_symbols(d);
  rep.a0_positive_definite = densenum::cholesky_pd(sym.A0).pd;
  rep.hyperbolic = rep.rho_positive && rep.pressure_slope_positive &&
                   rep.causal && rep.subluminal && rep.a0_positive_definite;
  return rep;
}

InterfaceBaseState make_base_state(const Eos& eos, const BaseParams& bp,
                                   BasePurpose purpose) {
  std::ostringstream bad;
  auto complain = [&bad](const std::string& msg) {
    if (bad.tellp() > 0) bad << "; ";
    bad << msg;
  };

  if (purpose == BasePurpose::Stability) {
    if (!(bp.delta > 0.0)) complain("delta must be positive");
    if (!(bp.kappa <= -bp.delta)) {
      complain("kappa must satisfy kappa <= -delta (expanding vacuum); got kappa=" +
               std::to_string(bp.kappa));
    }
    if (!(bp.kappa > -1.0)) complain("kappa must exceed -1");
  } else {
    if (!(bp.kappa <= 0.0) || !(bp.kappa >= -0.05)) {
      complain("modes families need kappa in [-0.05, 0]; got " +
               std::to_string(bp.kappa));
    }
  }

  // u1 must agree with the kinematic condition v1 = kappa, i.e. u1 = kappa *
  // Gamma with Gamma^2 = (1 + u2^2 + u3^2) / (1 - kappa^2).
  const double tang = 1.0 + bp.u2 * bp.u2 + bp.u3 * bp.u3;
  const double gamma = std::sqrt(tang / (1.0 - bp.kappa * bp.kappa));
  const double u1_expected = bp.kappa * gamma;
  double u1 = bp.u1;
  if (std::isnan(u1)) {
    u1 = u1_expected;
  } else if (std::abs(u1 - u1_expected) > 1e-10 * (1.0 + std::abs(u1_expected))) {
    complain("u1=" + std::to_string(u1) + " inconsistent with v1=kappa (expected " +
             std::to_string(u1_expected) + ")");
  }

  if (!bad.str().empty()) throw InvalidBaseState(bad.str());

  InterfaceBaseState base;
  base.eos = eos;
  base.kappa = bp.kappa;
  base.plasma.p = bp.p;
  base.plasma.S = bp.S;
  base.plasma.u = {u1, bp.u2, bp.u3};
  base.plasma.H = {0.0, bp.H2, bp.H3};
  base.vacuum.Hc = {0.0, bp.Hc2, bp.Hc3};
  base.vacuum.E = {bp.E1, bp.kappa * bp.Hc3, -bp.kappa * bp.Hc2};
  base.derived = derive_plasma(eos, base.plasma);
  return base;
}

double mu_hat(const InterfaceBaseState& base) {
  const V3& v = base.derived.v;
  const V3& Hc = base.vacuum.Hc;
  return base.vacuum.E[0] + v[1] * Hc[2] - v[2] * Hc[1];
}

double front_symbol_gap(const InterfaceBaseState& base) {
  const V3& H = base.plasma.H;
  const V3& Hc = base.vacuum.Hc;
  return H[1] * Hc[2] - H[2] * Hc[1];
}

double default_epsilon(const InterfaceBaseState& base) {
  const V3& H = base.plasma.H;
  const V3& Hc = base.vacuum.Hc;
  const double nH = std::sqrt(H[0] * H[0] + H[1] * H[1] + H[2] * H[2]);
  const double nHc = std::sqrt(Hc[0] * Hc[0] + Hc[1] * Hc[1] + Hc[2] * Hc[2]);
  return 1e-6 * (nH * nHc + 1.0);
}

} // namespace rvac

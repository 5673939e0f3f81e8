// End-to-end acceptance gate: each numbered check prints one PASS/FAIL line
// and the process exits nonzero if any of them fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "rvac/boundary.hpp"
#include "rvac/cli.hpp"
#include "rvac/config.hpp"
#include "rvac/densenum.hpp"
#include "rvac/modes.hpp"
#include "rvac/output.hpp"
#include "rvac/stability.hpp"
#include "rvac/state.hpp"
#include "rvac/symbols.hpp"

using namespace rvac;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2f s", s);
  return b;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  o.ok = false;
  if (o.detail.empty()) o.detail = why;
}

InterfaceBaseState random_expanding_base(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  BaseParams bp;
  bp.p = std::exp(1.2 * d(rng));
  bp.S = 0.5 * d(rng);
  bp.u2 = 0.6 * d(rng);
  bp.u3 = 0.6 * d(rng);
  bp.H2 = 1.5 * d(rng);
  bp.H3 = 1.5 * d(rng);
  bp.Hc2 = 1.5 * d(rng);
  bp.Hc3 = 1.5 * d(rng);
  bp.E1 = d(rng);
  bp.kappa = -0.02 - 0.85 * std::fabs(d(rng));
  return make_base_state(Eos{}, bp);
}

// 1. Symbol symmetry is exact on 10^4 randomized admissible states, and on
//    every one of them the numeric definiteness certificate agrees with the
//    analytic admissibility flags (all must pass, so A0 must be PD).
Outcome plasma_symbol_agreement() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int disagreements = 0;
  int asymmetric = 0;
  int admissible = 0;

  for (int i = 0; i < 10000; ++i) {
    Eos eos;
    const double gs[3] = {4.0 / 3.0, 5.0 / 3.0, 2.0};
    eos.gamma_ad = gs[i % 3];
    PlasmaState st;
    st.p = std::exp(2.5 * d(rng) - 0.5);
    st.S = d(rng);
    for (int k = 0; k < 3; ++k) st.u[k] = 2.0 * d(rng);
    for (int k = 0; k < 3; ++k) st.H[k] = 3.0 * d(rng);

    const AdmissibilityReport rep = check_hyperbolic(eos, st);
    const bool flags = rep.rho_positive && rep.pressure_slope_positive &&
                       rep.causal && rep.subluminal;
    if (!flags) continue;  // draw recipe keeps cs2 < 1, so this never skips
    ++admissible;
    if (!rep.a0_positive_definite || !rep.hyperbolic) ++disagreements;

    const PlasmaSymbols ps = assemble_plasma_symbols(derive_plasma(eos, st));
    if (!exactly_symmetric(ps.A0) || !exactly_symmetric(ps.A1) ||
        !exactly_symmetric(ps.A2) || !exactly_symmetric(ps.A3)) {
      ++asymmetric;
    }
    if (!densenum::cholesky_pd(ps.A0).pd) ++disagreements;
  }

  const double dt = seconds_since(t0);
  Outcome o;
  if (admissible != 10000) fail(o, "draw recipe produced inadmissible states");
  if (asymmetric > 0) fail(o, std::to_string(asymmetric) + " asymmetric");
  if (disagreements > 0)
    fail(o, std::to_string(disagreements) + " flag disagreements");
  if (dt > 10.0) fail(o, "exceeded 10 s");
  if (o.ok)
    o.detail = "10000 admissible states, 0 disagreements, " + fmt_secs(dt);
  return o;
}

// 2. Secondary symmetrizer identities hold exactly, its time symbol has the
//    closed spectrum, and definiteness flips exactly at unit field speed.
Outcome vacuum_symmetrizer_checks() {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const VacuumSymbols& vs = maxwell_symbols();
  int bad_identity = 0;
  int bad_spectrum = 0;
  for (int i = 0; i < 1000; ++i) {
    const V3 nu{1.5 * d(rng), 1.5 * d(rng), 1.5 * d(rng)};
    const SecondarySymmetrizer s = secondary_symmetrizer(nu);
    if (inf_norm(s.Bc1 - (s.Bc0 * vs.B1 + s.K1)) != 0.0) ++bad_identity;
    if (inf_norm(s.Bc2 - (s.Bc0 * vs.B2 + s.K2)) != 0.0) ++bad_identity;
    if (inf_norm(s.Bc3 - (s.Bc0 * vs.B3 + s.K3)) != 0.0) ++bad_identity;

    const double r =
        std::sqrt(nu[0] * nu[0] + nu[1] * nu[1] + nu[2] * nu[2]);
    const auto eg = densenum::sym_eigen(s.Bc0);
    const double expect[6] = {1.0 - r, 1.0 - r, 1.0, 1.0, 1.0 + r, 1.0 + r};
    for (int k = 0; k < 6; ++k) {
      if (std::fabs(eg.eigenvalues[k] - expect[k]) > 1e-12) ++bad_spectrum;
    }
  }

  int bad_flip = 0;
  for (int i = 0; i < 1000; ++i) {
    const double t = 0.001 + 0.002 * i;  // straddles 1 without touching it
    V3 dir{d(rng), d(rng), d(rng)};
    double n = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    if (n == 0.0) {
      dir = {1.0, 0.0, 0.0};
      n = 1.0;
    }
    const V3 nu{t * dir[0] / n, t * dir[1] / n, t * dir[2] / n};
    const bool pd = densenum::cholesky_pd(secondary_symmetrizer(nu).Bc0).pd;
    if (pd != (t < 1.0)) ++bad_flip;
  }

  Outcome o;
  if (bad_identity > 0) fail(o, "inexact composition identity");
  if (bad_spectrum > 0) fail(o, "time-symbol spectrum off");
  if (bad_flip > 0) fail(o, std::to_string(bad_flip) + " definiteness flips misplaced");
  if (o.ok) o.detail = "1000 fields exact, flip pinned at unit speed";
  return o;
}

// 3. The interface flux matrix factors through the q and vN forms, carries
//    rank-two signature, reduces to the unit coupling in W variables, and
//    the vacuum front symbol has its closed-form spectrum.
Outcome boundary_quadratic_checks() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int bad_factor = 0;
  int bad_signature = 0;
  int bad_transform = 0;

  Mat e12(8, 8);
  e12(0, 1) = 1.0;
  e12(1, 0) = 1.0;

  for (int b = 0; b < 100; ++b) {
    const InterfaceBaseState base = random_expanding_base(rng);
    const BoundarySymbols bs = boundary_symbols(base);
    const Vec qf = q_form(base);
    const Vec vf = vN_form(base);
    const double gh = base.derived.gamma;
    const double anorm = inf_norm(bs.A1hat);

    for (int p = 0; p < 1000; ++p) {
      Vec U(8);
      for (double& x : U) x = d(rng);
      const double lhs = quad_form(bs.A1hat, U);
      const double rhs = 2.0 * gh * dotv(qf, U) * dotv(vf, U);
      if (std::fabs(lhs - rhs) > 1e-11 * (anorm * dotv(U, U) + 1.0)) {
        ++bad_factor;
      }
    }

    const auto eg = densenum::sym_eigen(bs.A1hat);
    const double tol =
        1e-10 * std::max({std::fabs(eg.eigenvalues.front()),
                          std::fabs(eg.eigenvalues.back()), 1.0});
    int np = 0, nn = 0, nz = 0;
    for (double lam : eg.eigenvalues) {
      if (lam > tol)
        ++np;
      else if (lam < -tol)
        ++nn;
      else
        ++nz;
    }
    if (np != 1 || nn != 1 || nz != 6) ++bad_signature;

    const WTransform wt = w_transform(base);
    const Mat reduced = transpose(wt.J) * bs.A1hat * wt.J;
    if (inf_norm(reduced - e12) > 1e-10 * std::max(anorm, 1.0)) {
      ++bad_transform;
    }
  }

  int bad_front = 0;
  for (int i = 0; i < 1000; ++i) {
    const double dt = 2.0 * d(rng);
    const double d2 = 2.0 * d(rng);
    const double d3 = 2.0 * d(rng);
    const double s = std::sqrt(1.0 + d2 * d2 + d3 * d3);
    const auto eg = densenum::sym_eigen(vacuum_front_matrix(dt, d2, d3));
    const double expect[6] = {-dt - s, -dt - s, -dt, -dt, -dt + s, -dt + s};
    for (int k = 0; k < 6; ++k) {
      if (std::fabs(eg.eigenvalues[k] - expect[k]) >
          1e-10 * (1.0 + std::fabs(expect[k]))) {
        ++bad_front;
      }
    }
  }

  Outcome o;
  if (bad_factor > 0) fail(o, std::to_string(bad_factor) + " factorization residuals");
  if (bad_signature > 0) fail(o, "signature not (1 pos, 1 neg, 6 null)");
  if (bad_transform > 0) fail(o, "W-variable reduction off");
  if (bad_front > 0) fail(o, "front spectrum off closed form");
  if (o.ok) o.detail = "100 bases x 1000 directions, 1000 front symbols";
  return o;
}

// 4. Normal-derivative recovery reproduces consistent trace data and the
//    vacuum boundary determinant matches kappa^2 (1 - kappa^2)^2.
Outcome trace_recovery_checks() {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const VacuumSymbols& vs = maxwell_symbols();
  int bad_vacuum = 0;
  int bad_plasma = 0;
  int bad_det = 0;

  for (int b = 0; b < 200; ++b) {
    const InterfaceBaseState base = random_expanding_base(rng);
    const NormalRecovery nr = normal_recovery(base);
    const BoundarySymbols bs = boundary_symbols(base);
    const PlasmaSymbols ps = assemble_plasma_symbols(base.derived);
    const Vec qf = q_form(base);
    const Vec vf = vN_form(base);

    for (int t = 0; t < 10; ++t) {
      Vec w(18);
      for (double& x : w) x = d(rng);
      const Vec d1v = nr.vacuum_map * w;
      Vec rhs(6, 0.0);
      for (int i = 0; i < 6; ++i) {
        double acc = w[i];
        for (int j = 0; j < 6; ++j) {
          acc += vs.B2(i, j) * w[6 + j] + vs.B3(i, j) * w[12 + j];
        }
        rhs[i] = acc;
      }
      const Vec lhs = bs.B1hat * d1v;
      double scale = 1.0;
      for (double x : rhs) scale = std::max(scale, std::fabs(x));
      for (int i = 0; i < 6; ++i) {
        if (std::fabs(lhs[i] - rhs[i]) > 1e-9 * scale) {
          ++bad_vacuum;
          break;
        }
      }

      Vec d1U(8), dtU(8), d2U(8), d3U(8);
      for (Vec* vec : {&d1U, &dtU, &d2U, &d3U}) {
        for (double& x : *vec) x = d(rng);
      }
      const Vec f0 = ps.A0 * dtU;
      const Vec f1 = bs.A1hat * d1U;
      const Vec f2 = ps.A2 * d2U;
      const Vec f3 = ps.A3 * d3U;
      Vec input(32);
      for (int i = 0; i < 8; ++i) {
        input[i] = dtU[i];
        input[8 + i] = d2U[i];
        input[16 + i] = d3U[i];
        input[24 + i] = f0[i] + f1[i] + f2[i] + f3[i];
      }
      const Vec out = nr.plasma_map * input;
      const double ev = dotv(vf, d1U);
      const double eq = dotv(qf, d1U);
      const double sc = 1.0 + std::fabs(ev) + std::fabs(eq);
      if (std::fabs(out[0] - ev) > 1e-9 * sc ||
          std::fabs(out[1] - eq) > 1e-9 * sc) {
        ++bad_plasma;
      }
    }
  }

  for (int i = 0; i < 100; ++i) {
    const double kap = -0.005 - 0.985 * std::fabs(d(rng));
    BaseParams bp;
    bp.H3 = 1.0;
    bp.Hc2 = 1.0;
    bp.kappa = kap;
    const BoundarySymbols bs = boundary_symbols(make_base_state(Eos{}, bp));
    const double det = densenum::lu_det(bs.B1hat);
    const double closed = kap * kap * (1.0 - kap * kap) * (1.0 - kap * kap);
    if (std::fabs(det - closed) > 1e-12 * std::fabs(closed)) ++bad_det;
  }

  Outcome o;
  if (bad_vacuum > 0) fail(o, std::to_string(bad_vacuum) + " vacuum recoveries off");
  if (bad_plasma > 0) fail(o, std::to_string(bad_plasma) + " plasma recoveries off");
  if (bad_det > 0) fail(o, "boundary determinant off closed form");
  if (o.ok) o.detail = "200 bases x 10 traces, 100 determinant draws";
  return o;
}

// 5. The energy-shell form is positive definite whenever hyperbolic, the
//    definiteness test always passes at zero coupling, its admissible
//    interval matches dense eigenvalue-sign sampling, and assembly is
//    deterministic and accumulation-order invariant.
Outcome energy_interval_checks() {
  std::mt19937_64 rng(1005);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int bad_pd = 0;
  int bad_zero = 0;
  int bad_interval = 0;
  int bad_determinism = 0;
  int bad_order = 0;

  for (int i = 0; i < 300; ++i) {
    const InterfaceBaseState base = random_expanding_base(rng);
    if (!densenum::cholesky_pd(assemble_Q(base).Afrak).pd) ++bad_pd;
  }

  for (int i = 0; i < 100; ++i) {
    BaseParams bp;
    bp.p = std::exp(d(rng));
    bp.S = 0.3 * d(rng);
    bp.H2 = 1.5 * d(rng);
    bp.H3 = 1.5 * d(rng);
    bp.Hc2 = 1.5 * d(rng);
    bp.Hc3 = 1.5 * d(rng);
    bp.E1 = 0.0;  // with u2 = u3 = 0 the coupling coefficient vanishes exactly
    bp.kappa = -0.02 - 0.85 * std::fabs(d(rng));
    const InterfaceBaseState base = make_base_state(Eos{}, bp);
    if (mu_hat(base) != 0.0) {
      ++bad_zero;
      continue;
    }
    try {
      if (!check_condition_122(base).condition122) ++bad_zero;
    } catch (const std::exception&) {
      ++bad_zero;
    }
  }

  for (int i = 0; i < 25; ++i) {
    const InterfaceBaseState base = random_expanding_base(rng);
    const StabilityMatrices sm = assemble_Q(base);
    const StabilityVerdict v = check_condition_122(base);

    const double lo = v.mu_lo;
    const double hi = v.mu_hi;
    double wlo, whi;
    if (std::isfinite(lo) && std::isfinite(hi)) {
      const double w = hi - lo;
      wlo = lo - 0.5 * w;
      whi = hi + 0.5 * w;
    } else if (std::isfinite(lo)) {
      wlo = lo - 5.0;
      whi = 4.0 * std::fabs(lo) + 5.0;
    } else if (std::isfinite(hi)) {
      whi = hi + 5.0;
      wlo = -4.0 * std::fabs(hi) - 5.0;
    } else {
      wlo = -20.0;
      whi = 20.0;
    }
    for (int k = 0; k < 100; ++k) {
      const double mu = wlo + (whi - wlo) * (k + 0.5) / 100.0;
      const auto eg = densenum::sym_eigen(sm.Afrak + mu * sm.Q);
      const bool positive = eg.eigenvalues.front() > 0.0;
      const bool inside = mu > lo && mu < hi;
      if (positive != inside) ++bad_interval;
    }

    const StabilityMatrices again = assemble_Q(base);
    if (inf_norm(sm.Q - again.Q) != 0.0 || inf_norm(sm.Q1 - again.Q1) != 0.0) {
      ++bad_determinism;
    }
    const StabilityMatrices flat =
        assemble_Q(base, AssemblyOrder::ExpandedFirst);
    if (inf_norm(sm.Q - flat.Q) > 1e-10 * (1.0 + inf_norm(sm.Q))) ++bad_order;
    if (inf_norm(sm.Q1 - flat.Q1) > 1e-10 * (1.0 + inf_norm(sm.Q1))) {
      ++bad_order;
    }
  }

  Outcome o;
  if (bad_pd > 0) fail(o, "shell form lost definiteness");
  if (bad_zero > 0) fail(o, std::to_string(bad_zero) + " zero-coupling failures");
  if (bad_interval > 0)
    fail(o, std::to_string(bad_interval) + " interval disagreements");
  if (bad_determinism > 0) fail(o, "assembly not bitwise deterministic");
  if (bad_order > 0) fail(o, "accumulation orders diverge");
  if (o.ok) o.detail = "2500 interval samples, 0 disagreements";
  return o;
}

// 6. Parallel vacuum field: no growth without sources; a certified real
//    growth root for each tested electric field strength, fast.
Outcome parallel_field_roots() {
  Outcome o;
  BaseParams bp;
  bp.p = 1.0;
  bp.u3 = 0.15;
  bp.H3 = 1.0;
  bp.kappa = 0.0;
  bp.E1 = 0.0;
  bp.Hc2 = 0.0;
  bp.Hc3 = 0.0;

  auto t0 = Clock::now();
  const ModeClassification quiet =
      classify_modes(make_base_state(Eos{}, bp, BasePurpose::Modes));
  double worst = seconds_since(t0);
  if (quiet.verdict != "weakly_stable" || !quiet.roots.empty()) {
    fail(o, "sourceless interface produced growth");
  }

  for (double e1 : {0.25, 0.5, 1.0}) {
    bp.E1 = e1;
    const InterfaceBaseState base =
        make_base_state(Eos{}, bp, BasePurpose::Modes);
    t0 = Clock::now();
    const ModeClassification mc = classify_modes(base);
    worst = std::max(worst, seconds_since(t0));
    if (mc.verdict != "unstable") {
      fail(o, "no growth at E1 = " + std::to_string(e1));
      continue;
    }
    bool certified = false;
    for (const ModeRoot& r : mc.roots) {
      if (std::fabs(r.tau.imag()) <= 1e-8 && r.tau.real() > 1e-4 &&
          r.residual <= 1e-10 && r.det_rel <= 1e-9 && r.branch_ok) {
        certified = true;
      }
    }
    if (!certified) fail(o, "no certified real root at E1 = " + std::to_string(e1));
  }
  if (worst > 5.0) fail(o, "scan exceeded 5 s per case");
  if (o.ok) o.detail = "3 growth cases certified, worst scan " + fmt_secs(worst);
  return o;
}

// 7. Crossed vacuum field: growth root inside (0, y*) whenever the electric
//    field dominates; neutral scans in the magnetically dominated stiff-gas
//    regime.
Outcome crossed_field_roots() {
  Outcome o;
  int grown = 0;
  int total = 0;
  for (double ratio : {1.2, 1.5, 2.0, 2.5, 3.0}) {
    for (double h3 : {0.5, 1.0}) {
      for (double u3 : {0.0, 0.25}) {
        ++total;
        BaseParams bp;
        bp.u3 = u3;
        bp.H3 = h3;
        bp.Hc2 = 1.0;
        bp.E1 = ratio;
        bp.kappa = 0.0;
        const InterfaceBaseState base =
            make_base_state(Eos{}, bp, BasePurpose::Modes);
        const double ystar = ratio * ratio - 1.0;
        const ModeClassification mc = classify_modes(base);
        if (mc.verdict != "unstable" || mc.roots.size() != 1) {
          fail(o, "missing growth root at E1 = " + std::to_string(ratio));
          continue;
        }
        const ModeRoot& r = mc.roots.front();
        const double y = r.tau.real() * r.tau.real();
        if (!(y > 0.0 && y < ystar) || r.residual > 1e-10 || !r.branch_ok) {
          fail(o, "uncertified root at E1 = " + std::to_string(ratio));
          continue;
        }
        ++grown;
      }
    }
  }
  if (grown != total) fail(o, "only " + std::to_string(grown) + "/" +
                                  std::to_string(total) + " points grew");

  Eos stiff;
  stiff.gamma_ad = 2.0;
  int neutral = 0;
  int ntotal = 0;
  for (double e1 : {0.0, 0.4, 0.8, 1.0}) {
    for (double h3 : {0.5, 1.0}) {
      ++ntotal;
      BaseParams bp;
      bp.p = 120.0;
      bp.u3 = 0.05;
      bp.H3 = h3;
      bp.Hc2 = 1.0;
      bp.E1 = e1;
      bp.kappa = 0.0;
      const InterfaceBaseState base =
          make_base_state(stiff, bp, BasePurpose::Modes);
      if (base.derived.cs2 < 0.95) {
        fail(o, "stiff gas missed the sound-speed target");
        continue;
      }
      const ModeClassification mc = classify_modes(base);
      if (mc.verdict == "scan-neutral" && mc.roots.empty()) {
        ++neutral;
      } else {
        fail(o, "growth in the magnetically dominated regime");
      }
    }
  }
  if (neutral != ntotal) fail(o, "neutral scan incomplete");
  if (o.ok)
    o.detail = std::to_string(total) + " growth points, " +
               std::to_string(ntotal) + " neutral points";
  return o;
}

// 8. The closed-form dispersion parameters satisfy their inequalities on a
//    large randomized family sample.
Outcome family_parameter_inequalities() {
  std::mt19937_64 rng(1008);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    Eos eos;
    const double gs[3] = {4.0 / 3.0, 5.0 / 3.0, 2.0};
    eos.gamma_ad = gs[i % 3];
    BaseParams bp;
    bp.p = std::exp(2.5 * d(rng) + 0.5);
    bp.S = d(rng);
    bp.u3 = 0.9 * d(rng);
    bp.H3 = 3.0 * d(rng);
    bp.Hc2 = 2.0 * d(rng);
    bp.Hc3 = 2.0 * d(rng);
    bp.E1 = 2.0 * d(rng);
    bp.kappa = -0.05 * std::fabs(d(rng));
    try {
      const InterfaceBaseState base =
          make_base_state(eos, bp, BasePurpose::Modes);
      const DispersionParams dp = dispersion_params(base);
      if (!(dp.w2 > 0.0 && dp.ell > 0.0 && dp.r > 1.0)) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  Outcome o;
  if (bad > 0) fail(o, std::to_string(bad) + " violations");
  if (o.ok) o.detail = "10000 family states, all inequalities hold";
  return o;
}

// 9. Wherever the crossed-field scan certifies growth at a resting
//    interface, the sufficient test must refuse to certify stability for
//    the slowly expanding neighbor.
Outcome growth_excludes_sufficiency() {
  Outcome o;
  int counterexamples = 0;
  int confirmed = 0;
  for (double ratio : {1.1, 1.4, 1.8, 2.2, 2.6}) {
    for (double h3 : {0.4, 1.0}) {
      for (double u3 : {0.0, 0.3}) {
        BaseParams bp;
        bp.u3 = u3;
        bp.H3 = h3;
        bp.Hc2 = 1.0;
        bp.Hc3 = 0.0;
        bp.E1 = ratio;
        bp.kappa = 0.0;
        const ModeClassification mc =
            classify_modes(make_base_state(Eos{}, bp, BasePurpose::Modes));
        if (mc.verdict != "unstable") {
          fail(o, "grid point failed to grow at rest");
          continue;
        }
        bp.kappa = -0.01;
        const StabilityVerdict v =
            check_condition_122(make_base_state(Eos{}, bp));
        if (v.sufficient_stable) {
          ++counterexamples;
        } else {
          ++confirmed;
        }
      }
    }
  }
  if (counterexamples > 0) {
    fail(o, std::to_string(counterexamples) + " counterexamples");
  }
  if (o.ok)
    o.detail = std::to_string(confirmed) + "/20 growth points excluded";
  return o;
}

// 10. The sweep command is byte-reproducible in both output formats and a
//     121-point grid finishes within budget on one thread.
Outcome sweep_reproducibility() {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path root("acceptance_out");
  std::error_code ec;
  fs::remove_all(root, ec);
  for (const char* sub : {"a", "b", "c", "d"}) {
    fs::create_directories(root / sub);
  }

  RunConfig cfg;
  cfg.base.u3 = 0.1;
  cfg.base.H3 = 1.0;
  cfg.base.Hc2 = 1.0;
  cfg.base.Hc3 = 0.0;
  cfg.axes.push_back({"E1", 1.0, 3.0, 11});
  cfg.axes.push_back({"kappa", -0.05, -0.01, 11});
  const std::string cfg_path = (root / "sweep.ini").string();
  write_file(cfg_path, serialize_config(cfg));

  const auto run = [&](const char* sub, const char* format) {
    const std::string outdir = (root / sub).string();
    const char* argv[] = {"rvac", "sweep",    "--config", cfg_path.c_str(),
                          "--out", outdir.c_str(), "--format", format,
                          "--threads", "1"};
    return run_cli(10, argv);
  };

  const auto t0 = Clock::now();
  int rc = run("a", "csv");
  const double elapsed = seconds_since(t0);
  rc |= run("b", "csv");
  rc |= run("c", "jsonl");
  rc |= run("d", "jsonl");
  if (rc != 0) fail(o, "sweep command returned nonzero");

  const std::string a = read_file((root / "a" / "sweep.csv").string());
  const std::string b = read_file((root / "b" / "sweep.csv").string());
  const std::string c = read_file((root / "c" / "sweep.jsonl").string());
  const std::string e = read_file((root / "d" / "sweep.jsonl").string());
  if (a.empty() || a != b) fail(o, "csv outputs differ between runs");
  if (c.empty() || c != e) fail(o, "jsonl outputs differ between runs");
  const long rows = std::count(a.begin(), a.end(), '\n') - 2;
  if (rows != 121) fail(o, "expected 121 rows, saw " + std::to_string(rows));
  if (elapsed > 30.0) fail(o, "sweep exceeded 30 s");
  if (o.ok) o.detail = "121 rows byte-identical, " + fmt_secs(elapsed);
  return o;
}

struct Criterion {
  int idx;
  const char* name;
  Outcome (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "plasma symbols: exact symmetry, definiteness agrees with flags",
       plasma_symbol_agreement},
      {2, "vacuum symmetrizer: exact identities, spectrum, unit-speed flip",
       vacuum_symmetrizer_checks},
      {3, "interface flux form: factorization, signature, front spectrum",
       boundary_quadratic_checks},
      {4, "trace recovery and vacuum boundary determinant",
       trace_recovery_checks},
      {5, "energy shell: definiteness interval vs dense sampling",
       energy_interval_checks},
      {6, "parallel vacuum field: certified growth roots",
       parallel_field_roots},
      {7, "crossed vacuum field: growth window and neutral scans",
       crossed_field_roots},
      {8, "family dispersion parameters: inequalities on random sample",
       family_parameter_inequalities},
      {9, "certified growth excludes the sufficient stability test",
       growth_excludes_sufficiency},
      {10, "sweep outputs byte-reproducible within the time budget",
       sweep_reproducibility},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail = std::string("unexpected exception: ") + ex.what();
    }
    std::string line = o.ok ? "PASS" : "FAIL";
    line += "  ";
    if (c.idx < 10) line += " ";
    line += std::to_string(c.idx) + "  " + c.name;
    if (!o.detail.empty()) line += "  [" + o.detail + "]";
    std::puts(line.c_str());
    if (!o.ok) ++failures;
  }
  if (failures == 0) {
    std::puts("all acceptance criteria passed");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failures);
  return 1;
}

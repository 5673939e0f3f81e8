#include "rvac/modes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rvac/densenum.hpp"
#include "rvac/symbols.hpp"

namespace rvac {

namespace {

using Cx = std::complex<double>;
constexpr Cx kI{0.0, 1.0};

double hadamard_bound(const CMat& m) {
  double prod = 1.0;
  for (int i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    prod *= std::sqrt(s);
  }
  return prod;
}

// rho h Gamma^2 + H3^2: the coefficient tying the total-pressure and normal-
// velocity amplitudes through the interior momentum balance.
double momentum_scale(const FamilyState& fs) {
  const DerivedPlasma& d = fs.derived;
  return d.rho * d.h * d.gamma * d.gamma + fs.plasma.H[2] * fs.plasma.H[2];
}

CaseAResult caseA_eval(Cx tau, const FamilyState& fs,
                       const DispersionParams& dp) {
  const XiRoots xi = xi_roots(tau, dp);
  const Cx c = fs.E1 + kI * fs.Hc3 * tau;
  const double sg = momentum_scale(fs);

  CaseAResult res;
  const Cx lhs = -tau * tau * xi.xi_v;          // tau^2 sqrt(1+tau^2)
  const Cx rhs = -dp.ell * c * c * xi.xi_p;     // ell c^2 sqrt(1+r tau^2)
  res.scalar = lhs - rhs;
  res.scalar_rel =
      std::abs(res.scalar) / std::max(std::abs(lhs) + std::abs(rhs), 1e-300);

  CMat m(3, 3);
  m(0, 0) = 1.0;
  m(0, 2) = c;
  m(1, 0) = xi.xi_p;
  m(1, 1) = tau * sg;
  m(2, 1) = kI * c;  // i E1 - tau Hc3
  m(2, 2) = -kI * tau * xi.xi_v;
  res.det3 = densenum::lu_det(m);
  res.det3_rel = std::abs(res.det3) / std::max(hadamard_bound(m), 1e-300);
  return res;
}

CaseBResult caseB_eval(Cx y, const FamilyState& fs,
                       const DispersionParams& dp) {
  const Cx tau = densenum::principal_sqrt(y);
  const XiRoots xi = xi_roots(tau, dp);
  const double sg = momentum_scale(fs);

  CaseBResult res;
  const Cx lhs = -y * xi.xi_v;  // y sqrt(1+y)
  const Cx rhs =
      -dp.ell * (fs.E1 * fs.E1 - fs.Hc2 * fs.Hc2 * (1.0 + y)) * xi.xi_p;
  res.g = lhs - rhs;
  res.g_rel =
      std::abs(res.g) / std::max(std::abs(lhs) + std::abs(rhs), 1e-300);

  // unknowns (q, v1, E1, E2, E3, Hc2)
  CMat m(6, 6);
  m(0, 0) = 1.0;
  m(0, 2) = fs.E1;
  m(0, 5) = -fs.Hc2;
  m(1, 1) = kI * fs.E1;
  m(1, 3) = tau;
  m(2, 1) = fs.Hc2;
  m(2, 4) = 1.0;
  m(3, 0) = xi.xi_p;
  m(3, 1) = tau * sg;
  m(4, 4) = xi.xi_v;
  m(4, 5) = tau;
  m(5, 2) = -xi.xi_v;
  m(5, 3) = kI;
  res.det6 = densenum::lu_det(m);
  res.det6_rel = std::abs(res.det6) / std::max(hadamard_bound(m), 1e-300);
  return res;
}

ModeRoot make_root(Cx tau, const FamilyState& fs, const DispersionParams& dp,
                   bool case_a) {
  ModeRoot root;
  root.tau = tau;
  const XiRoots xi = xi_roots(tau, dp);
  root.xi_p = xi.xi_p;
  root.xi_v = xi.xi_v;
  root.branch_ok = xi.re_xi_p_negative && xi.re_xi_v_negative;
  if (case_a) {
    const CaseAResult r = caseA_eval(tau, fs, dp);
    root.residual = std::abs(r.scalar);
    root.det_rel = r.det3_rel;
  } else {
    const CaseBResult r = caseB_eval(tau * tau, fs, dp);
    root.residual = std::abs(r.g);
    root.det_rel = r.det6_rel;
  }
  return root;
}

void sort_and_dedupe(std::vector<ModeRoot>& roots) {
  std::sort(roots.begin(), roots.end(), [](const ModeRoot& a,
                                           const ModeRoot& b) {
    if (a.tau.real() != b.tau.real()) return a.tau.real() < b.tau.real();
    return a.tau.imag() < b.tau.imag();
  });
  std::vector<ModeRoot> out;
  for (const ModeRoot& r : roots) {
    bool dup = false;
    for (const ModeRoot& kept : out) {
      if (std::abs(r.tau - kept.tau) <= 1e-6 * (1.0 + std::abs(r.tau))) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(r);
  }
  roots.swap(out);
}

} // namespace

FamilyState project_family(const InterfaceBaseState& base) {
  if (std::fabs(base.kappa) > 0.05) {
    throw OutOfFamily("interface speed " + std::to_string(base.kappa) +
                      " is outside the continuation range |kappa| <= 0.05");
  }
  if (base.plasma.u[1] != 0.0) throw OutOfFamily("u2 != 0");
  if (base.plasma.H[0] != 0.0) throw OutOfFamily("H1 != 0");
  if (base.plasma.H[1] != 0.0) throw OutOfFamily("H2 != 0");
  if (base.vacuum.Hc[0] != 0.0) throw OutOfFamily("Hc1 != 0");
  const double v1 = base.derived.v[0];
  if (std::fabs(v1 - base.kappa) > 1e-12 * (1.0 + std::fabs(base.kappa))) {
    throw OutOfFamily("v1 does not equal the interface speed");
  }
  const double e2 = base.kappa * base.vacuum.Hc[2];
  const double e3 = -base.kappa * base.vacuum.Hc[1];
  const double escale = 1.0 + std::fabs(e2) + std::fabs(e3);
  if (std::fabs(base.vacuum.E[1] - e2) > 1e-12 * escale ||
      std::fabs(base.vacuum.E[2] - e3) > 1e-12 * escale) {
    throw OutOfFamily("tangential electric field violates the jump relations");
  }

  FamilyState fs;
  fs.eos = base.eos;
  fs.plasma = base.plasma;
  fs.plasma.u[0] = 0.0;  // kappa = 0 projection
  fs.derived = derive_plasma(fs.eos, fs.plasma);
  fs.Hc2 = base.vacuum.Hc[1];
  fs.Hc3 = base.vacuum.Hc[2];
  fs.E1 = base.vacuum.E[0];
  fs.kappa = base.kappa;
  fs.continuation = base.kappa != 0.0;
  return fs;
}

DispersionParams dispersion_params(const InterfaceBaseState& base) {
  const FamilyState fs = project_family(base);
  const DerivedPlasma& d = fs.derived;
  const double v3 = d.v[2];
  const double h3 = fs.plasma.H[2];
  const double g2 = d.gamma * d.gamma;

  DispersionParams dp;
  dp.w2 = 1.0 - v3 * v3 * d.cs2;
  dp.m = h3 / std::sqrt(d.a2 * d.rho);
  dp.r = dp.w2 * (g2 + dp.m * dp.m * d.cs2) /
         (d.cs2 * (1.0 + dp.m * dp.m * dp.w2));
  dp.ell = 1.0 / momentum_scale(fs);
  if (!(dp.w2 > 0.0)) throw InvalidBaseState("w^2 <= 0 on a family state");
  if (!(dp.ell > 0.0)) throw InvalidBaseState("ell <= 0 on a family state");
  if (!(dp.r > 1.0)) throw InvalidBaseState("r <= 1 on a family state");
  return dp;
}

XiRoots xi_roots(Cx tau, const DispersionParams& dp) {
  XiRoots xi;
  xi.xi_p = -densenum::principal_sqrt(1.0 + dp.r * tau * tau);
  xi.xi_v = -densenum::principal_sqrt(1.0 + tau * tau);
  xi.re_xi_p_negative = xi.xi_p.real() < 0.0;
  xi.re_xi_v_negative = xi.xi_v.real() < 0.0;
  return xi;
}

std::complex<double> plasma_dispersion_det(Cx tau, Cx xi,
                                           const InterfaceBaseState& base) {
  const FamilyState fs = project_family(base);
  const PlasmaSymbols ps = assemble_plasma_symbols(fs.derived);
  CMat m(7, 7);  // entropy row and column masked off
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      m(i, j) = tau * ps.A0(i, j) + xi * ps.A1(i, j) + kI * ps.A2(i, j);
  return densenum::lu_det(m);
}

std::complex<double> vacuum_dispersion_det(Cx tau, Cx xi) {
  const VacuumSymbols& vs = maxwell_symbols();
  CMat m(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) m(i, j) = -xi * vs.B1(i, j) + kI * vs.B2(i, j);
    m(i, i) += tau;
  }
  return densenum::lu_det(m);
}

CaseAResult lopatinski_caseA(Cx tau, const InterfaceBaseState& base) {
  const FamilyState fs = project_family(base);
  if (fs.Hc2 != 0.0) {
    throw OutOfFamily("Hc2 != 0: not the parallel-field case");
  }
  return caseA_eval(tau, fs, dispersion_params(base));
}

CaseBResult lopatinski_caseB(Cx y, const InterfaceBaseState& base) {
  const FamilyState fs = project_family(base);
  if (fs.Hc3 != 0.0) throw OutOfFamily("Hc3 != 0: not the crossed-field case");
  if (fs.plasma.H[2] == 0.0 || fs.Hc2 == 0.0) {
    throw OutOfFamily("H3 * Hc2 == 0: crossed-field case needs both");
  }
  return caseB_eval(y, fs, dispersion_params(base));
}

ModeClassification classify_modes(const InterfaceBaseState& base,
                                  const ScanSpec& scan) {
  const FamilyState fs = project_family(base);

  ModeClassification mc;
  mc.continuation = fs.continuation;
  mc.note =
      "purely 1D perturbations (no tangential wave vector) carry no normal "
      "electric field and stay neutral; the scan covers the oblique "
      "tangential wave vector (1, 0)";

  const bool case_a = fs.Hc2 == 0.0;
  const bool case_b =
      !case_a && fs.Hc3 == 0.0 && fs.plasma.H[2] != 0.0;
  if (!case_a && !case_b) {
    mc.verdict = "degenerate_out_of_family";
    return mc;
  }

  const DispersionParams dp = dispersion_params(base);
  std::vector<ModeRoot> roots;

  if (case_a) {
    mc.family = "caseA_parallel_Hc_zero";
    const auto f = [&](Cx tau) { return caseA_eval(tau, fs, dp).scalar; };
    densenum::RootOptions opt;
    opt.f_tol = 1e-12;
    opt.max_iter = 80;
    const int n = std::max(2, scan.seeds);
    for (int i = 0; i < n; ++i) {
      const double re = scan.re_max * static_cast<double>(i + 1) / n;
      for (int j = 0; j < n; ++j) {
        const double im =
            -scan.im_max + 2.0 * scan.im_max * static_cast<double>(j) / (n - 1);
        try {
          const auto found = densenum::complex_newton(f, {re, im}, opt);
          if (found.root.real() <= scan.min_re) continue;
          if (found.root.real() > scan.re_max + 1.0 ||
              std::fabs(found.root.imag()) > scan.im_max + 1.0) {
            continue;  // polished outside the search box
          }
          const ModeRoot root = make_root(found.root, fs, dp, true);
          if (root.residual <= scan.root_tol && root.branch_ok) {
            roots.push_back(root);
          }
        } catch (const densenum::NewtonDiverged&) {
        } catch (const densenum::BranchCut&) {
        }
      }
    }
    sort_and_dedupe(roots);
    mc.verdict = roots.empty() ? "weakly_stable" : "unstable";
  } else {
    mc.family = "caseB_Hc2_only";
    const auto g = [&](double y) { return caseB_eval(y, fs, dp).g.real(); };
    const double e1sq = fs.E1 * fs.E1;
    const double hc2sq = fs.Hc2 * fs.Hc2;
    if (e1sq > hc2sq) {
      const double ystar = e1sq / hc2sq - 1.0;
      if (!(g(0.0) < 0.0) || !(g(ystar) > 0.0)) {
        throw densenum::NoBracket(
            "crossed-field bracket (0, y*) failed its sign check");
      }
      densenum::RootOptions opt;
      opt.width_tol = 1e-15 * (1.0 + ystar);
      const auto found = densenum::real_bisect(g, 0.0, ystar, opt);
      const double y = found.root.real();
      roots.push_back(make_root(std::sqrt(y), fs, dp, false));
      mc.verdict = "unstable";
    } else {
      // E1^2 <= Hc2^2 makes G(y) >= y sqrt(1+y) > 0 for y > 0, so a real
      // scan cannot find growth; complex roots are not excluded, hence
      // "scan-neutral" rather than "stable".
      const double ymax = scan.re_max * scan.re_max;
      const int n = 2000;
      double yprev = 0.0;
      double gprev = g(0.0);
      for (int i = 1; i <= n; ++i) {
        const double y = ymax * static_cast<double>(i) / n;
        const double gy = g(y);
        if ((gprev < 0.0) != (gy < 0.0) && gprev != 0.0) {
          const auto found = densenum::real_bisect(g, yprev, y);
          const double yr = found.root.real();
          if (yr > scan.min_re * scan.min_re) {
            roots.push_back(make_root(std::sqrt(yr), fs, dp, false));
          }
        }
        yprev = y;
        gprev = gy;
      }
      sort_and_dedupe(roots);
      mc.verdict = roots.empty() ? "scan-neutral" : "unstable";
    }
  }

  mc.roots = std::move(roots);
  return mc;
}

} // namespace rvac

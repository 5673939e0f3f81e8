#include "rvac/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "rvac/boundary.hpp"
#include "rvac/densenum.hpp"
#include "rvac/modes.hpp"
#include "rvac/symbols.hpp"

namespace rvac {

namespace {

constexpr int kZU[3] = {0, 14, 28};  // dtU, d2U, d3U offsets in Z
constexpr int kZV[3] = {8, 22, 36};  // dtV, d2V, d3V offsets in Z

// A linear form on Z with an optional coupling to the source term F.
struct ZForm {
  Vec z = Vec(42, 0.0);
  Vec f = Vec(8, 0.0);
  bool has_f = false;
};

// k = 1 -> d2, k = 2 -> d3
ZForm tan_u(const Vec& w, int k) {
  ZForm a;
  for (int i = 0; i < 8; ++i) a.z[kZU[k] + i] = w[i];
  return a;
}

ZForm tan_v(const Vec& w, int k) {
  ZForm a;
  for (int i = 0; i < 6; ++i) a.z[kZV[k] + i] = w[i];
  return a;
}

ZForm d1_vacuum(const NormalRecovery& nr, const Vec& w) {
  ZForm a;
  for (int i = 0; i < 6; ++i) {
    if (w[i] == 0.0) continue;
    for (int blk = 0; blk < 3; ++blk)
      for (int j = 0; j < 6; ++j)
        a.z[kZV[blk] + j] += w[i] * nr.vacuum_map(i, 6 * blk + j);
  }
  return a;
}

ZForm d1_v1(const NormalRecovery& nr) {
  ZForm a;
  for (int blk = 0; blk < 3; ++blk)
    for (int j = 0; j < 8; ++j)
      a.z[kZU[blk] + j] = nr.plasma_map(0, 8 * blk + j);
  for (int j = 0; j < 8; ++j) a.f[j] = nr.plasma_map(0, 24 + j);
  a.has_f = true;
  return a;
}

ZForm d1_H1(const NormalRecovery& nr) {
  ZForm a;
  for (int j = 0; j < 8; ++j) {
    a.z[kZU[1] + j] = nr.h_map[j];
    a.z[kZU[2] + j] = nr.h_map[8 + j];
  }
  return a;
}

struct Accum {
  Mat Qraw{42, 42};
  Mat Craw{42, 8};

  void add(double w, const ZForm& a, const ZForm& b) {
    if (w == 0.0) return;
    for (int i = 0; i < 42; ++i) {
      const double ai = a.z[i];
      if (ai == 0.0) continue;
      const double wai = w * ai;
      for (int j = 0; j < 42; ++j) {
        const double bj = b.z[j];
        if (bj != 0.0) Qraw(i, j) += wai * bj;
      }
      if (b.has_f)
        for (int j = 0; j < 8; ++j)
          if (b.f[j] != 0.0) Craw(i, j) += wai * b.f[j];
    }
    if (a.has_f) {
      for (int j = 0; j < 42; ++j) {
        const double bj = b.z[j];
        if (bj == 0.0) continue;
        for (int i = 0; i < 8; ++i)
          if (a.f[i] != 0.0) Craw(j, i) += w * bj * a.f[i];
      }
    }
  }
};

// One boundary product c * f * d_k(gfield)|_0 converted to the volume form
// c * { d_k(f) d_1(gfield) - d_1(f) d_k(gfield) }.
struct FField {
  ZForm tan[3];  // index 1, 2 used
  ZForm d1;
};

void emit(Accum& acc, double c, const FField& f, int k,
          const NormalRecovery& nr, const Vec& gform) {
  acc.add(c, f.tan[k], d1_vacuum(nr, gform));
  acc.add(-c, f.d1, tan_v(gform, k));
}

Mat afrak_matrix(const InterfaceBaseState& base) {
  const PlasmaSymbols ps = assemble_plasma_symbols(base.derived);
  const SecondarySymmetrizer sec = secondary_symmetrizer(base.derived.v);
  const double gi = 1.0 / base.derived.gamma;
  Mat m(42, 42);
  for (int blk = 0; blk < 3; ++blk) {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        m(kZU[blk] + i, kZU[blk] + j) = gi * ps.A0(i, j);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        m(kZV[blk] + i, kZV[blk] + j) = sec.Bc0(i, j);
  }
  return m;
}

Vec unit6(int i) {
  Vec w(6, 0.0);
  w[i] = 1.0;
  return w;
}

}  // namespace

PhiElimination phi_elimination(const InterfaceBaseState& base) {
  const double D = front_symbol_gap(base);
  if (D == 0.0) {
    throw FrontSymbolDegenerate(
        "tangential magnetic fields are parallel (D = 0)");
  }
  PhiElimination pe;
  pe.D = D;
  const V3& H = base.plasma.H;
  const V3& Hc = base.vacuum.Hc;
  pe.a1[0] = Hc[2] / D;
  pe.a2[0] = -H[2] / D;
  pe.a1[1] = -Hc[1] / D;
  pe.a2[1] = H[1] / D;
  const V3& v = base.derived.v;
  pe.a01 = -v[1] * pe.a1[0] - v[2] * pe.a1[1];
  pe.a02 = -v[1] * pe.a2[0] - v[2] * pe.a2[1];
  return pe;
}

StabilityMatrices assemble_Q(const InterfaceBaseState& base,
                             AssemblyOrder order) {
  if (!(base.kappa < 0.0)) {
    throw InvalidBaseState("interface speed must be negative, got " +
                           std::to_string(base.kappa));
  }
  const AdmissibilityReport rep = check_hyperbolic(base.eos, base.plasma);
  if (!rep.hyperbolic) throw InvalidBaseState("base state is not hyperbolic");

  const PhiElimination pe = phi_elimination(base);
  const NormalRecovery nr = normal_recovery(base);
  const double kap = base.kappa;

  FField v1, H1, Hc1;
  for (int k = 1; k < 3; ++k) {
    v1.tan[k] = tan_u(vN_form(base), k);
    Vec e4(8, 0.0);
    e4[4] = 1.0;
    H1.tan[k] = tan_u(e4, k);
    Hc1.tan[k] = tan_v(unit6(0), k);
  }
  v1.d1 = d1_v1(nr);
  H1.d1 = d1_H1(nr);
  Hc1.d1 = d1_vacuum(nr, unit6(0));

  const Vec e1form = unit6(3);  // E1
  // dtE1 = d2(Hc3 - kap*E2) - d3(Hc2 + kap*E3)
  Vec g2 = unit6(2);
  g2[4] = -kap;
  Vec g3 = unit6(1);
  g3[5] = kap;

  const FField* fs[3] = {&H1, &Hc1, &v1};
  const double fc[3] = {pe.a01, pe.a02, 1.0};

  Accum acc;
  if (order == AssemblyOrder::GroupedFirst) {
    emit(acc, pe.a1[0], H1, 1, nr, e1form);
    emit(acc, pe.a2[0], Hc1, 1, nr, e1form);
    emit(acc, pe.a1[1], H1, 2, nr, e1form);
    emit(acc, pe.a2[1], Hc1, 2, nr, e1form);
    for (int i = 0; i < 3; ++i) {
      emit(acc, fc[i], *fs[i], 1, nr, g2);
      emit(acc, -fc[i], *fs[i], 2, nr, g3);
    }
  } else {
    // flatten to elementary field components, then order by
    // (component, direction, field)
    struct Term {
      int comp;
      int k;
      int fidx;
      double c;
    };
    std::vector<Term> terms;
    terms.push_back({3, 1, 0, pe.a1[0]});
    terms.push_back({3, 1, 1, pe.a2[0]});
    terms.push_back({3, 2, 0, pe.a1[1]});
    terms.push_back({3, 2, 1, pe.a2[1]});
    for (int i = 0; i < 3; ++i) {
      terms.push_back({2, 1, i, fc[i]});          // Hc3
      terms.push_back({4, 1, i, -kap * fc[i]});   // E2
      terms.push_back({1, 2, i, -fc[i]});         // Hc2
      terms.push_back({5, 2, i, -kap * fc[i]});   // E3
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) {
                       if (a.comp != b.comp) return a.comp < b.comp;
                       if (a.k != b.k) return a.k < b.k;
                       return a.fidx < b.fidx;
                     });
    for (const Term& t : terms)
      emit(acc, t.c, *fs[t.fidx], t.k, nr, unit6(t.comp));
  }

  StabilityMatrices sm{afrak_matrix(base), Mat(42, 42), Mat(42, 8),
                       mu_hat(base)};
  for (int i = 0; i < 42; ++i)
    for (int j = 0; j < 42; ++j)
      sm.Q(i, j) = acc.Qraw(i, j) + acc.Qraw(j, i);
  for (int i = 0; i < 42; ++i)
    for (int j = 0; j < 8; ++j) sm.Q1(i, j) = 2.0 * sm.muhat * acc.Craw(i, j);
  return sm;
}

StabilityVerdict check_condition_122(const InterfaceBaseState& base,
                                     std::optional<double> epsilon) {
  const StabilityMatrices sm = assemble_Q(base);

  StabilityVerdict v;
  v.muhat = sm.muhat;
  v.D = front_symbol_gap(base);
  v.epsilon = epsilon.value_or(default_epsilon(base));
  v.ellipticity_ok = std::fabs(v.D) >= v.epsilon;

  const Mat M = sm.Afrak + sm.muhat * sm.Q;
  v.condition122 = densenum::cholesky_pd(M).pd;
  v.min_eig = densenum::sym_eigen(M).eigenvalues.front();

  const auto gen = densenum::sym_eigen_general(sm.Q, sm.Afrak);
  const double lmin = gen.eigenvalues.front();
  const double lmax = gen.eigenvalues.back();
  const double tol =
      1e-12 * std::max(1.0, std::max(std::fabs(lmin), std::fabs(lmax)));
  const double inf = std::numeric_limits<double>::infinity();
  v.mu_lo = lmax > tol ? -1.0 / lmax : -inf;
  v.mu_hi = lmin < -tol ? -1.0 / lmin : inf;

  v.sufficient_stable = v.condition122 && v.ellipticity_ok;
  return v;
}

long sweep_size(const SweepGrid& grid) {
  if (grid.axes.empty()) return 0;
  long n = 1;
  for (const SweepAxis& ax : grid.axes) n *= std::max(1, ax.steps);
  return n;
}

std::vector<double> sweep_point(const SweepGrid& grid, long idx) {
  std::vector<double> vals(grid.axes.size(), 0.0);
  long rem = idx;
  for (int a = static_cast<int>(grid.axes.size()) - 1; a >= 0; --a) {
    const SweepAxis& ax = grid.axes[a];
    const int steps = std::max(1, ax.steps);
    const long i = rem % steps;
    rem /= steps;
    vals[a] = steps == 1
                  ? ax.lo
                  : ax.lo + (ax.hi - ax.lo) * static_cast<double>(i) /
                                static_cast<double>(steps - 1);
  }
  return vals;
}

BaseParams apply_axes(const SweepGrid& grid, const std::vector<double>& vals) {
  BaseParams bp = grid.base;
  for (size_t a = 0; a < grid.axes.size(); ++a) {
    const std::string& n = grid.axes[a].name;
    const double x = vals[a];
    if (n == "p")
      bp.p = x;
    else if (n == "S")
      bp.S = x;
    else if (n == "u2")
      bp.u2 = x;
    else if (n == "u3")
      bp.u3 = x;
    else if (n == "H2")
      bp.H2 = x;
    else if (n == "H3")
      bp.H3 = x;
    else if (n == "Hc2")
      bp.Hc2 = x;
    else if (n == "Hc3")
      bp.Hc3 = x;
    else if (n == "E1")
      bp.E1 = x;
    else if (n == "kappa")
      bp.kappa = x;
    else
      throw std::invalid_argument("unknown sweep axis: " + n);
  }
  return bp;
}

namespace {

SweepRow eval_sweep_row(const SweepGrid& grid, long idx) {
  SweepRow r;
  r.idx = idx;
  r.params = sweep_point(grid, idx);

  InterfaceBaseState base;
  try {
    base = make_base_state(grid.eos, apply_axes(grid, r.params),
                           BasePurpose::Stability);
  } catch (const std::exception&) {
    r.err = "invalid_base";
    return r;
  }
  r.hyperbolic = check_hyperbolic(grid.eos, base.plasma).hyperbolic;
  r.D = front_symbol_gap(base);
  r.mu_hat = mu_hat(base);
  if (!r.hyperbolic) {
    r.err = "not_hyperbolic";
    return r;
  }
  try {
    const StabilityVerdict v = check_condition_122(base);
    r.min_eig = v.min_eig;
    r.cond122 = v.condition122;
  } catch (const FrontSymbolDegenerate&) {
    r.err = "front_degenerate";
    return r;
  } catch (const SingularBoundaryMatrix&) {
    r.err = "singular_boundary";
    return r;
  } catch (const std::exception&) {
    r.err = "stability_failed";
    return r;
  }
  try {
    const ModeClassification mc = classify_modes(base);
    r.mode_verdict = mc.verdict;
    if (mc.continuation) r.mode_verdict += "+continuation";
  } catch (const OutOfFamily&) {
    // point is not in a closed-form mode family; leave verdict empty
  } catch (const std::exception&) {
    r.mode_verdict = "mode_error";
  }
  return r;
}

}  // namespace

std::vector<SweepRow> sweep_stability(const SweepGrid& grid, int threads) {
  const long n = sweep_size(grid);
  std::vector<SweepRow> rows(static_cast<size_t>(n));
  if (threads <= 1) {
    for (long i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = eval_sweep_row(grid, i);
    return rows;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= n) break;
      rows[static_cast<size_t>(i)] = eval_sweep_row(grid, i);
    }
  };
  std::vector<std::thread> pool;
  const int nt = std::min<long>(threads, n);
  pool.reserve(static_cast<size_t>(nt));
  for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

}  // namespace rvac

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvac/mat.hpp"
#include "rvac/state.hpp"

namespace rvac {

struct FrontSymbolDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundary-trace elimination of the front perturbation:
//   d2phi = a1[0]*H1 + a2[0]*Hc1,
//   d3phi = a1[1]*H1 + a2[1]*Hc1,
//   dtphi = a01*H1 + a02*Hc1 + v1.
struct PhiElimination {
  double a1[2];
  double a2[2];
  double a01;
  double a02;
  double D;  // Hhat2*Hchat3 - Hhat3*Hchat2
};

PhiElimination phi_elimination(const InterfaceBaseState& base);

// Two equivalent accumulation orders for the volume reduction; used to
// cross-check the bookkeeping.  GroupedFirst keeps the combined fields of
// the dtE1 rewrite through the integration by parts; ExpandedFirst flattens
// every term to elementary field components first.
enum class AssemblyOrder { GroupedFirst, ExpandedFirst };

// Quadratic forms of the first-order energy balance on
// Z = (dtU, dtV, d2U, d2V, d3U, d3V), dim 42.
struct StabilityMatrices {
  Mat Afrak;    // 42x42 block diagonal, positive definite when hyperbolic
  Mat Q;        // 42x42 symmetric, independent of muhat
  Mat Q1;       // 42x8 coupling of the source term F, proportional to muhat
  double muhat; // E1 + v2*Hc3 - v3*Hc2 at the base state
};

StabilityMatrices assemble_Q(const InterfaceBaseState& base,
                             AssemblyOrder order = AssemblyOrder::GroupedFirst);

struct StabilityVerdict {
  bool condition122 = false;  // Afrak + muhat*Q positive definite
  double min_eig = 0.0;       // smallest eigenvalue of Afrak + muhat*Q
  double mu_lo = 0.0;         // interval of s with Afrak + s*Q > 0;
  double mu_hi = 0.0;         // +/-infinity when unbounded
  bool ellipticity_ok = false;  // |D| >= epsilon
  bool sufficient_stable = false;
  double muhat = 0.0;
  double D = 0.0;
  double epsilon = 0.0;
};

StabilityVerdict check_condition_122(
    const InterfaceBaseState& base,
    std::optional<double> epsilon = std::nullopt);

struct SweepAxis {
  std::string name;  // one of p,S,u2,u3,H2,H3,Hc2,Hc3,E1,kappa
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;
};

struct SweepGrid {
  Eos eos;
  BaseParams base;
  std::vector<SweepAxis> axes;
};

struct SweepRow {
  long idx = 0;
  std::vector<double> params;
  bool hyperbolic = false;
  double D = 0.0;
  double mu_hat = 0.0;
  double min_eig = 0.0;
  bool cond122 = false;
  std::string mode_verdict;  // empty unless the point matches a mode family
  std::string err;           // empty on success
};

// Row-major evaluation of the grid; failures are recorded per row.
std::vector<SweepRow> sweep_stability(const SweepGrid& grid, int threads = 1);

// Grid point count and per-point parameter values (row-major, last axis
// fastest).
long sweep_size(const SweepGrid& grid);
std::vector<double> sweep_point(const SweepGrid& grid, long idx);
BaseParams apply_axes(const SweepGrid& grid, const std::vector<double>& vals);

}  // namespace rvac

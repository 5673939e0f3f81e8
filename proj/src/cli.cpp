#include "rvac/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rvac/boundary.hpp"
#include "rvac/config.hpp"
#include "rvac/densenum.hpp"
#include "rvac/modes.hpp"
#include "rvac/output.hpp"
#include "rvac/stability.hpp"
#include "rvac/state.hpp"
#include "rvac/symbols.hpp"

namespace rvac {
namespace {

constexpr const char kVersion[] = "0.1.0";

struct Opts {
  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
  int threads = 1;
};

bool use_color() {
  static const bool on =
      ::isatty(2) != 0 && std::getenv("RVAC_NO_COLOR") == nullptr;
  return on;
}

const char* c_good() { return use_color() ? "\x1b[32m" : ""; }
const char* c_bad() { return use_color() ? "\x1b[31m" : ""; }
const char* c_off() { return use_color() ? "\x1b[0m" : ""; }

void note(const std::string& line) {
  std::fprintf(stderr, "%s\n", line.c_str());
}

std::string meta_line(const RunConfig& cfg) {
  return std::string("# rvac ") + kVersion + " config " + config_hash(cfg) +
         "\n";
}

// Single-document commands print to stdout unless --out names a directory.
void emit(const Opts& o, const std::string& filename,
          const std::string& content) {
  if (o.out_dir.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    write_file(o.out_dir + "/" + filename, content);
  }
}

// The admissibility check accepts states the strict base-state builder
// would reject; resolve u1 = kappa * Gamma here without further validation.
PlasmaState plasma_from_params(const BaseParams& bp) {
  PlasmaState st;
  st.p = bp.p;
  st.S = bp.S;
  double u1 = bp.u1;
  if (std::isnan(u1)) {
    const double den = 1.0 - bp.kappa * bp.kappa;
    const double tang = 1.0 + bp.u2 * bp.u2 + bp.u3 * bp.u3;
    u1 = den > 0.0 ? bp.kappa * std::sqrt(tang / den)
                   : std::numeric_limits<double>::quiet_NaN();
  }
  st.u = {u1, bp.u2, bp.u3};
  st.H = {0.0, bp.H2, bp.H3};
  return st;
}

InterfaceBaseState resolve_base(const RunConfig& cfg) {
  const BasePurpose purpose = cfg.base.kappa <= -cfg.base.delta
                                  ? BasePurpose::Stability
                                  : BasePurpose::Modes;
  return make_base_state(cfg.eos, cfg.base, purpose);
}

int cmd_check(const RunConfig& cfg, const Opts& o) {
  const AdmissibilityReport rep = check_hyperbolic(cfg.eos, plasma_from_params(cfg.base));
  std::ostringstream js;
  js << "{\n"
     << "  \"rho_positive\": " << json_bool(rep.rho_positive) << ",\n"
     << "  \"pressure_slope_positive\": "
     << json_bool(rep.pressure_slope_positive) << ",\n"
     << "  \"causal\": " << json_bool(rep.causal) << ",\n"
     << "  \"subluminal\": " << json_bool(rep.subluminal) << ",\n"
     << "  \"a0_positive_definite\": " << json_bool(rep.a0_positive_definite)
     << ",\n"
     << "  \"hyperbolic\": " << json_bool(rep.hyperbolic) << ",\n"
     << "  \"rho\": " << json_num(rep.rho) << ",\n"
     << "  \"cs2\": " << json_num(rep.cs2) << ",\n"
     << "  \"v_norm\": " << json_num(rep.v_norm) << "\n"
     << "}\n";
  emit(o, "check.json", js.str());
  if (rep.hyperbolic) {
    note(std::string("check: ") + c_good() + "hyperbolic" + c_off());
  } else {
    note(std::string("check: ") + c_bad() + "not hyperbolic" + c_off());
  }
  return 0;
}

int cmd_boundary(const RunConfig& cfg, const Opts& o) {
  const InterfaceBaseState base = resolve_base(cfg);
  const BoundarySpectrum sp = vacuum_boundary_eigen(base.kappa, 0.0, 0.0);
  const BoundarySymbols bs = boundary_symbols(base);

  const densenum::EigenResult eig = densenum::sym_eigen(bs.A1hat);
  double amax = 1.0;
  for (double l : eig.eigenvalues) amax = std::max(amax, std::fabs(l));
  const double tol = 1e-10 * amax;
  int n_pos = 0, n_neg = 0, n_zero = 0;
  for (double l : eig.eigenvalues) {
    if (l > tol) {
      ++n_pos;
    } else if (l < -tol) {
      ++n_neg;
    } else {
      ++n_zero;
    }
  }

  std::ostringstream js;
  js << "{\n  \"lambdas\": [";
  for (int i = 0; i < 6; ++i)
    js << (i ? ", " : "") << json_num(sp.lambdas[i]);
  js << "],\n"
     << "  \"regime\": \""
     << (sp.regime == Regime::Expansion ? "expansion" : "shrinkage")
     << "\",\n"
     << "  \"n_incoming_plasma\": " << sp.n_incoming_plasma << ",\n"
     << "  \"n_incoming_vacuum\": " << sp.n_incoming_vacuum << ",\n"
     << "  \"det_B1hat\": " << json_num(densenum::lu_det(bs.B1hat)) << ",\n"
     << "  \"A1hat_signature\": {\"positive\": " << n_pos
     << ", \"negative\": " << n_neg << ", \"zero\": " << n_zero << "}\n"
     << "}\n";
  emit(o, "boundary.json", js.str());
  note("boundary: " +
       std::string(sp.regime == Regime::Expansion ? "expansion" : "shrinkage") +
       ", incoming plasma " + std::to_string(sp.n_incoming_plasma) +
       ", vacuum " + std::to_string(sp.n_incoming_vacuum));
  return 0;
}

int cmd_matrices(const RunConfig& cfg, const Opts& o) {
  const InterfaceBaseState base = resolve_base(cfg);
  const PlasmaSymbols ps = assemble_plasma_symbols(base.derived);
  const VacuumSymbols& vs = maxwell_symbols();
  const SecondarySymmetrizer sec = secondary_symmetrizer(base.derived.v);
  const BoundarySymbols bs = boundary_symbols(base);

  const std::pair<const char*, const Mat*> items[] = {
      {"A0", &ps.A0},          {"A1", &ps.A1},
      {"A2", &ps.A2},          {"A3", &ps.A3},
      {"B1", &vs.B1},          {"B2", &vs.B2},
      {"B3", &vs.B3},          {"Bc0", &sec.Bc0},
      {"Bc1", &sec.Bc1},       {"Bc2", &sec.Bc2},
      {"Bc3", &sec.Bc3},       {"K1", &sec.K1},
      {"K2", &sec.K2},         {"K3", &sec.K3},
      {"A1hat", &bs.A1hat},    {"B1hat", &bs.B1hat},
      {"Bc1hat", &bs.Bc1hat},
  };
  const Mat G1 = assemble_G(base.derived, 1);
  const Mat G2 = assemble_G(base.derived, 2);
  const Mat G3 = assemble_G(base.derived, 3);

  const std::string meta = meta_line(cfg);
  int count = 0;
  auto put = [&](const char* name, const Mat& m) {
    emit(o, std::string(name) + ".csv", meta + dump_matrix(name, m));
    ++count;
  };
  for (int i = 0; i < 4; ++i) put(items[i].first, *items[i].second);
  put("G1", G1);
  put("G2", G2);
  put("G3", G3);
  for (int i = 4; i < 17; ++i) put(items[i].first, *items[i].second);

  if (o.out_dir.empty()) {
    note("matrices: printed " + std::to_string(count) + " symbols");
  } else {
    note("matrices: wrote " + std::to_string(count) + " files to " +
         o.out_dir);
  }
  return 0;
}

int cmd_stability(const RunConfig& cfg, const Opts& o) {
  const InterfaceBaseState base =
      make_base_state(cfg.eos, cfg.base, BasePurpose::Stability);
  const StabilityVerdict v = check_condition_122(base, cfg.epsilon);

  std::ostringstream js;
  js << "{\n"
     << "  \"cond122\": " << json_bool(v.condition122) << ",\n"
     << "  \"min_eig\": " << json_num(v.min_eig) << ",\n"
     << "  \"mu_interval\": [" << json_num(v.mu_lo) << ", "
     << json_num(v.mu_hi) << "],\n"
     << "  \"ellipticity_ok\": " << json_bool(v.ellipticity_ok) << ",\n"
     << "  \"sufficient_stable\": " << json_bool(v.sufficient_stable) << "\n"
     << "}\n";
  emit(o, "stability.json", js.str());
  if (!o.out_dir.empty()) {
    const StabilityMatrices sm = assemble_Q(base);
    const std::string meta = meta_line(cfg);
    write_file(o.out_dir + "/Afrak.csv", meta + dump_matrix("Afrak", sm.Afrak));
    write_file(o.out_dir + "/Q.csv", meta + dump_matrix("Q", sm.Q));
    write_file(o.out_dir + "/Q1.csv", meta + dump_matrix("Q1", sm.Q1));
  }
  if (v.sufficient_stable) {
    note(std::string("stability: ") + c_good() + "sufficient_stable" +
         c_off());
  } else {
    note(std::string("stability: ") + c_bad() + "not sufficient" + c_off() +
         " (cond122=" + (v.condition122 ? "true" : "false") +
         ", ellipticity_ok=" + (v.ellipticity_ok ? "true" : "false") + ")");
  }
  return 0;
}

int cmd_modes(const RunConfig& cfg, const Opts& o) {
  const InterfaceBaseState base = resolve_base(cfg);
  const ModeClassification mc = classify_modes(base);

  std::ostringstream js;
  js << "{\n"
     << "  \"classification\": \"" << json_escape(mc.verdict) << "\",\n"
     << "  \"family\": \"" << json_escape(mc.family) << "\",\n"
     << "  \"continuation\": " << json_bool(mc.continuation) << ",\n"
     << "  \"roots\": [";
  for (size_t i = 0; i < mc.roots.size(); ++i) {
    const ModeRoot& r = mc.roots[i];
    js << (i ? "," : "") << "\n    {\"tau\": " << json_complex(r.tau)
       << ", \"xi_p\": " << json_complex(r.xi_p)
       << ", \"xi_v\": " << json_complex(r.xi_v)
       << ", \"residual\": " << json_num(r.residual)
       << ", \"det_rel\": " << json_num(r.det_rel)
       << ", \"branch_ok\": " << json_bool(r.branch_ok) << "}";
  }
  if (!mc.roots.empty()) js << "\n  ";
  js << "],\n"
     << "  \"note\": \"" << json_escape(mc.note) << "\"\n"
     << "}\n";
  emit(o, "modes.json", js.str());
  const bool bad = mc.verdict.rfind("unstable", 0) == 0;
  note(std::string("modes: ") + (bad ? c_bad() : c_good()) + mc.verdict +
       c_off() + " (" + std::to_string(mc.roots.size()) + " roots)");
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const Opts& o) {
  const SweepGrid grid = sweep_grid(cfg);
  const std::vector<SweepRow> rows = sweep_stability(grid, o.threads);

  std::ostringstream os;
  long n_err = 0;
  if (o.format == "csv") {
    os << meta_line(cfg);
    os << "idx";
    for (const SweepAxis& ax : grid.axes) os << "," << ax.name;
    os << ",hyperbolic,D,mu_hat,min_eig,cond122,mode_verdict,err\n";
    for (const SweepRow& r : rows) {
      os << r.idx;
      for (double v : r.params) os << "," << fmt_g17(v);
      os << "," << (r.hyperbolic ? 1 : 0);
      const bool invalid = r.err == "invalid_base";
      os << "," << (invalid ? "" : fmt_g17(r.D));
      os << "," << (invalid ? "" : fmt_g17(r.mu_hat));
      os << "," << (r.err.empty() ? fmt_g17(r.min_eig) : "");
      os << "," << (r.cond122 ? 1 : 0);
      os << "," << r.mode_verdict << "," << r.err << "\n";
      if (!r.err.empty()) ++n_err;
    }
  } else {
    os << "{\"rvac\": \"" << kVersion << "\", \"config\": \""
       << config_hash(cfg) << "\"}\n";
    for (const SweepRow& r : rows) {
      os << "{\"idx\": " << r.idx << ", \"params\": {";
      for (size_t k = 0; k < grid.axes.size(); ++k) {
        os << (k ? ", " : "") << "\"" << json_escape(grid.axes[k].name)
           << "\": " << json_num(r.params[k]);
      }
      const bool invalid = r.err == "invalid_base";
      os << "}, \"hyperbolic\": " << json_bool(r.hyperbolic);
      os << ", \"D\": " << (invalid ? "null" : json_num(r.D));
      os << ", \"mu_hat\": " << (invalid ? "null" : json_num(r.mu_hat));
      os << ", \"min_eig\": "
         << (r.err.empty() ? json_num(r.min_eig) : std::string("null"));
      os << ", \"cond122\": " << json_bool(r.cond122);
      os << ", \"mode_verdict\": \"" << json_escape(r.mode_verdict) << "\"";
      os << ", \"err\": \"" << json_escape(r.err) << "\"}\n";
      if (!r.err.empty()) ++n_err;
    }
  }
  emit(o, o.format == "csv" ? "sweep.csv" : "sweep.jsonl", os.str());
  note("sweep: " + std::to_string(rows.size()) + " rows, " +
       std::to_string(n_err) + " errors");
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"linear interface stability of relativistic plasma bounded by vacuum"};
  app.name("rvac");
  app.set_version_flag("--version", std::string("rvac ") + kVersion);
  app.require_subcommand(1);

  Opts opts;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_dir,
                    "output directory (default: stdout)");
  };
  CLI::App* s_check =
      app.add_subcommand("check", "plasma state admissibility report");
  CLI::App* s_matrices =
      app.add_subcommand("matrices", "dump the symmetric system symbols");
  CLI::App* s_boundary = app.add_subcommand(
      "boundary", "characteristic structure at the interface");
  CLI::App* s_stability = app.add_subcommand(
      "stability", "sufficient stability test of the energy balance");
  CLI::App* s_modes =
      app.add_subcommand("modes", "normal-mode classification");
  CLI::App* s_sweep =
      app.add_subcommand("sweep", "stability verdicts over a parameter grid");
  for (CLI::App* sub :
       {s_check, s_matrices, s_boundary, s_stability, s_modes, s_sweep}) {
    add_common(sub);
  }
  s_sweep->add_option("--format", opts.format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  s_sweep->add_option("--threads", opts.threads, "worker thread count")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const RunConfig cfg = parse_config(read_file(opts.config_path));
    if (!opts.out_dir.empty())
      std::filesystem::create_directories(opts.out_dir);
    if (app.got_subcommand(s_check)) return cmd_check(cfg, opts);
    if (app.got_subcommand(s_matrices)) return cmd_matrices(cfg, opts);
    if (app.got_subcommand(s_boundary)) return cmd_boundary(cfg, opts);
    if (app.got_subcommand(s_stability)) return cmd_stability(cfg, opts);
    if (app.got_subcommand(s_modes)) return cmd_modes(cfg, opts);
    if (app.got_subcommand(s_sweep)) return cmd_sweep(cfg, opts);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "%serror:%s %s\n", c_bad(), c_off(), e.what());
    return 1;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "%serror:%s %s\n", c_bad(), c_off(), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%serror:%s %s\n", c_bad(), c_off(), e.what());
    return 1;
  }
  return 1;
}

}  // namespace rvac

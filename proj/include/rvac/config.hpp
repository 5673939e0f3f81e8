#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvac/stability.hpp"
#include "rvac/state.hpp"

namespace rvac {

struct ConfigIssue {
  int line = 0;     // 1-based source line; 0 when not tied to a line
  std::string key;  // dotted path such as "plasma.u[0]"; may be empty
  std::string message;
};

// Syntax problems, reported all at once with line numbers.
struct ParseError : std::runtime_error {
  std::vector<ConfigIssue> issues;
  explicit ParseError(std::vector<ConfigIssue> v);
};

// Semantic problems, reported all at once with key paths.
struct ValidationError : std::runtime_error {
  std::vector<ConfigIssue> issues;
  explicit ValidationError(std::vector<ConfigIssue> v);
};

// INI sections: [eos] gamma_ad, entropy_scale; [plasma] p, u, H, S;
// [vacuum] Hc, E1; [interface] kappa, epsilon, delta; [sweep] axis lines
// "name, min, max, steps" (repeatable). Vectors are comma lists; u[0] and
// epsilon accept the token "auto".
struct RunConfig {
  Eos eos;
  BaseParams base;
  std::optional<double> epsilon;  // ellipticity margin; auto when unset
  std::vector<SweepAxis> axes;
};

bool operator==(const RunConfig& a, const RunConfig& b);

RunConfig parse_config(const std::string& text);

// Canonical form: fixed section and key order, 17-digit floats. Satisfies
// parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& c);

// FNV-1a 64-bit over the canonical form, as 16 hex digits.
std::string config_hash(const RunConfig& c);

SweepGrid sweep_grid(const RunConfig& c);

} // namespace rvac

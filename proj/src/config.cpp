#include "rvac/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "rvac/output.hpp"

namespace rvac {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size() && std::isfinite(out);
}

bool parse_int(const std::string& s, int& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) return false;
  if (v < -1000000000L || v > 1000000000L) return false;
  out = static_cast<int>(v);
  return true;
}

std::string issues_text(const char* kind,
                        const std::vector<ConfigIssue>& issues) {
  std::ostringstream os;
  os << kind << ": " << issues.size()
     << (issues.size() == 1 ? " issue" : " issues");
  for (const ConfigIssue& is : issues) {
    os << "\n  ";
    if (is.line > 0) os << "line " << is.line << ": ";
    if (!is.key.empty()) os << is.key << ": ";
    os << is.message;
  }
  return os.str();
}

const std::set<std::string>& axis_names() {
  static const std::set<std::string> names = {
      "p", "S", "u2", "u3", "H2", "H3", "Hc2", "Hc3", "E1", "kappa"};
  return names;
}

struct KeyRef {
  std::string value;
  int line = 0;
};

} // namespace

ParseError::ParseError(std::vector<ConfigIssue> v)
    : std::runtime_error(issues_text("config parse failed", v)),
      issues(std::move(v)) {}

ValidationError::ValidationError(std::vector<ConfigIssue> v)
    : std::runtime_error(issues_text("config validation failed", v)),
      issues(std::move(v)) {}

RunConfig parse_config(const std::string& text) {
  static const std::map<std::string, std::set<std::string>> known = {
      {"eos", {"gamma_ad", "entropy_scale"}},
      {"plasma", {"p", "u", "H", "S"}},
      {"vacuum", {"Hc", "E1"}},
      {"interface", {"kappa", "epsilon", "delta"}},
      {"sweep", {"axis"}},
  };

  std::vector<ConfigIssue> parse_issues;
  std::map<std::string, KeyRef> kv;  // "section.key" -> raw value
  std::vector<KeyRef> axis_lines;

  std::string section;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;

    if (line[0] == '[') {
      if (line.back() != ']') {
        parse_issues.push_back({lineno, "", "unterminated section header"});
        continue;
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (known.find(name) == known.end()) {
        parse_issues.push_back({lineno, name, "unknown section"});
        section.clear();
        continue;
      }
      section = name;
      continue;
    }

    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      parse_issues.push_back({lineno, "", "expected `key = value`"});
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      parse_issues.push_back({lineno, key, "key outside any section"});
      continue;
    }
    const auto& keys = known.at(section);
    if (keys.find(key) == keys.end()) {
      parse_issues.push_back(
          {lineno, section + "." + key, "unknown key in [" + section + "]"});
      continue;
    }
    if (section == "sweep" && key == "axis") {
      axis_lines.push_back({value, lineno});
      continue;
    }
    const std::string path = section + "." + key;
    if (kv.count(path)) {
      parse_issues.push_back({lineno, path, "duplicate key"});
      continue;
    }
    kv[path] = {value, lineno};
  }

  RunConfig cfg;

  auto take_scalar = [&](const std::string& path, double& out) {
    const auto it = kv.find(path);
    if (it == kv.end()) return;
    double v;
    if (!parse_double(it->second.value, v)) {
      parse_issues.push_back({it->second.line, path,
                              "not a finite number: `" + it->second.value +
                                  "`"});
      return;
    }
    out = v;
  };

  auto take_vec3 = [&](const std::string& path, double out[3],
                       bool allow_auto0, bool& auto0) {
    const auto it = kv.find(path);
    if (it == kv.end()) return;
    const auto parts = split(it->second.value, ',');
    if (parts.size() != 3) {
      parse_issues.push_back(
          {it->second.line, path, "expected 3 comma-separated components"});
      return;
    }
    for (int i = 0; i < 3; ++i) {
      const std::string comp = trim(parts[static_cast<size_t>(i)]);
      if (i == 0 && allow_auto0 && comp == "auto") {
        auto0 = true;
        continue;
      }
      double v;
      if (!parse_double(comp, v)) {
        parse_issues.push_back({it->second.line,
                                path + "[" + std::to_string(i) + "]",
                                "not a finite number: `" + comp + "`"});
        continue;
      }
      out[i] = v;
    }
  };

  take_scalar("eos.gamma_ad", cfg.eos.gamma_ad);
  take_scalar("eos.entropy_scale", cfg.eos.entropy_scale);
  take_scalar("plasma.p", cfg.base.p);
  take_scalar("plasma.S", cfg.base.S);
  take_scalar("vacuum.E1", cfg.base.E1);
  take_scalar("interface.kappa", cfg.base.kappa);
  take_scalar("interface.delta", cfg.base.delta);

  double u[3] = {0.0, 0.0, 0.0};
  bool u_auto = false;
  if (kv.count("plasma.u")) {
    take_vec3("plasma.u", u, true, u_auto);
    cfg.base.u1 = u_auto ? std::nan("") : u[0];
    cfg.base.u2 = u[1];
    cfg.base.u3 = u[2];
  }

  double h[3] = {0.0, 0.0, 0.0};
  double hc[3] = {0.0, 0.0, 0.0};
  bool no_auto = false;
  take_vec3("plasma.H", h, false, no_auto);
  take_vec3("vacuum.Hc", hc, false, no_auto);
  cfg.base.H2 = h[1];
  cfg.base.H3 = h[2];
  cfg.base.Hc2 = hc[1];
  cfg.base.Hc3 = hc[2];

  if (const auto it = kv.find("interface.epsilon"); it != kv.end()) {
    if (trim(it->second.value) == "auto") {
      cfg.epsilon.reset();
    } else {
      double v;
      if (!parse_double(it->second.value, v)) {
        parse_issues.push_back({it->second.line, "interface.epsilon",
                                "not a finite number or `auto`"});
      } else {
        cfg.epsilon = v;
      }
    }
  }

  for (const KeyRef& ax : axis_lines) {
    const auto parts = split(ax.value, ',');
    if (parts.size() != 4) {
      parse_issues.push_back(
          {ax.line, "sweep.axis", "expected `name, min, max, steps`"});
      continue;
    }
    SweepAxis a;
    a.name = trim(parts[0]);
    bool ok = true;
    if (!parse_double(parts[1], a.lo)) {
      parse_issues.push_back(
          {ax.line, "sweep.axis", "min is not a finite number"});
      ok = false;
    }
    if (!parse_double(parts[2], a.hi)) {
      parse_issues.push_back(
          {ax.line, "sweep.axis", "max is not a finite number"});
      ok = false;
    }
    if (!parse_int(parts[3], a.steps)) {
      parse_issues.push_back({ax.line, "sweep.axis", "steps is not an integer"});
      ok = false;
    }
    if (ok) cfg.axes.push_back(a);
  }

  if (!parse_issues.empty()) throw ParseError(std::move(parse_issues));

  std::vector<ConfigIssue> val;
  if (!(cfg.eos.gamma_ad > 1.0)) {
    val.push_back({0, "eos.gamma_ad", "must exceed 1"});
  }
  if (!(cfg.eos.entropy_scale > 0.0)) {
    val.push_back({0, "eos.entropy_scale", "must be positive"});
  }
  if (!(cfg.base.p > 0.0)) {
    val.push_back({0, "plasma.p", "must be positive"});
  }
  if (h[0] != 0.0) {
    val.push_back({0, "plasma.H[0]", "must be 0 on the interface"});
  }
  if (hc[0] != 0.0) {
    val.push_back({0, "vacuum.Hc[0]", "must be 0 on the interface"});
  }
  if (cfg.base.kappa > 0.0) {
    val.push_back(
        {0, "interface.kappa",
         "must be negative (the vacuum side expands into the plasma)"});
  }
  if (!(cfg.base.kappa > -1.0)) {
    val.push_back({0, "interface.kappa", "must exceed -1"});
  }
  if (!(cfg.base.delta > 0.0)) {
    val.push_back({0, "interface.delta", "must be positive"});
  }
  if (cfg.epsilon && !(*cfg.epsilon > 0.0)) {
    val.push_back({0, "interface.epsilon", "must be positive"});
  }
  std::set<std::string> seen_axes;
  for (size_t i = 0; i < cfg.axes.size(); ++i) {
    const SweepAxis& a = cfg.axes[i];
    const std::string path = "sweep.axis[" + std::to_string(i) + "]";
    if (!axis_names().count(a.name)) {
      val.push_back({0, path + ".name", "unknown axis `" + a.name + "`"});
    } else if (!seen_axes.insert(a.name).second) {
      val.push_back({0, path + ".name", "duplicate axis `" + a.name + "`"});
    }
    if (a.steps < 1) val.push_back({0, path + ".steps", "must be >= 1"});
  }
  if (!val.empty()) throw ValidationError(std::move(val));

  return cfg;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  const auto same = [](double x, double y) {
    return (std::isnan(x) && std::isnan(y)) || x == y;
  };
  if (a.eos.gamma_ad != b.eos.gamma_ad) return false;
  if (a.eos.entropy_scale != b.eos.entropy_scale) return false;
  const BaseParams& p = a.base;
  const BaseParams& q = b.base;
  if (p.p != q.p || !same(p.u1, q.u1) || p.u2 != q.u2 || p.u3 != q.u3 ||
      p.S != q.S || p.H2 != q.H2 || p.H3 != q.H3 || p.Hc2 != q.Hc2 ||
      p.Hc3 != q.Hc3 || p.E1 != q.E1 || p.kappa != q.kappa ||
      p.delta != q.delta) {
    return false;
  }
  if (a.epsilon.has_value() != b.epsilon.has_value()) return false;
  if (a.epsilon && *a.epsilon != *b.epsilon) return false;
  if (a.axes.size() != b.axes.size()) return false;
  for (size_t i = 0; i < a.axes.size(); ++i) {
    const SweepAxis& x = a.axes[i];
    const SweepAxis& y = b.axes[i];
    if (x.name != y.name || x.lo != y.lo || x.hi != y.hi || x.steps != y.steps)
      return false;
  }
  return true;
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[eos]\n";
  os << "gamma_ad = " << fmt_g17(c.eos.gamma_ad) << "\n";
  os << "entropy_scale = " << fmt_g17(c.eos.entropy_scale) << "\n";
  os << "\n[plasma]\n";
  os << "p = " << fmt_g17(c.base.p) << "\n";
  os << "u = " << (std::isnan(c.base.u1) ? std::string("auto")
                                         : fmt_g17(c.base.u1))
     << ", " << fmt_g17(c.base.u2) << ", " << fmt_g17(c.base.u3) << "\n";
  os << "H = 0, " << fmt_g17(c.base.H2) << ", " << fmt_g17(c.base.H3) << "\n";
  os << "S = " << fmt_g17(c.base.S) << "\n";
  os << "\n[vacuum]\n";
  os << "Hc = 0, " << fmt_g17(c.base.Hc2) << ", " << fmt_g17(c.base.Hc3)
     << "\n";
  os << "E1 = " << fmt_g17(c.base.E1) << "\n";
  os << "\n[interface]\n";
  os << "kappa = " << fmt_g17(c.base.kappa) << "\n";
  os << "epsilon = " << (c.epsilon ? fmt_g17(*c.epsilon) : std::string("auto"))
     << "\n";
  os << "delta = " << fmt_g17(c.base.delta) << "\n";
  if (!c.axes.empty()) {
    os << "\n[sweep]\n";
    for (const SweepAxis& a : c.axes) {
      os << "axis = " << a.name << ", " << fmt_g17(a.lo) << ", "
         << fmt_g17(a.hi) << ", " << a.steps << "\n";
    }
  }
  return os.str();
}

std::string config_hash(const RunConfig& c) {
  const std::string s = serialize_config(c);
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char byte : s) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

SweepGrid sweep_grid(const RunConfig& c) {
  SweepGrid g;
  g.eos = c.eos;
  g.base = c.base;
  g.axes = c.axes;
  return g;
}

} // namespace rvac

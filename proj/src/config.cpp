#include "mmdg/config.hpp"

#include <charconv>
#include <fstream>

#include "mmdg/error.hpp"
#include "mmdg/time_integration.hpp"

namespace mmdg {

Method parse_method(std::string_view name) {
  if (name == "direct") return Method::direct;
  if (name == "mm") return Method::mm;
  if (name == "euler") return Method::euler;
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::mm: return "mm";
    case Method::euler: return "euler";
  }
  return "?";
}

RunConfig default_config(Problem p) {
  const auto d = problem_defaults(p);
  RunConfig c;
  c.problem = p;
  c.nu = d.nu;
  c.nx = d.nx;
  c.nv = d.nv;
  c.degree = d.degree;
  c.x_min = d.x_min;
  c.x_max = d.x_max;
  c.v_min = d.v_min;
  c.v_max = d.v_max;
  c.dt = d.dt;
  c.t_end = d.t_end;
  c.tableau = d.tableau;
  c.field_free = d.field_free;
  c.transport = d.transport;
  // the space-homogeneous run cleans the initial micro part only
  if (p == Problem::relaxation) c.clean = false;
  if (p == Problem::landau) {
    c.fit_t_a = 5.0;
    c.fit_t_b = 45.0;
  }
  return c;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(std::string_view key, std::string_view v) {
  double x = 0.0;
  const auto s = trim(v);
  try {
    std::size_t used = 0;
    x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" + s + "'");
  }
  return x;
}

int to_int(std::string_view key, std::string_view v) {
  const auto s = trim(v);
  int x = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + s + "'");
  return x;
}

}  // namespace

bool parse_switch(std::string_view value) {
  const auto v = trim(value);
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ConfigError("expected on/off, got '" + v + "'");
}

void apply_setting(RunConfig& c, std::string_view key_in, std::string_view value) {
  std::string key = trim(key_in);
  for (auto& ch : key)
    if (ch == '-') ch = '_';
  const auto v = trim(value);
  if (key == "problem") c.problem = parse_problem(v);
  else if (key == "method") c.method = parse_method(v);
  else if (key == "nu") c.nu = to_double(key, v);
  else if (key == "nx") c.nx = to_int(key, v);
  else if (key == "nv") c.nv = to_int(key, v);
  else if (key == "p") c.degree = to_int(key, v);
  else if (key == "xmin" || key == "x_min") c.x_min = to_double(key, v);
  else if (key == "xmax" || key == "x_max") c.x_max = to_double(key, v);
  else if (key == "vmin" || key == "v_min") c.v_min = to_double(key, v);
  else if (key == "vmax" || key == "v_max") c.v_max = to_double(key, v);
  else if (key == "cfl") c.cfl = to_double(key, v);
  else if (key == "dt") c.dt = to_double(key, v);
  else if (key == "t_end") c.t_end = to_double(key, v);
  else if (key == "tableau") c.tableau = v;
  else if (key == "clean") c.clean = parse_switch(v);
  else if (key == "extended_cells") c.extended_cells = parse_switch(v);
  else if (key == "inconsistent_quadrature") c.inconsistent_quadrature = parse_switch(v);
  else if (key == "field_free") c.field_free = parse_switch(v);
  else if (key == "transport") c.transport = parse_switch(v);
  else if (key == "out") c.out_dir = v;
  else if (key == "snapshot_every") c.snapshot_every = to_int(key, v);
  else if (key == "record_every") c.record_every = to_int(key, v);
  else if (key == "fit_t_a") c.fit_t_a = to_double(key, v);
  else if (key == "fit_t_b") c.fit_t_b = to_double(key, v);
  else if (key == "serial") c.serial = parse_switch(v);
  else throw ConfigError("unknown setting '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(cfg, std::string_view(line).substr(0, eq),
                  std::string_view(line).substr(eq + 1));
  }
}

void validate(RunConfig& c) {
  if (c.degree < 2) throw ConfigError("polynomial degree p must be >= 2");
  if (c.nx < 1 || c.nv < 2) throw ConfigError("need nx >= 1 and nv >= 2");
  if (!(c.t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(c.cfl > 0.0)) throw ConfigError("cfl must be positive");
  if (c.dt < 0.0) throw ConfigError("dt must be >= 0");
  if (c.nu < 0.0) throw ConfigError("nu must be >= 0");
  if (c.snapshot_every < 0 || c.record_every < 1)
    throw ConfigError("snapshot_every must be >= 0 and record_every >= 1");
  if (c.problem == Problem::riemann) c.field_free = true;
  const auto tab = tableau(c.tableau);  // throws on unknown names
  if (c.nu > 0.0 && c.method != Method::euler && !(tab.gsa && tab.has_implicit_part()))
    throw ConfigError("collisional runs (nu > 0) need a GSA IMEX tableau, not '" +
                      c.tableau + "'");
}

}  // namespace mmdg

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>

#include "spinwit/sweep.hpp"

namespace spinwit {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string canonical_key(std::string key) {
  key = trim(key);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) {
    return ch == '-' ? '_' : static_cast<char>(std::tolower(ch));
  });
  if (key == "b") return "field";
  if (key == "a") return "dm";
  if (key == "c") return "cvec";
  return key;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

int parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'");
  }
  return value;
}

const std::set<std::string> kCommonKeys = {"model", "n",    "boundary", "beta_min",
                                           "beta_max", "steps", "grid", "out"};

std::set<std::string> family_keys(ModelFamily family) {
  switch (family) {
  case ModelFamily::heisenberg: return {"j"};
  case ModelFamily::ising: return {"j", "lambda"};
  case ModelFamily::xyz: return {"jx", "jy", "jz", "jxy", "jyx", "h", "theta"};
  case ModelFamily::general: return {"jx", "jy", "jz", "field", "dm", "cvec", "theta"};
  }
  return {};
}

} // namespace

double parse_real(const std::string& key, const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '+') {
    t.erase(0, 1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
  }
  return value;
}

Eigen::Vector3d parse_triple(const std::string& key, const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3) {
    throw ConfigError("key '" + key + "': expected three comma-separated numbers, got '" + text +
                      "'");
  }
  return {parse_real(key, parts[0]), parse_real(key, parts[1]), parse_real(key, parts[2])};
}

std::vector<double> parse_real_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) {
    return out;
  }
  for (const auto& part : split_commas(text)) {
    out.push_back(parse_real(key, part));
  }
  return out;
}

CrossingQuantity parse_quantity(const std::string& text) {
  const std::string t = trim(text);
  if (t == "negativity") return CrossingQuantity::negativity;
  if (t == "r" || t == "r_expect") return CrossingQuantity::r_expect;
  if (t == "w" || t == "w_value") return CrossingQuantity::w_value;
  throw ConfigError("quantity must be negativity, r or w; got '" + text + "'");
}

InverseTemperature parse_beta(const std::string& text) {
  if (trim(text) == "ground") {
    return InverseTemperature::ground();
  }
  const double beta = parse_real("beta", text);
  if (!std::isfinite(beta) || beta < 0.0) {
    throw ConfigError("beta must be >= 0 or 'ground', got '" + text + "'");
  }
  return InverseTemperature(beta);
}

ConfigValues parse_config(std::istream& in) {
  ConfigValues values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = canonical_key(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    }
    values[key] = trim(line.substr(eq + 1));
  }
  return values;
}

ConfigValues read_config_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError("cannot read config file " + path);
  }
  ConfigValues raw = parse_config(file);
  return raw;
}

SweepConfig config_from_values(const ConfigValues& input, std::span<const std::string> extra_keys) {
  ConfigValues values;
  for (const auto& [key, value] : input) {
    values[canonical_key(key)] = value;
  }

  SweepConfig cfg;
  ModelSpec& spec = cfg.model;
  if (auto it = values.find("model"); it != values.end()) {
    const std::string family = trim(it->second);
    if (family == "heisenberg") spec.family = ModelFamily::heisenberg;
    else if (family == "ising") spec.family = ModelFamily::ising;
    else if (family == "xyz") spec.family = ModelFamily::xyz;
    else if (family == "general") spec.family = ModelFamily::general;
    else throw ConfigError("model must be heisenberg, ising, xyz or general; got '" + family + "'");
  }

  const std::set<std::string> allowed_family = family_keys(spec.family);
  for (const auto& [key, value] : values) {
    const bool extra = std::find(extra_keys.begin(), extra_keys.end(), key) != extra_keys.end();
    if (kCommonKeys.count(key) || allowed_family.count(key) || extra) {
      continue;
    }
    bool known = false;
    for (auto f : {ModelFamily::heisenberg, ModelFamily::ising, ModelFamily::xyz,
                   ModelFamily::general}) {
      known = known || family_keys(f).count(key);
    }
    throw ConfigError(known ? "key '" + key + "' does not apply to model " +
                                  std::string(to_string(spec.family))
                            : "unknown key '" + key + "'");
  }

  auto real = [&](const char* key, double& target) {
    if (auto it = values.find(key); it != values.end()) target = parse_real(key, it->second);
  };
  auto triple = [&](const char* key, Eigen::Vector3d& target) {
    if (auto it = values.find(key); it != values.end()) target = parse_triple(key, it->second);
  };

  if (auto it = values.find("n"); it != values.end()) spec.n_spins = parse_int("n", it->second);
  if (auto it = values.find("boundary"); it != values.end()) {
    const std::string b = trim(it->second);
    if (b == "periodic") spec.boundary = Boundary::periodic;
    else if (b == "open") spec.boundary = Boundary::open;
    else throw ConfigError("boundary must be periodic or open; got '" + b + "'");
  }
  real("beta_min", cfg.beta_min);
  real("beta_max", cfg.beta_max);
  if (auto it = values.find("steps"); it != values.end()) cfg.steps = parse_int("steps", it->second);
  if (auto it = values.find("grid"); it != values.end()) {
    const std::string g = trim(it->second);
    if (g == "linear") cfg.grid = BetaGrid::linear;
    else if (g == "log") cfg.grid = BetaGrid::log;
    else throw ConfigError("grid must be linear or log; got '" + g + "'");
  }
  if (auto it = values.find("out"); it != values.end()) cfg.out = trim(it->second);
  if (auto it = values.find("lambda"); it != values.end()) {
    cfg.lambdas = parse_real_list("lambda", it->second);
  }

  real("j", spec.j);
  real("jx", spec.jx);
  real("jy", spec.jy);
  real("jz", spec.jz);
  real("jxy", spec.jxy);
  real("jyx", spec.jyx);
  real("h", spec.h);
  triple("field", spec.field);
  triple("dm", spec.dm);
  triple("cvec", spec.cvec);
  if (auto it = values.find("theta"); it != values.end()) {
    spec.theta = parse_triple("theta", it->second);
  }
  for (double v : {spec.j, spec.jx, spec.jy, spec.jz, spec.jxy, spec.jyx, spec.h}) {
    if (!std::isfinite(v)) throw ConfigError("model parameters must be finite");
  }
  for (const auto* v : {&spec.field, &spec.dm, &spec.cvec}) {
    if (!v->allFinite()) throw ConfigError("model parameters must be finite");
  }
  if (spec.theta && !spec.theta->allFinite()) throw ConfigError("theta must be finite");

  cfg.validate();
  return cfg;
}

} // namespace spinwit

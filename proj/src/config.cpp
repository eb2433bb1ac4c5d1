#include "spinfr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "spinfr/errors.hpp"

namespace spinfr {

namespace {

struct Entry {
  std::string value;
  std::size_t line;
};

using Section = std::map<std::string, Entry>;
using Document = std::map<std::string, Section>;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw config_error("config line " + std::to_string(line) + ": " + msg);
}

Document tokenize(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // strip comments ('#' or ';' outside quotes)
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (!quoted && (line[i] == '#' || line[i] == ';')) {
        line = line.substr(0, i);
        break;
      }
    }
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(line_no, "unterminated section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) fail(line_no, "empty section name");
      doc.try_emplace(section);
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    if (section.empty()) fail(line_no, "key outside of any [section]");
    const std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    auto [it, inserted] = doc[section].emplace(key, Entry{value, line_no});
    if (!inserted)
      fail(line_no, "duplicate key '" + section + "." + key + "' (first seen on line " +
                        std::to_string(it->second.line) + ")");
  }
  return doc;
}

class Reader {
 public:
  explicit Reader(Document doc) : doc_(std::move(doc)) {}

  bool has(const std::string& section, const std::string& key) const {
    const auto s = doc_.find(section);
    return s != doc_.end() && s->second.count(key) > 0;
  }

  double number(const std::string& section, const std::string& key, double fallback) {
    const Entry* e = fetch(section, key);
    if (e == nullptr) return fallback;
    try {
      std::size_t pos = 0;
      const double v = std::stod(e->value, &pos);
      if (pos != e->value.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      fail(e->line, "key '" + section + "." + key + "': not a number: '" + e->value + "'");
    }
  }

  int integer(const std::string& section, const std::string& key, int fallback) {
    const Entry* e = fetch(section, key);
    if (e == nullptr) return fallback;
    const double v = number(section, key, 0.0);
    consumed_.insert(section + "." + key);
    if (v != std::floor(v)) fail(e->line, "key '" + section + "." + key + "': expected integer");
    return static_cast<int>(v);
  }

  std::uint64_t uinteger(const std::string& section, const std::string& key,
                         std::uint64_t fallback) {
    const Entry* e = fetch(section, key);
    if (e == nullptr) return fallback;
    std::uint64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(e->value.data(), e->value.data() + e->value.size(), v);
    if (ec != std::errc() || ptr != e->value.data() + e->value.size())
      fail(e->line, "key '" + section + "." + key + "': expected non-negative integer");
    return v;
  }

  std::string text(const std::string& section, const std::string& key,
                   const std::string& fallback) {
    const Entry* e = fetch(section, key);
    return e == nullptr ? fallback : e->value;
  }

  std::size_t line_of(const std::string& section, const std::string& key) const {
    return doc_.at(section).at(key).line;
  }

  // every key must have been consumed by one of the accessors
  void reject_unknown() const {
    for (const auto& [section, entries] : doc_) {
      if (known_sections_.count(section) == 0)
        throw config_error("config line " + std::to_string(entries.empty() ? 0 : entries.begin()->second.line) +
                           ": unknown section [" + section + "]");
      for (const auto& [key, entry] : entries) {
        if (consumed_.count(section + "." + key) == 0)
          fail(entry.line, "unknown key '" + section + "." + key + "'");
      }
    }
  }

  void declare_section(const std::string& s) { known_sections_.insert(s); }

 private:
  const Entry* fetch(const std::string& section, const std::string& key) {
    known_sections_.insert(section);
    const auto s = doc_.find(section);
    if (s == doc_.end()) return nullptr;
    const auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    consumed_.insert(section + "." + key);
    return &k->second;
  }

  Document doc_;
  std::set<std::string> consumed_;
  std::set<std::string> known_sections_;
};

[[noreturn]] void invariant_fail(Reader& r, const std::string& section, const std::string& key,
                                 const std::string& msg) {
  if (r.has(section, key)) fail(r.line_of(section, key), msg);
  throw config_error("config: " + msg);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  Reader r(tokenize(text));
  RunConfig cfg;

  // [model]
  const std::string preset = r.text("model", "preset", "");
  if (!preset.empty() && preset != "paper")
    invariant_fail(r, "model", "preset", "unknown preset '" + preset + "' (expected \"paper\")");
  double lambda = 9.8e10, omega_p = 2.47e15, omega_e = 2.48e15;
  lambda = r.number("model", "lambda_rad_per_s", lambda);
  omega_p = r.number("model", "omega_p_rad_per_s", omega_p);
  omega_e = r.number("model", "omega_e_rad_per_s", omega_e);
  try {
    cfg.params = PhysicalParams(lambda, omega_p, omega_e);
  } catch (const std::invalid_argument& e) {
    invariant_fail(r, "model", "lambda_rad_per_s", e.what());
  }
  cfg.n_photons_total = r.number("model", "n_photons_total", preset::kPaperPhotonNumber);
  if (!(cfg.n_photons_total > 0.0))
    invariant_fail(r, "model", "n_photons_total", "photon number must be > 0");
  const double tau = r.number("model", "tau", 1.0);
  if (!(tau >= 0.0 && tau <= 1.0))
    invariant_fail(r, "model", "tau", "tau must lie in [0, 1]");
  cfg.tau = tau;
  cfg.time_s = r.number("model", "time_ps", preset::kPaperTimeSeconds * 1e12) * 1e-12;
  if (!(cfg.time_s >= 0.0)) invariant_fail(r, "model", "time_ps", "time must be >= 0");

  // [sweep]
  cfg.time_grid.start = r.number("sweep", "time_start_ps", 0.0) * 1e-12;
  cfg.time_grid.stop = r.number("sweep", "time_stop_ps", 40.0) * 1e-12;
  cfg.time_grid.steps = r.integer("sweep", "time_steps", 201);
  cfg.tau_grid.start = r.number("sweep", "tau_start", 0.0);
  cfg.tau_grid.stop = r.number("sweep", "tau_stop", 1.0);
  cfg.tau_grid.steps = r.integer("sweep", "tau_steps", 5);
  cfg.photon_grid.min = r.number("sweep", "photon_min", 1e2);
  cfg.photon_grid.max = r.number("sweep", "photon_max", 1e10);
  cfg.photon_grid.points = r.integer("sweep", "photon_points", 33);
  auto check_grid = [&](const GridSpec& g, const char* key) {
    if (g.steps < 1) invariant_fail(r, "sweep", key, "steps must be >= 1");
    if (!(g.start <= g.stop)) invariant_fail(r, "sweep", key, "grid start must be <= stop");
  };
  check_grid(cfg.time_grid, "time_steps");
  check_grid(cfg.tau_grid, "tau_steps");
  if (cfg.photon_grid.points < 1)
    invariant_fail(r, "sweep", "photon_points", "points must be >= 1");
  if (!(cfg.photon_grid.min > 0.0 && cfg.photon_grid.min <= cfg.photon_grid.max))
    invariant_fail(r, "sweep", "photon_min", "need 0 < photon_min <= photon_max");
  if (!(cfg.tau_grid.start >= 0.0 && cfg.tau_grid.stop <= 1.0))
    invariant_fail(r, "sweep", "tau_start", "tau grid must lie within [0, 1]");

  // [oracle]
  cfg.oracle.cutoff = r.integer("oracle", "cutoff", cfg.oracle.cutoff);
  if (cfg.oracle.cutoff < 1) invariant_fail(r, "oracle", "cutoff", "cutoff must be >= 1");
  cfg.oracle.photons_per_mode =
      r.number("oracle", "scaled_photons_per_mode", cfg.oracle.photons_per_mode);
  if (!(cfg.oracle.photons_per_mode >= 0.0))
    invariant_fail(r, "oracle", "scaled_photons_per_mode", "must be >= 0");
  cfg.oracle.tail_tolerance = r.number("oracle", "tail_tolerance", cfg.oracle.tail_tolerance);
  if (!(cfg.oracle.tail_tolerance > 0.0))
    invariant_fail(r, "oracle", "tail_tolerance", "must be > 0");
  cfg.oracle.max_dimension = r.integer("oracle", "max_dimension", cfg.oracle.max_dimension);
  cfg.oracle_halvings = r.integer("oracle", "halvings", cfg.oracle_halvings);
  if (cfg.oracle_halvings < 0 || cfg.oracle_halvings > 8)
    invariant_fail(r, "oracle", "halvings", "halvings must lie in [0, 8]");

  // [estimate]
  cfg.estimate.n_shots = r.integer("estimate", "n_shots", cfg.estimate.n_shots);
  if (cfg.estimate.n_shots < 2) invariant_fail(r, "estimate", "n_shots", "need >= 2 shots");
  cfg.estimate.background_sigma_rad =
      r.number("estimate", "background_sigma_rad", cfg.estimate.background_sigma_rad);
  if (!(cfg.estimate.background_sigma_rad >= 0.0))
    invariant_fail(r, "estimate", "background_sigma_rad", "must be >= 0");
  cfg.estimate.bootstrap_resamples =
      r.integer("estimate", "bootstrap_resamples", cfg.estimate.bootstrap_resamples);
  if (cfg.estimate.bootstrap_resamples < 0)
    invariant_fail(r, "estimate", "bootstrap_resamples", "must be >= 0");

  // [output]
  cfg.output_path = r.text("output", "path", "");
  cfg.seed = r.uinteger("output", "seed", 0);

  r.reject_unknown();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace spinfr

// Copyright 2026 The wigner1d Authors
// SPDX-License-Identifier: Apache-2.0

#include "wigner/io/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wigner::io {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"run", {"method", "seed", "output_dir"}},
      {"system", {"electrons", "spin", "confinement", "omega", "coulomb"}},
      {"optimizer",
       {"basis_size", "candidates", "sweeps", "exponent_min", "exponent_max", "shift_range",
        "local_fraction", "overlap_cutoff", "min_norm_ratio"}},
      {"cavity", {"omega_p", "lambda", "n_max", "tolerance", "terms_per_block"}},
      {"grid", {"points", "spacing"}},
      {"dft", {"mixing", "tolerance", "max_iterations", "mixing_retries"}},
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Line of every "section.key" so that value errors can point at the file.
std::map<std::string, int> index_lines(const std::string& text) {
  std::map<std::string, int> lines;
  std::istringstream in(text);
  std::string raw, section;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      lines.emplace(section, number);
      continue;
    }
    const auto eq = line.find('=');
    if (eq != std::string::npos) lines.emplace(section + "." + trim(line.substr(0, eq)), number);
  }
  return lines;
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::map<std::string, int> lines, std::string source)
      : tree_(tree), lines_(std::move(lines)), source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    const auto it = lines_.find(field);
    throw ConfigError(source_, it == lines_.end() ? 0 : it->second, field, message);
  }

  bool has(const std::string& field) const { return tree_.get_child_optional(field).has_value(); }
  bool has_section(const std::string& section) const {
    return tree_.get_child_optional(section).has_value();
  }

  std::string text(const std::string& field) const { return trim(tree_.get<std::string>(field)); }

  double number(const std::string& field, double fallback) const {
    if (!has(field)) return fallback;
    return parse_number(field);
  }
  double required_number(const std::string& field) const {
    if (!has(field)) fail(field, "required field is missing");
    return parse_number(field);
  }

  long long integer(const std::string& field, long long fallback) const {
    if (!has(field)) return fallback;
    const std::string s = text(field);
    long long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) fail(field, "expected an integer, got '" + s + "'");
    return v;
  }

  std::uint64_t unsigned_integer(const std::string& field) const {
    const std::string s = text(field);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) {
      fail(field, "expected a non-negative integer, got '" + s + "'");
    }
    return v;
  }

  bool boolean(const std::string& field, bool fallback) const {
    if (!has(field)) return fallback;
    const std::string s = text(field);
    if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
    if (s == "false" || s == "no" || s == "off" || s == "0") return false;
    fail(field, "expected true or false, got '" + s + "'");
  }

 private:
  double parse_number(const std::string& field) const {
    const std::string s = text(field);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
      fail(field, "expected a number, got '" + s + "'");
    }
    return v;
  }

  const pt::ptree& tree_;
  std::map<std::string, int> lines_;
  std::string source_;
};

template <typename F>
void checked(const Reader& r, const std::string& field, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const UsageError& e) {
    r.fail(field, e.what());
  }
}

}  // namespace

ConfigError::ConfigError(std::string source, int line, std::string field, const std::string& message)
    : UsageError([&] {
        std::ostringstream msg;
        msg << source;
        if (line > 0) msg << ':' << line;
        msg << ": ";
        if (!field.empty()) msg << "field '" << field << "': ";
        msg << message;
        return msg.str();
      }()),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kEcg: return "ecg";
    case Method::kDft: return "dft";
    case Method::kEcgCavity: return "ecg+cavity";
  }
  return "ecg";
}

Method method_from_string(std::string_view name) {
  if (name == "ecg") return Method::kEcg;
  if (name == "dft") return Method::kDft;
  if (name == "ecg+cavity") return Method::kEcgCavity;
  throw UsageError("unknown method '" + std::string(name) + "' (expected ecg, dft or ecg+cavity)");
}

void RunConfig::require_bound_states() const {
  if (method != Method::kDft && !(system.confinement.omega > 0.0)) {
    throw UsageError("ECG runs need a confining potential with omega > 0");
  }
}

void RunConfig::validate() const {
  system.validate();
  if ((method == Method::kEcgCavity) != system.cavity.has_value()) {
    throw UsageError("a cavity section is required for ecg+cavity runs and not allowed otherwise");
  }
  if (method != Method::kDft) optimizer.validate();
  require_bound_states();
  if (photon_tolerance < 0.0) throw UsageError("photon tolerance must be >= 0");
  if (photon_terms_per_block < 1) throw UsageError("terms per photon block must be >= 1");
  grid.validate();
  if (!(scf.mixing > 0.0 && scf.mixing <= 1.0) || !(scf.tolerance > 0.0) ||
      scf.max_iterations < 1 || scf.mixing_retries < 0) {
    throw UsageError("invalid SCF settings");
  }
  if (output_dir.empty()) throw UsageError("output directory must not be empty");
}

RunConfig parse_run_config(std::istream& in, const std::string& source) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  pt::ptree tree;
  try {
    std::istringstream stream(text);
    pt::read_ini(stream, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source, static_cast<int>(e.line()), "", e.message());
  }
  const Reader r(tree, index_lines(text), source);

  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) r.fail("." + section, "key outside of any section");
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) r.fail(section, "unknown section");
    for (const auto& [key, value] : body) {
      if (!known->second.count(key)) r.fail(section + "." + key, "unknown field");
    }
  }

  RunConfig c;
  if (r.has("run.method")) {
    checked(r, "run.method", [&] { c.method = method_from_string(r.text("run.method")); });
  }
  if (r.has("run.output_dir")) c.output_dir = r.text("run.output_dir");
  if (r.has("run.seed")) {
    c.optimizer.seed = r.unsigned_integer("run.seed");
  } else if (c.method != Method::kDft) {
    r.fail("run.seed", "a seed is mandatory for ECG runs");
  }

  auto& s = c.system;
  s.electrons = static_cast<int>(r.integer("system.electrons", 0));
  if (!r.has("system.electrons")) r.fail("system.electrons", "required field is missing");
  s.total_spin = r.required_number("system.spin");
  s.confinement.omega = r.required_number("system.omega");
  if (r.has("system.confinement")) {
    checked(r, "system.confinement",
            [&] { s.confinement.shape = confinement_from_string(r.text("system.confinement")); });
  }
  s.coulomb = r.boolean("system.coulomb", true);

  auto& o = c.optimizer;
  o.target_size = static_cast<int>(r.integer("optimizer.basis_size", o.target_size));
  o.candidates_per_step = static_cast<int>(r.integer("optimizer.candidates", o.candidates_per_step));
  o.refinement_sweeps = static_cast<int>(r.integer("optimizer.sweeps", o.refinement_sweeps));
  o.exponent_min = r.number("optimizer.exponent_min", o.exponent_min);
  o.exponent_max = r.number("optimizer.exponent_max", o.exponent_max);
  o.shift_range = r.number("optimizer.shift_range", o.shift_range);
  o.local_fraction = r.number("optimizer.local_fraction", o.local_fraction);
  o.overlap_cutoff = r.number("optimizer.overlap_cutoff", o.overlap_cutoff);
  o.min_norm_ratio = r.number("optimizer.min_norm_ratio", o.min_norm_ratio);

  if (r.has_section("cavity")) {
    CavitySpec cav;
    cav.omega_p = r.required_number("cavity.omega_p");
    cav.lambda = r.required_number("cavity.lambda");
    cav.n_max = static_cast<int>(r.integer("cavity.n_max", 10));
    c.photon_tolerance = r.number("cavity.tolerance", 0.0);
    c.photon_terms_per_block = static_cast<int>(r.integer("cavity.terms_per_block", 20));
    checked(r, "cavity", [&] { cav.validate(); });
    s.cavity = cav;
  }

  c.grid.points = static_cast<int>(r.integer("grid.points", c.grid.points));
  c.grid.spacing = r.number("grid.spacing", c.grid.spacing);
  c.scf.mixing = r.number("dft.mixing", c.scf.mixing);
  c.scf.tolerance = r.number("dft.tolerance", c.scf.tolerance);
  c.scf.max_iterations = static_cast<int>(r.integer("dft.max_iterations", c.scf.max_iterations));
  c.scf.mixing_retries = static_cast<int>(r.integer("dft.mixing_retries", c.scf.mixing_retries));

  // narrow the diagnostic to the first offending field
  SystemSpec partial;
  partial.electrons = s.electrons;
  partial.total_spin = s.electrons % 2 ? 0.5 : 0.0;
  checked(r, "system.electrons", [&] { partial.validate(); });
  partial.total_spin = s.total_spin;
  checked(r, "system.spin", [&] { partial.validate(); });
  partial.confinement = s.confinement;
  checked(r, "system.omega", [&] { partial.validate(); });
  checked(r, "system", [&] { s.validate(); });
  checked(r, "system.omega", [&] { c.require_bound_states(); });
  checked(r, "optimizer", [&] { if (c.method != Method::kDft) o.validate(); });
  checked(r, "", [&] { c.validate(); });
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "", "cannot open configuration file");
  return parse_run_config(in, path.string());
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

std::string serialize_run_config(const RunConfig& c) {
  std::ostringstream out;
  const auto& s = c.system;
  const auto& o = c.optimizer;
  out << "[run]\n"
      << "method = " << to_string(c.method) << '\n'
      << "seed = " << o.seed << '\n'
      << "output_dir = " << c.output_dir << "\n\n";
  out << "[system]\n"
      << "electrons = " << s.electrons << '\n'
      << "spin = " << format_double(s.total_spin) << '\n'
      << "confinement = " << to_string(s.confinement.shape) << '\n'
      << "omega = " << format_double(s.confinement.omega) << '\n'
      << "coulomb = " << (s.coulomb ? "true" : "false") << "\n\n";
  out << "[optimizer]\n"
      << "basis_size = " << o.target_size << '\n'
      << "candidates = " << o.candidates_per_step << '\n'
      << "sweeps = " << o.refinement_sweeps << '\n'
      << "exponent_min = " << format_double(o.exponent_min) << '\n'
      << "exponent_max = " << format_double(o.exponent_max) << '\n'
      << "shift_range = " << format_double(o.shift_range) << '\n'
      << "local_fraction = " << format_double(o.local_fraction) << '\n'
      << "overlap_cutoff = " << format_double(o.overlap_cutoff) << '\n'
      << "min_norm_ratio = " << format_double(o.min_norm_ratio) << "\n\n";
  if (s.cavity) {
    out << "[cavity]\n"
        << "omega_p = " << format_double(s.cavity->omega_p) << '\n'
        << "lambda = " << format_double(s.cavity->lambda) << '\n'
        << "n_max = " << s.cavity->n_max << '\n'
        << "tolerance = " << format_double(c.photon_tolerance) << '\n'
        << "terms_per_block = " << c.photon_terms_per_block << "\n\n";
  }
  out << "[grid]\n"
      << "points = " << c.grid.points << '\n'
      << "spacing = " << format_double(c.grid.spacing) << "\n\n";
  out << "[dft]\n"
      << "mixing = " << format_double(c.scf.mixing) << '\n'
      << "tolerance = " << format_double(c.scf.tolerance) << '\n'
      << "max_iterations = " << c.scf.max_iterations << '\n'
      << "mixing_retries = " << c.scf.mixing_retries << '\n';
  return out.str();
}

std::string config_hash(const RunConfig& config) {
  RunConfig canonical = config;
  canonical.output_dir = "-";
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_run_config(canonical)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wigner::io

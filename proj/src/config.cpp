#include "hodge/config.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T number(const std::string& key, const std::string& value, int line) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw UsageError("config line " + std::to_string(line) + ": bad value '" + value + "' for " + key);
  }
  return out;
}

}  // namespace

RunConfig parse_config(std::istream& is) {
  RunConfig cfg;
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    SolverConfig& s = cfg.solver;
    if (key == "mu") {
      s.mu = number<double>(key, value, line);
    } else if (key == "T") {
      s.T = number<double>(key, value, line);
    } else if (key == "dt") {
      s.dt = number<double>(key, value, line);
    } else if (key == "res") {
      s.res = number<int>(key, value, line);
    } else if (key == "dim") {
      s.dim = number<int>(key, value, line);
    } else if (key == "degree") {
      s.degree = number<int>(key, value, line);
    } else if (key == "m") {
      s.basis_size = number<std::size_t>(key, value, line);
    } else if (key == "scheme") {
      s.scheme = parse_scheme(value);
    } else if (key == "preset") {
      cfg.preset = value;
    } else if (key == "seed") {
      cfg.seed = number<std::uint64_t>(key, value, line);
    } else if (key == "newton.max_iter") {
      s.newton.max_iter = number<int>(key, value, line);
    } else if (key == "newton.tol") {
      s.newton.tol = number<double>(key, value, line);
    } else {
      throw UsageError("config line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  cfg.solver.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  return parse_config(in);
}

void write_config(std::ostream& os, const RunConfig& cfg) {
  const SolverConfig& s = cfg.solver;
  std::ostringstream o;
  o.precision(17);
  o << "mu = " << s.mu << "\nT = " << s.T << "\ndt = " << s.dt << "\nres = " << s.res << "\ndim = " << s.dim
    << "\ndegree = " << s.degree << "\n";
  if (s.basis_size) o << "m = " << *s.basis_size << "\n";
  o << "scheme = " << scheme_name(s.scheme) << "\npreset = " << cfg.preset << "\nseed = " << cfg.seed
    << "\nnewton.max_iter = " << s.newton.max_iter << "\nnewton.tol = " << s.newton.tol << "\n";
  os << o.str();
}

}  // namespace hodge

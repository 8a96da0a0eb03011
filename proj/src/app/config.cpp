#include "klee/app/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <type_traits>

namespace klee::app {

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ", field '" + field + "': " + message
                                  : "config field '" + field + "': " + message),
      line_(line),
      field_(std::move(field)) {}

std::string formatDouble(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> splitList(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parseDouble(const std::string& text, int line, const std::string& field) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ConfigError(line, field, "'" + text + "' is not a number");
  }
  return v;
}

long long parseInteger(const std::string& text, int line, const std::string& field) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ConfigError(line, field, "'" + text + "' is not an integer");
  }
  return v;
}

std::uint64_t parseUnsigned(const std::string& text, int line, const std::string& field) {
  if (text.empty() || text[0] == '-') throw ConfigError(line, field, "'" + text + "' is not a non-negative integer");
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (*end != '\0' || errno == ERANGE) {
    throw ConfigError(line, field, "'" + text + "' is not a non-negative integer");
  }
  return v;
}

void applyKey(RunConfig& c, const std::string& key, const std::string& value, int line) {
  if (key == "dims") {
    c.dims.clear();
    for (const auto& item : splitList(value)) c.dims.push_back(static_cast<int>(parseInteger(item, line, key)));
  } else if (key == "epsilons") {
    c.epsilons.clear();
    for (const auto& item : splitList(value)) c.epsilons.push_back(parseDouble(item, line, key));
  } else if (key == "degree") {
    c.degree = static_cast<int>(parseInteger(value, line, key));
  } else if (key == "adaptive") {
    if (value == "true") {
      c.adaptive = true;
    } else if (value == "false") {
      c.adaptive = false;
    } else {
      throw ConfigError(line, key, "'" + value + "' is not true or false");
    }
  } else if (key == "quadrature_nodes") {
    c.quadratureNodes = static_cast<int>(parseInteger(value, line, key));
  } else if (key == "check_points") {
    c.checkPoints = static_cast<int>(parseInteger(value, line, key));
  } else if (key == "mc_samples") {
    c.mcSamples = static_cast<std::size_t>(parseUnsigned(value, line, key));
  } else if (key == "seed") {
    c.seed = parseUnsigned(value, line, key);
  } else if (key == "tol_m") {
    c.tolM = parseDouble(value, line, key);
  } else if (key == "solver_tolerance") {
    c.solverTolerance = parseDouble(value, line, key);
  } else if (key == "maximizer_width") {
    c.maximizerWidth = parseDouble(value, line, key);
  } else if (key == "output_dir") {
    c.outputDir = value;
  } else if (key == "formats") {
    c.formats.clear();
    for (const auto& item : splitList(value)) c.formats.insert(item);
  } else if (key == "jobs") {
    c.jobs = static_cast<int>(parseInteger(value, line, key));
  } else {
    throw ConfigError(line, key, "unknown key");
  }
}

void validateAt(const RunConfig& c, int line, const std::string& only) {
  const auto want = [&](const char* f) { return only.empty() || only == f; };
  if (want("dims")) {
    if (c.dims.empty()) throw ConfigError(line, "dims", "at least one dimension is required");
    for (int n : c.dims) {
      if (n < 3 || n > 64) throw ConfigError(line, "dims", "dimension " + std::to_string(n) + " outside [3, 64]");
    }
  }
  if (want("epsilons")) {
    if (c.epsilons.empty()) throw ConfigError(line, "epsilons", "at least one eps is required");
    for (double e : c.epsilons) {
      if (!(e >= 0.0 && e < 1.0)) throw ConfigError(line, "epsilons", "eps " + formatDouble(e) + " outside [0, 1)");
    }
  }
  if (want("degree") && (c.degree < 2 || c.degree % 2 != 0 || c.degree > 512)) {
    throw ConfigError(line, "degree", "spectral degree must be even and in [2, 512]");
  }
  if (want("quadrature_nodes") && (c.quadratureNodes < 16 || c.quadratureNodes > 4096)) {
    throw ConfigError(line, "quadrature_nodes", "node count must lie in [16, 4096]");
  }
  if (want("check_points") && (c.checkPoints < 3 || c.checkPoints > 100001)) {
    throw ConfigError(line, "check_points", "check grid size must lie in [3, 100001]");
  }
  if (want("mc_samples") && c.mcSamples < 1000) throw ConfigError(line, "mc_samples", "need at least 1000 samples");
  if (want("tol_m") && !(c.tolM > 0.0)) throw ConfigError(line, "tol_m", "tolerance must be positive");
  if (want("solver_tolerance") && !(c.solverTolerance > 0.0)) {
    throw ConfigError(line, "solver_tolerance", "tolerance must be positive");
  }
  if (want("maximizer_width") && !(c.maximizerWidth > 0.0)) {
    throw ConfigError(line, "maximizer_width", "width must be positive");
  }
  if (want("output_dir")) {
    if (c.outputDir.empty()) throw ConfigError(line, "output_dir", "must not be empty");
    if (c.outputDir.find_first_of("#\n") != std::string::npos || trim(c.outputDir) != c.outputDir) {
      throw ConfigError(line, "output_dir", "must not contain '#', newlines or surrounding blanks");
    }
  }
  if (want("formats")) {
    for (const auto& f : c.formats) {
      if (f != "csv" && f != "json" && f != "svg") throw ConfigError(line, "formats", "unknown format '" + f + "'");
    }
  }
  if (want("jobs") && (c.jobs < 1 || c.jobs > 256)) throw ConfigError(line, "jobs", "jobs must lie in [1, 256]");
}

template <typename T>
std::string joinList(const T& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    if constexpr (std::is_same_v<typename T::value_type, double>) {
      out += formatDouble(item);
    } else if constexpr (std::is_same_v<typename T::value_type, std::string>) {
      out += item;
    } else {
      out += std::to_string(item);
    }
  }
  return out;
}

}  // namespace

RunConfig parseConfig(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineNo, line, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(lineNo, "", "missing key before '='");
    applyKey(c, key, value, lineNo);
    validateAt(c, lineNo, key);
  }
  validateConfig(c);
  return c;
}

RunConfig loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parseConfig(text.str());
}

std::string writeConfig(const RunConfig& c) {
  std::ostringstream out;
  out << "dims = " << joinList(c.dims) << "\n";
  out << "epsilons = " << joinList(c.epsilons) << "\n";
  out << "degree = " << c.degree << "\n";
  out << "adaptive = " << (c.adaptive ? "true" : "false") << "\n";
  out << "quadrature_nodes = " << c.quadratureNodes << "\n";
  out << "check_points = " << c.checkPoints << "\n";
  out << "mc_samples = " << c.mcSamples << "\n";
  out << "seed = " << c.seed << "\n";
  out << "tol_m = " << formatDouble(c.tolM) << "\n";
  out << "solver_tolerance = " << formatDouble(c.solverTolerance) << "\n";
  out << "maximizer_width = " << formatDouble(c.maximizerWidth) << "\n";
  out << "output_dir = " << c.outputDir << "\n";
  out << "formats = " << joinList(c.formats) << "\n";
  out << "jobs = " << c.jobs << "\n";
  return out.str();
}

void validateConfig(const RunConfig& config) { validateAt(config, 0, ""); }

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.dims == b.dims && a.epsilons == b.epsilons && a.degree == b.degree && a.adaptive == b.adaptive &&
         a.quadratureNodes == b.quadratureNodes && a.checkPoints == b.checkPoints && a.mcSamples == b.mcSamples &&
         a.seed == b.seed && a.tolM == b.tolM && a.solverTolerance == b.solverTolerance &&
         a.maximizerWidth == b.maximizerWidth && a.outputDir == b.outputDir && a.formats == b.formats &&
         a.jobs == b.jobs;
}

}  // namespace klee::app

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klee::app {

/// Raised for malformed or out-of-range configuration. Carries the line
/// number (0 when the value did not come from a file) and the field name.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

struct RunConfig {
  std::vector<int> dims{3, 4, 5};
  std::vector<double> epsilons{0.02, 0.05, 0.1};
  int degree = 64;
  bool adaptive = true;  // double the degree while the fit is under-resolved
  int quadratureNodes = 128;
  int checkPoints = 49;
  std::size_t mcSamples = 100000;
  std::uint64_t seed = 20100809;
  double tolM = 1e-6;            // relative to kappa_{n-1}
  double solverTolerance = 1e-13;
  double maximizerWidth = 1e-10;
  std::string outputDir = "out";
  std::set<std::string> formats{"csv", "json", "svg"};
  int jobs = 1;

  bool wants(const std::string& format) const { return formats.count(format) != 0; }
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and bad
/// values raise ConfigError with the offending line.
RunConfig parseConfig(const std::string& text);
RunConfig loadConfig(const std::string& path);

/// Serializes every field; parseConfig(writeConfig(c)) == c.
std::string writeConfig(const RunConfig& config);

/// Range checks (n >= 3, 0 <= eps < 1, even degree, m >= 16, ...).
void validateConfig(const RunConfig& config);

bool operator==(const RunConfig& a, const RunConfig& b);

/// "%.17g" formatting used by every text output.
std::string formatDouble(double value);

}  // namespace klee::app

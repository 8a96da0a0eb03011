#pragma once

#include <exception>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klee/app/config.hpp"

namespace klee::app {

enum ExitCode : int { kSuccess = 0, kCertificationFailed = 1, kUsageError = 2, kIoError = 3 };

struct Cell {
  int n;
  double eps;
};

/// Cells of the run matrix in config order (dims outer, epsilons inner).
std::vector<Cell> runMatrix(const RunConfig& config);

template <typename T>
struct CellOutcome {
  std::optional<T> value;
  std::string error;
};

/// Evaluates fn(i) for i < count on up to `jobs` threads. Results come back
/// indexed by i, so the caller writes them in a fixed order.
template <typename T>
std::vector<CellOutcome<T>> parallelMap(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn);

int cmdConstruct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmdVerify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmdPlot(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmdSweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmdSelftest(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SelftestResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Fast invariant checks across all modules.
std::vector<SelftestResult> runSelftests(const RunConfig& config);

}  // namespace klee::app

#include "klee/app/parallel.ipp"

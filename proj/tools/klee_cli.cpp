#include <iostream>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "klee/app/commands.hpp"
#include "klee/app/config.hpp"

namespace {

struct Flags {
  std::string config;
  std::vector<int> dims;
  std::vector<double> eps;
  int degree = 0;
  std::string out;
  std::uint64_t seed = 0;
  std::vector<std::string> formats;
  int jobs = 0;
};

klee::app::RunConfig resolveConfig(const Flags& f, CLI::App& app) {
  klee::app::RunConfig c = f.config.empty() ? klee::app::RunConfig{} : klee::app::loadConfig(f.config);
  if (!f.dims.empty()) c.dims = f.dims;
  if (!f.eps.empty()) c.epsilons = f.eps;
  if (app.count("--degree")) c.degree = f.degree;
  if (!f.out.empty()) c.outputDir = f.out;
  if (app.count("--seed")) c.seed = f.seed;
  if (!f.formats.empty()) c.formats = {f.formats.begin(), f.formats.end()};
  if (app.count("--jobs")) c.jobs = f.jobs;
  klee::app::validateConfig(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner section functions of bodies of revolution: builds a non-centrally-symmetric body and an "
               "origin-symmetric body with the same maximal section volumes, and certifies the result."};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--config", f.config, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--dim", f.dims, "dimension n >= 3 (repeatable)")->allow_extra_args(false);
  app.add_option("--eps", f.eps, "perturbation eps in [0, 1) (repeatable)")->allow_extra_args(false);
  app.add_option("--degree", f.degree, "spectral degree N (even)");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--seed", f.seed, "random seed for the Monte Carlo checks");
  app.add_option("--format", f.formats, "output format: csv, json or svg (repeatable)")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->allow_extra_args(false);
  app.add_option("--jobs", f.jobs, "worker threads for the run matrix");

  using Command = int (*)(const klee::app::RunConfig&, std::ostream&, std::ostream&);
  const std::vector<std::tuple<std::string, std::string, Command>> commands{
      {"construct", "write profile tables of K and L for every cell", klee::app::cmdConstruct},
      {"verify", "certify m_K = m_L, convexity and symmetry for every cell", klee::app::cmdVerify},
      {"plot", "write SVG figures for every cell", klee::app::cmdPlot},
      {"sweep", "convexity threshold of K and boundedness of the maximizer", klee::app::cmdSweep},
      {"selftest", "fast invariant checks", klee::app::cmdSelftest},
  };
  for (const auto& [name, help, fn] : commands) app.add_subcommand(name, help)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : klee::app::kUsageError;
  }

  klee::app::RunConfig config;
  try {
    config = resolveConfig(f, app);
  } catch (const klee::app::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return klee::app::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return klee::app::kIoError;
  }
  for (const auto& [name, help, fn] : commands) {
    if (app.got_subcommand(name)) return fn(config, std::cout, std::cerr);
  }
  return klee::app::kUsageError;
}

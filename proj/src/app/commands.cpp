#include "klee/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "klee/app/output.hpp"
#include "klee/app/svg.hpp"
#include "klee/constants.hpp"
#include "klee/diagnostics.hpp"

namespace klee::app {

std::vector<Cell> runMatrix(const RunConfig& config) {
  std::vector<Cell> cells;
  for (int n : config.dims) {
    for (double eps : config.epsilons) cells.push_back({n, eps});
  }
  return cells;
}

namespace {

std::string outPath(const RunConfig& config, const std::string& name) { return config.outputDir + "/" + name; }

void writeRunConfig(const RunConfig& config) { writeTextFile(outPath(config, "run_config.txt"), writeConfig(config)); }

template <typename Fn>
int guardedIo(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

std::vector<CellOutcome<VerificationReport>> verifyMatrix(const RunConfig& config) {
  const std::vector<Cell> cells = runMatrix(config);
  const VerifyConfig vc = verifyConfigFrom(config);
  return parallelMap<VerificationReport>(cells.size(), config.jobs, [&](std::size_t i) {
    return verifyCounterexample(cells[i].eps, cells[i].n, vc);
  });
}

void writeFigures(const RunConfig& config, const VerificationReport& r) {
  const std::string tag = cellTag(r.n, r.eps);
  writeTextFile(outPath(config, "fig_boundary_" + tag + ".svg"), boundaryFigure(r));
  writeTextFile(outPath(config, "fig_inner_section_" + tag + ".svg"), innerSectionFigure(r));
  writeTextFile(outPath(config, "fig_maximizer_" + tag + ".svg"), maximizerFigure(r));
}

}  // namespace

int cmdConstruct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guardedIo(err, [&]() {
    const std::vector<Cell> cells = runMatrix(config);
    const auto tables = parallelMap<ProfileTable>(cells.size(), config.jobs, [&](std::size_t i) {
      return buildProfileTable(cells[i].eps, cells[i].n, config);
    });
    writeRunConfig(config);
    std::ostringstream summary;
    summary << "n,eps,degree_used,max_m_gap,min_curvature_K,min_curvature_L,status,message\n";
    bool ok = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string tag = cellTag(cells[i].n, cells[i].eps);
      summary << cells[i].n << ',' << formatDouble(cells[i].eps) << ',';
      if (!tables[i].value) {
        ok = false;
        err << "construct " << tag << ": " << tables[i].error << "\n";
        summary << ",,,,error,\"" << tables[i].error << "\"\n";
        continue;
      }
      const ProfileTable& t = *tables[i].value;
      if (config.wants("csv")) writeTextFile(outPath(config, "profile_" + tag + ".csv"), profileCsv(t));
      if (config.wants("json")) writeTextFile(outPath(config, "profile_" + tag + ".json"), profileJson(t).dump(2) + "\n");
      double gap = 0.0;
      for (std::size_t k = 0; k < t.phi.size(); ++k) gap = std::max(gap, std::abs(t.mK[k] - t.mL[k]));
      const double minK = *std::min_element(t.curvatureK.begin(), t.curvatureK.end());
      const double minL = *std::min_element(t.curvatureL.begin(), t.curvatureL.end());
      summary << t.degreeUsed << ',' << formatDouble(gap) << ',' << formatDouble(minK) << ',' << formatDouble(minL)
              << ",ok," << t.warnings.size() << " warning(s)\n";
      for (const auto& w : t.warnings) err << "warning " << tag << ": " << w << "\n";
      out << "constructed " << tag << " (degree " << t.degreeUsed << ", max |m_K - m_L| on grid "
          << formatDouble(gap) << ")\n";
    }
    writeTextFile(outPath(config, "construct_summary.csv"), summary.str());
    return ok ? kSuccess : kCertificationFailed;
  });
}

int cmdVerify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guardedIo(err, [&]() {
    const std::vector<Cell> cells = runMatrix(config);
    const auto reports = verifyMatrix(config);
    const VerifyConfig vc = verifyConfigFrom(config);
    writeRunConfig(config);
    std::ostringstream summary;
    summary << "n,eps,passed,m_mismatch,tol_m,curvature_min_K,curvature_min_L,central_symmetry_defect_K,"
               "defect_floor,origin_symmetry_defect_L,failed_checks\n";
    out << std::left << std::setw(4) << "n" << std::setw(8) << "eps" << std::setw(7) << "pass" << std::setw(14)
        << "mMismatch" << std::setw(14) << "curvMinK" << std::setw(14) << "curvMinL" << std::setw(14) << "defectK"
        << "failed\n";
    bool all = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string tag = cellTag(cells[i].n, cells[i].eps);
      if (!reports[i].value) {
        all = false;
        err << "verify " << tag << ": " << reports[i].error << "\n";
        summary << cells[i].n << ',' << formatDouble(cells[i].eps) << ",false,,,,,,,,\"error: "
                << reports[i].error << "\"\n";
        continue;
      }
      const VerificationReport& r = *reports[i].value;
      all = all && r.passed;
      std::string failed;
      for (const auto& c : r.checks) {
        if (!c.passed) failed += (failed.empty() ? "" : ";") + c.name;
      }
      if (config.wants("json")) {
        writeTextFile(outPath(config, "report_" + tag + ".json"), reportJson(r, vc).dump(2) + "\n");
      }
      if (config.wants("svg")) writeFigures(config, r);
      summary << r.n << ',' << formatDouble(r.eps) << ',' << (r.passed ? "true" : "false") << ','
              << formatDouble(r.mMismatch) << ',' << formatDouble(r.tolM) << ',' << formatDouble(r.curvatureMinK)
              << ',' << formatDouble(r.curvatureMinL) << ',' << formatDouble(r.centralSymmetryDefectK) << ','
              << formatDouble(r.defectFloor) << ',' << formatDouble(r.originSymmetryDefectL) << ',' << failed
              << '\n';
      std::ostringstream eps;
      eps << r.eps;
      out << std::left << std::setw(4) << r.n << std::setw(8) << eps.str() << std::setw(7)
          << (r.passed ? "yes" : "NO") << std::setprecision(4) << std::setw(14) << r.mMismatch << std::setw(14)
          << r.curvatureMinK << std::setw(14) << r.curvatureMinL << std::setw(14) << r.centralSymmetryDefectK
          << (failed.empty() ? "-" : failed) << "\n";
      for (const auto& w : r.warnings) err << "warning " << tag << ": " << w << "\n";
      if (!r.error.empty()) err << "error " << tag << ": " << r.error << "\n";
    }
    if (config.wants("csv")) writeTextFile(outPath(config, "verify_summary.csv"), summary.str());
    out << (all ? "all certifications passed\n" : "certification FAILED\n");
    return all ? kSuccess : kCertificationFailed;
  });
}

int cmdPlot(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guardedIo(err, [&]() {
    const std::vector<Cell> cells = runMatrix(config);
    const auto reports = verifyMatrix(config);
    bool ok = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string tag = cellTag(cells[i].n, cells[i].eps);
      if (!reports[i].value) {
        ok = false;
        err << "plot " << tag << ": " << reports[i].error << "\n";
        continue;
      }
      writeFigures(config, *reports[i].value);
      out << "wrote figures for " << tag << "\n";
    }
    return ok ? kSuccess : kCertificationFailed;
  });
}

int cmdSweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guardedIo(err, [&]() {
    writeRunConfig(config);
    const double critical = criticalEpsilonK();
    constexpr int kSteps = 80;
    constexpr int kPhi = 2001;
    std::vector<double> epsGrid, minCurv;
    std::ostringstream curvCsv;
    curvCsv << "eps,min_curvature_K,convex\n";
    for (int i = 0; i <= kSteps; ++i) {
      const double eps = 0.8 + 0.19 * i / kSteps;
      double lowest = std::numeric_limits<double>::infinity();
      for (int j = 0; j < kPhi; ++j) lowest = std::min(lowest, kleeCurvatureClosedForm(eps, kPi * j / (kPhi - 1)));
      epsGrid.push_back(eps);
      minCurv.push_back(lowest);
      curvCsv << formatDouble(eps) << ',' << formatDouble(lowest) << ',' << (lowest > 0.0 ? "true" : "false")
              << '\n';
    }

    const std::vector<Cell> cells = runMatrix(config);
    SectionOptions sections;
    sections.quadratureNodes = config.quadratureNodes;
    sections.solver.tolerance = config.solverTolerance;
    sections.maximizerWidth = config.maximizerWidth;
    sections.gridSamples = 0;
    constexpr int kSweepPhi = 25;
    const auto maxT = parallelMap<double>(cells.size(), config.jobs, [&](std::size_t i) {
      if (cells[i].eps == 0.0) return 0.0;
      const BodyOfRevolution K = buildK(cells[i].eps, cells[i].n);
      double worst = 0.0;
      for (int j = 0; j < kSweepPhi; ++j) {
        const SectionCurve c = innerSectionFunction(K, kPi * j / (kSweepPhi - 1), sections);
        worst = std::max(worst, std::abs(c.tStar / cells[i].eps));
      }
      return worst;
    });
    std::ostringstream tCsv;
    tCsv << "n,eps,max_abs_T\n";
    bool ok = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      tCsv << cells[i].n << ',' << formatDouble(cells[i].eps) << ',';
      if (!maxT[i].value) {
        ok = false;
        err << "sweep " << cellTag(cells[i].n, cells[i].eps) << ": " << maxT[i].error << "\n";
        tCsv << "\n";
        continue;
      }
      tCsv << formatDouble(*maxT[i].value) << '\n';
      out << "max |T| " << cellTag(cells[i].n, cells[i].eps) << " = " << formatDouble(*maxT[i].value) << "\n";
    }
    if (config.wants("csv")) {
      writeTextFile(outPath(config, "sweep_curvature.csv"), curvCsv.str());
      writeTextFile(outPath(config, "sweep_T.csv"), tCsv.str());
    }
    if (config.wants("json")) {
      nlohmann::ordered_json j;
      j["schemaVersion"] = kReportSchemaVersion;
      j["criticalEpsilonK"] = critical;
      j["eps"] = epsGrid;
      j["minCurvatureK"] = minCurv;
      writeTextFile(outPath(config, "sweep.json"), j.dump(2) + "\n");
    }
    if (config.wants("svg")) {
      SvgChart chart;
      chart.title = "Minimum boundary curvature of K vs eps (critical eps " + formatDouble(critical) + ")";
      chart.xLabel = "eps";
      chart.yLabel = "min curvature";
      chart.series = {{"min curvature K", epsGrid, minCurv, "#d62728", ""},
                      {"zero", {epsGrid.front(), epsGrid.back()}, {0.0, 0.0}, "#7f7f7f", "3,3"}};
      writeTextFile(outPath(config, "sweep_curvature.svg"), chart.render());
    }
    out << "critical eps for convexity of K: " << formatDouble(critical) << "\n";
    const bool consistent = critical >= 0.91 && critical < 1.0;
    if (!consistent) err << "critical eps " << formatDouble(critical) << " is below 0.91\n";
    return ok && consistent ? kSuccess : kCertificationFailed;
  });
}

int cmdSelftest(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto results = runSelftests(config);
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    all = all && r.passed;
  }
  out << (all ? "selftest passed\n" : "selftest FAILED\n");
  return all ? kSuccess : kCertificationFailed;
}

}  // namespace klee::app

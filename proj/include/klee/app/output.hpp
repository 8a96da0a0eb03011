#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "klee/app/config.hpp"
#include "klee/verification.hpp"

namespace klee::app {

/// One row per spectral grid angle.
struct ProfileTable {
  int n = 3;
  double eps = 0.0;
  int degreeUsed = 0;
  std::vector<double> phi;
  std::vector<double> rhoK;
  std::vector<double> rhoL;
  std::vector<double> mK;
  std::vector<double> mL;
  std::vector<double> tStar;
  std::vector<double> curvatureK;
  std::vector<double> curvatureL;
  std::vector<std::string> warnings;
};

ProfileTable buildProfileTable(double eps, int n, const RunConfig& config);

VerifyConfig verifyConfigFrom(const RunConfig& config);

/// Header `phi,rho_K,rho_L,m_K,m_L,t_star,curvature_K,curvature_L`, 17 significant digits.
std::string profileCsv(const ProfileTable& table);
nlohmann::ordered_json profileJson(const ProfileTable& table);

nlohmann::ordered_json reportJson(const VerificationReport& report, const VerifyConfig& config);

std::string boundaryFigure(const VerificationReport& report);
std::string innerSectionFigure(const VerificationReport& report);
std::string maximizerFigure(const VerificationReport& report);

/// "n3_eps0.1" style tag used in file names.
std::string cellTag(int n, double eps);

void writeTextFile(const std::string& path, const std::string& content);

}  // namespace klee::app

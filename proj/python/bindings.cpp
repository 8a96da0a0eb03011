#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "klee/app/output.hpp"
#include "klee/constants.hpp"
#include "klee/construction.hpp"
#include "klee/error.hpp"
#include "klee/radon.hpp"
#include "klee/sections.hpp"
#include "klee/verification.hpp"

namespace py = pybind11;
using namespace klee;

namespace {

SectionOptions sectionOptions(int quadratureNodes) {
  SectionOptions options;
  options.quadratureNodes = quadratureNodes;
  return options;
}

}  // namespace

PYBIND11_MODULE(_klee, m) {
  m.doc() = "Bodies of revolution with equal inner section functions";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.attr("SCHEMA_VERSION") = kReportSchemaVersion;
  m.def("ball_volume", &ballVolume, py::arg("n"));
  m.def("sphere_area", &sphereArea, py::arg("n"));

  py::class_<BodyOfRevolution>(m, "Body")
      .def_property_readonly("dimension", &BodyOfRevolution::dimension)
      .def_property_readonly("min_radius", &BodyOfRevolution::minRadius)
      .def_property_readonly("max_radius", &BodyOfRevolution::maxRadius)
      .def_property_readonly("klee_epsilon", &BodyOfRevolution::kleeEpsilon)
      .def("radius", [](const BodyOfRevolution& b, double phi) { return b.profile()(phi); }, py::arg("phi"))
      .def("radii", [](const BodyOfRevolution& b, const std::vector<double>& phi) {
        std::vector<double> out;
        out.reserve(phi.size());
        for (double p : phi) out.push_back(b.profile()(p));
        return out;
      }, py::arg("phi"))
      .def("curvature", [](const BodyOfRevolution& b, double phi) { return profileCurvature(b.profile(), phi); },
           py::arg("phi"))
      .def("min_curvature", [](const BodyOfRevolution& b) { return minCurvature(b.profile()); });

  m.def("unit_ball", &unitBall, py::arg("n"));
  m.def("build_k", &buildK, py::arg("eps"), py::arg("n"));

  py::class_<SymmetricPartner>(m, "Partner")
      .def_readonly("body", &SymmetricPartner::body)
      .def_readonly("phi_grid", &SymmetricPartner::phiGrid)
      .def_readonly("inner_section", &SymmetricPartner::innerSection)
      .def_readonly("t_star", &SymmetricPartner::tStar)
      .def_readonly("degree_used", &SymmetricPartner::degreeUsed)
      .def_readonly("min_radial_power", &SymmetricPartner::minRadialPower)
      .def_readonly("warnings", &SymmetricPartner::warnings);

  m.def("build_l", &buildL, py::arg("eps"), py::arg("n"), py::arg("degree") = 64,
        py::call_guard<py::gil_scoped_release>());
  m.def("build_partner", [](const BodyOfRevolution& source, int degree, bool adaptive) {
    PartnerOptions options;
    options.degree = degree;
    options.adaptive = adaptive;
    return buildSymmetricPartner(source, options);
  }, py::arg("source"), py::arg("degree") = 64, py::arg("adaptive") = true,
        py::call_guard<py::gil_scoped_release>());

  m.def("section_area", [](const BodyOfRevolution& body, double phi, double t, int nodes) {
    return parallelSectionArea(body, phi, t, sectionOptions(nodes));
  }, py::arg("body"), py::arg("phi"), py::arg("t"), py::arg("quadrature_nodes") = 128);

  m.def("inner_section", [](const BodyOfRevolution& body, double phi, int nodes) {
    const SectionCurve c = innerSectionFunction(body, phi, sectionOptions(nodes));
    py::dict d;
    d["phi"] = c.phi;
    d["t_star"] = c.tStar;
    d["m"] = c.m;
    d["stationarity_residual"] = c.stationarityResidual;
    d["t_grid"] = c.tGrid;
    d["areas"] = c.areas;
    return d;
  }, py::arg("body"), py::arg("phi"), py::arg("quadrature_nodes") = 128);

  m.def("section_area_mc", [](const BodyOfRevolution& body, double phi, double t, std::size_t samples,
                              std::uint64_t seed) {
    const McEstimate e = sectionAreaMcOracle(body, phi, t, samples, seed);
    return py::make_tuple(e.estimate, e.standardError);
  }, py::arg("body"), py::arg("phi"), py::arg("t"), py::arg("samples"), py::arg("seed"));

  m.def("radon_multipliers", [](int n, int degree) { return radonMultipliers(n, degree); }, py::arg("n"),
        py::arg("degree"));
  m.def("klee_curvature", &kleeCurvatureClosedForm, py::arg("eps"), py::arg("phi"));
  m.def("critical_epsilon", &criticalEpsilonK);

  py::class_<VerifyConfig>(m, "VerifyConfig")
      .def(py::init<>())
      .def_readwrite("degree", &VerifyConfig::degree)
      .def_readwrite("quadrature_nodes", &VerifyConfig::quadratureNodes)
      .def_readwrite("check_points", &VerifyConfig::checkPoints)
      .def_readwrite("tol_m", &VerifyConfig::tolMRelative)
      .def_readwrite("solver_tolerance", &VerifyConfig::solverTolerance)
      .def_readwrite("maximizer_width", &VerifyConfig::maximizerWidth)
      .def_readwrite("mc_samples", &VerifyConfig::mcSamples)
      .def_readwrite("seed", &VerifyConfig::seed)
      .def_readwrite("adaptive", &VerifyConfig::adaptive);

  py::class_<CheckResult>(m, "Check")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("value", &CheckResult::value)
      .def_readonly("threshold", &CheckResult::threshold)
      .def_readonly("relation", &CheckResult::relation)
      .def("__repr__", [](const CheckResult& c) {
        return "<Check " + c.name + (c.passed ? " pass>" : " FAIL>");
      });

  py::class_<VerificationReport>(m, "Report")
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("eps", &VerificationReport::eps)
      .def_readonly("passed", &VerificationReport::passed)
      .def_readonly("degree_used", &VerificationReport::degreeUsed)
      .def_readonly("m_mismatch", &VerificationReport::mMismatch)
      .def_readonly("curvature_min_k", &VerificationReport::curvatureMinK)
      .def_readonly("curvature_min_l", &VerificationReport::curvatureMinL)
      .def_readonly("central_symmetry_defect_k", &VerificationReport::centralSymmetryDefectK)
      .def_readonly("origin_symmetry_defect_l", &VerificationReport::originSymmetryDefectL)
      .def_readonly("phi", &VerificationReport::phi)
      .def_readonly("m_k", &VerificationReport::mK)
      .def_readonly("m_l", &VerificationReport::mL)
      .def_readonly("checks", &VerificationReport::checks)
      .def_readonly("warnings", &VerificationReport::warnings)
      .def_readonly("error", &VerificationReport::error)
      .def_property_readonly("failed_checks", [](const VerificationReport& r) {
        std::vector<std::string> out;
        for (const auto& c : r.checks) {
          if (!c.passed) out.push_back(c.name);
        }
        return out;
      });

  m.def("verify", &verifyCounterexample, py::arg("eps"), py::arg("n"), py::arg("config") = VerifyConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("report_json", [](const VerificationReport& r, const VerifyConfig& c) { return app::reportJson(r, c).dump(2); },
        py::arg("report"), py::arg("config") = VerifyConfig{});
}

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jmatrix/check.hpp"
#include "jmatrix/coefficients.hpp"
#include "jmatrix/errors.hpp"
#include "jmatrix/phase_analytic.hpp"
#include "jmatrix/phase_numeric.hpp"
#include "jmatrix/scan.hpp"
#include "jmatrix/specfun.hpp"

namespace py = pybind11;
using namespace jmatrix;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relativistic J-matrix scattering phase shifts for M-term separable "
            "potentials with Laguerre-type form factors";

  static py::exception<Error> exc(m, "JmatrixError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      exc(e.what());
    }
  });

  py::enum_<Basis>(m, "Basis")
      .value("laguerre", Basis::Laguerre)
      .value("oscillator", Basis::Oscillator);

  py::enum_<CRuleKind>(m, "CRuleKind")
      .value("fixed", CRuleKind::Fixed)
      .value("balance", CRuleKind::Balance)
      .value("nonrel_limit", CRuleKind::NonRelLimit);

  py::class_<CRule>(m, "CRule")
      .def_static("fixed", &CRule::fixed, py::arg("c"))
      .def_static("balance", &CRule::balance)
      .def_static("nonrel_limit", &CRule::nonrel_limit)
      .def_readonly("kind", &CRule::kind)
      .def_readonly("value", &CRule::value);

  py::class_<ChannelConfig>(m, "ChannelConfig")
      .def(py::init([](int kappa, double lambda, double alpha, CRule c_rule, Basis basis) {
             ChannelConfig cfg{kappa, lambda, alpha, c_rule, basis};
             cfg.validate();
             return cfg;
           }),
           py::arg("kappa") = 1, py::arg("lam") = 1.0, py::arg("alpha") = 1.0,
           py::arg("c_rule") = CRule::balance(), py::arg("basis") = Basis::Laguerre)
      .def_readwrite("kappa", &ChannelConfig::kappa)
      .def_readwrite("lam", &ChannelConfig::lambda)
      .def_readwrite("alpha", &ChannelConfig::alpha)
      .def_readwrite("c_rule", &ChannelConfig::c_rule)
      .def_readwrite("basis", &ChannelConfig::basis);

  py::class_<KinematicState>(m, "KinematicState")
      .def_readonly("epsilon", &KinematicState::epsilon)
      .def_readonly("c_value", &KinematicState::c_value)
      .def_readonly("k", &KinematicState::k)
      .def_readonly("eta", &KinematicState::eta)
      .def_property_readonly("omega", [](const KinematicState& st) -> py::object {
        return st.omega ? py::cast(*st.omega) : py::none();
      });

  py::class_<TridiagonalRepr>(m, "TridiagonalRepr")
      .def_readonly("diag", &TridiagonalRepr::diag)
      .def_readonly("offdiag", &TridiagonalRepr::offdiag)
      .def("size", &TridiagonalRepr::size);

  py::class_<SeparablePotential>(m, "SeparablePotential")
      .def(py::init(&SeparablePotential::from_rows), py::arg("rows"))
      .def_static("zero", &SeparablePotential::zero, py::arg("m"))
      .def_readonly("m", &SeparablePotential::m)
      .def("at", &SeparablePotential::at, py::arg("i"), py::arg("j"));

  py::class_<CoefficientPair>(m, "CoefficientPair")
      .def_readonly("s", &CoefficientPair::s)
      .def_readonly("c", &CoefficientPair::c);

  py::class_<Kinematical>(m, "Kinematical")
      .def_readonly("t", &Kinematical::t)
      .def_readonly("r_plus", &Kinematical::r_plus)
      .def_readonly("r_minus", &Kinematical::r_minus);

  py::class_<Method>(m, "Method")
      .def_property_readonly("kind", [](const Method& me) { return to_string(me.kind); })
      .def_readonly("n_size", &Method::n_size);

  py::class_<SMatrixPoint>(m, "SMatrixPoint")
      .def_readonly("epsilon", &SMatrixPoint::epsilon)
      .def_readonly("s_value", &SMatrixPoint::s_value)
      .def_readonly("tau", &SMatrixPoint::tau)
      .def_readonly("method", &SMatrixPoint::method)
      .def_readonly("diagnostics", &SMatrixPoint::diagnostics);

  py::class_<SolutionCoefficients>(m, "SolutionCoefficients")
      .def_readonly("h", &SolutionCoefficients::h)
      .def_readonly("residual", &SolutionCoefficients::residual)
      .def_readonly("tan_tau", &SolutionCoefficients::tan_tau);

  // special functions
  m.def("laguerre", &specfun::laguerre, py::arg("n"), py::arg("mu"), py::arg("x"));
  m.def("gegenbauer", &specfun::gegenbauer, py::arg("n"), py::arg("nu"), py::arg("x"));
  m.def("gauss_2f1_terminating", &specfun::gauss_2f1_terminating, py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("kummer_1f1", &specfun::kummer_1f1, py::arg("a"), py::arg("b"), py::arg("z"));
  m.def("ln_gamma", &specfun::ln_gamma, py::arg("x"));
  m.def("pochhammer", &specfun::pochhammer, py::arg("a"), py::arg("k"));

  // kinematics
  m.def("resolve_c", &resolve_c, py::arg("epsilon"), py::arg("rule"), py::arg("alpha"));
  m.def("wavenumber", &wavenumber, py::arg("epsilon"), py::arg("alpha"), py::arg("c"));
  m.def("omega_angle", &omega_angle, py::arg("eta"));
  m.def("kinematic_state", &kinematic_state, py::arg("epsilon"), py::arg("cfg"));

  // basis layer
  m.def("phi_upper", &phi_upper, py::arg("n"), py::arg("r"), py::arg("cfg"));
  m.def("h0_matrix", &h0_matrix, py::arg("n_size"), py::arg("cfg"), py::arg("c_value"));
  m.def("omega_matrix", &omega_matrix, py::arg("n_size"), py::arg("cfg"),
        py::arg("c_value"));
  m.def("j_matrix", &j_matrix, py::arg("epsilon"), py::arg("n_size"), py::arg("cfg"));

  // coefficients
  m.def("sine_like", &sine_like, py::arg("n"), py::arg("state"), py::arg("cfg"));
  m.def("cosine_like", &cosine_like, py::arg("n"), py::arg("state"), py::arg("cfg"));
  m.def("coefficient_pair", &coefficient_pair, py::arg("n_size"), py::arg("state"),
        py::arg("cfg"));
  m.def("kinematical", &kinematical, py::arg("pair"));

  // phase shifts
  m.def("s_matrix_m1", &s_matrix_m1, py::arg("epsilon"), py::arg("v00"), py::arg("cfg"));
  m.def("s_matrix_m2", &s_matrix_m2, py::arg("epsilon"), py::arg("v"), py::arg("cfg"));
  m.def("s_matrix_m3", &s_matrix_m3, py::arg("epsilon"), py::arg("v"), py::arg("cfg"));
  m.def("s_matrix_analytic", &s_matrix_analytic, py::arg("epsilon"), py::arg("v"),
        py::arg("cfg"));
  m.def("s_matrix_numeric", &s_matrix_numeric, py::arg("epsilon"), py::arg("v"),
        py::arg("n_size"), py::arg("cfg"));
  m.def("solve_coefficients", &solve_coefficients, py::arg("epsilon"), py::arg("v"),
        py::arg("n_size"), py::arg("cfg"));
  m.def("unwrap_phase", &unwrap_phase, py::arg("points"));

  // interface helpers
  m.def("emit_table_json", &emit_table_json, py::arg("cfg"), py::arg("epsilon"),
        py::arg("n_max"));
  m.def(
      "run_check",
      [](unsigned seed) {
        CheckOptions opt;
        opt.seed = seed;
        std::vector<std::map<std::string, std::string>> rows;
        for (const CheckOutcome& o : run_check(opt)) {
          rows.push_back({{"name", o.name},
                          {"pass", o.pass ? "true" : "false"},
                          {"detail", o.detail}});
        }
        return rows;
      },
      py::arg("seed") = 20240901u);
}

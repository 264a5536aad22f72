#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "fraczeta/audit.hpp"
#include "fraczeta/frac_theta.hpp"
#include "fraczeta/frac_zeta.hpp"
#include "fraczeta/gammafn.hpp"
#include "fraczeta/gl.hpp"
#include "fraczeta/integral.hpp"
#include "fraczeta/serialize.hpp"
#include "fraczeta/theta.hpp"
#include "fraczeta/zeta.hpp"

namespace py = pybind11;
namespace fz = fraczeta;

namespace {

fz::SeriesBudget make_budget(std::int64_t max_terms, double tail_tol) {
  fz::SeriesBudget b;
  if (max_terms > 0) {
    b.max_terms_per_axis = max_terms;
    b.hard_cap = std::max(b.hard_cap, max_terms);
  }
  if (tail_tol > 0) b.tail_tol = tail_tol;
  return b;
}

fz::FormulaVariant fe_variant(const std::string& name) {
  if (name.empty() || name == "audit") return fz::audit_selected_variant();
  if (name == "paper_negative_log") return {fz::SeriesSign::PaperNegativeLog};
  if (name == "proof_positive_log") return {fz::SeriesSign::ProofPositiveLog};
  throw fz::DomainError("unknown variant " + name);
}

}  // namespace

PYBIND11_MODULE(_fraczeta, m) {
  m.doc() = "Grunwald-Letnikov fractional derivatives of the Hurwitz zeta and "
            "Jacobi theta functions, with numerical identity audits";

  py::register_exception<fz::DomainError>(m, "DomainError");
  py::register_exception<fz::PoleError>(m, "PoleError");
  py::register_exception<fz::ConvergenceError>(m, "ConvergenceError");
  py::register_exception<fz::OrderCapError>(m, "OrderCapError");
  py::register_exception<fz::QuadratureError>(m, "QuadratureError");

  py::class_<fz::MethodResult>(m, "MethodResult")
      .def_readonly("value", &fz::MethodResult::value)
      .def_readonly("err_estimate", &fz::MethodResult::err_estimate)
      .def_readonly("terms_used", &fz::MethodResult::terms_used)
      .def_readonly("converged", &fz::MethodResult::converged)
      .def_readonly("variant", &fz::MethodResult::variant)
      .def("__repr__", [](const fz::MethodResult& r) {
        return "MethodResult(" + fz::to_json(r) + ")";
      });

  m.def("gamma", &fz::gamma, py::arg("z"));
  m.def("polygamma", &fz::polygamma, py::arg("z"), py::arg("m"));
  m.def("gamma_deriv", &fz::gamma_deriv, py::arg("z"), py::arg("r"));
  m.def("recip_gamma_deriv", &fz::recip_gamma_deriv, py::arg("z"), py::arg("m"));
  m.def("cpow", &fz::cpow, py::arg("z"), py::arg("w"));
  m.def("gen_binom", &fz::gen_binom, py::arg("alpha"), py::arg("k"));
  m.def("a_coeff", &fz::a_coeff, py::arg("alpha"), py::arg("r"), py::arg("k"),
        py::arg("l"));

  m.def(
      "hurwitz_zeta",
      [](fz::Complex s, double a, int l) { return fz::hurwitz_zeta(s, a, l); },
      py::arg("s"), py::arg("a") = 1.0, py::arg("l") = 0);

  m.def(
      "theta",
      [](fz::Complex s, double tail_tol) {
        return fz::theta(s, make_budget(0, tail_tol));
      },
      py::arg("s"), py::arg("tail_tol") = 0.0);

  m.def(
      "theta_fe_residual",
      [](fz::Complex s) { return fz::theta_fe_residual(s); }, py::arg("s"));

  m.def(
      "frac_zeta_series",
      [](fz::Complex s, double a, double alpha, std::int64_t max_terms,
         double tail_tol) {
        return fz::frac_zeta_series({s, a, alpha}, make_budget(max_terms, tail_tol));
      },
      py::arg("s"), py::arg("a") = 1.0, py::arg("alpha") = 0.5,
      py::arg("max_terms") = 0, py::arg("tail_tol") = 0.0);

  m.def(
      "frac_zeta_fe_triple",
      [](fz::Complex s, double a, double alpha, const std::string& variant) {
        return fz::frac_hurwitz_fe_triple({s, a, alpha}, fe_variant(variant));
      },
      py::arg("s"), py::arg("a") = 1.0, py::arg("alpha") = 0.5,
      py::arg("variant") = "audit");

  m.def(
      "frac_zeta_fe_simplified",
      [](fz::Complex s, double a, double alpha) {
        return fz::frac_hurwitz_fe_simplified({s, a, alpha});
      },
      py::arg("s"), py::arg("a") = 1.0, py::arg("alpha") = 0.5);

  m.def(
      "frac_zeta_fe_trig",
      [](fz::Complex s, double a, double alpha, const std::string& variant) {
        return fz::frac_hurwitz_fe_trig({s, a, alpha}, fe_variant(variant));
      },
      py::arg("s"), py::arg("a") = 1.0, py::arg("alpha") = 0.5,
      py::arg("variant") = "audit");

  m.def(
      "frac_zeta_fe_rational",
      [](fz::Complex s, int p, int q, double alpha) {
        return fz::frac_hurwitz_fe_rational(s, p, q, alpha);
      },
      py::arg("s"), py::arg("p"), py::arg("q"), py::arg("alpha"));

  m.def(
      "frac_theta",
      [](fz::Complex s, double alpha, const std::string& variant) {
        fz::ThetaVariant v = (variant == "as_printed_e_ipin")
                                 ? fz::ThetaVariant::AsPrintedEipiN
                                 : fz::ThetaVariant::CorrectedEipiAlpha;
        return fz::frac_theta_series(s, alpha, v);
      },
      py::arg("s"), py::arg("alpha"), py::arg("variant") = "corrected_e_ipialpha");

  m.def(
      "completed_zeta_integral",
      [](fz::Complex s) { return fz::completed_zeta_integral(s); }, py::arg("s"));

  m.def(
      "theta_log_moment",
      [](fz::Complex s, fz::Complex w) { return fz::theta_log_moment(s, w); },
      py::arg("s"), py::arg("w"));

  m.def(
      "gl_derivative",
      [](const std::string& f_id, fz::Complex s, double alpha, bool real_ray) {
        fz::GLSchedule sched;
        if (real_ray) sched.ray = fz::GLRay::RealForward;
        fz::ComplexFn fn;
        if (f_id == "zeta")
          fn = [](fz::Complex z) { return fz::hurwitz_zeta(z, 1.0, 0).value; };
        else if (f_id == "theta")
          fn = [](fz::Complex z) { return fz::theta(z).value; };
        else
          throw fz::DomainError("gl_derivative: f_id must be zeta or theta");
        return fz::gl_derivative(fn, s, alpha, sched);
      },
      py::arg("f_id"), py::arg("s"), py::arg("alpha"), py::arg("real_ray") = false);

  m.def(
      "verify",
      [](const std::string& suite) {
        std::vector<std::string> out;
        for (const auto& r : fz::run_suite(suite, {})) out.push_back(fz::to_json(r));
        return out;
      },
      py::arg("suite") = "classical-baselines",
      "run an audit suite; returns one JSON record per identity");

  m.def("suite_ids", &fz::suite_ids);

#ifdef FRACZETA_VERSION
  m.attr("__version__") = FRACZETA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}

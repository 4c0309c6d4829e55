// Python bindings: thin wrappers over the library operations.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clarkframes/measure_io.hpp"
#include "clarkframes/rng.hpp"
#include "clarkframes/verify.hpp"

namespace py = pybind11;
using namespace clarkframes;

namespace {

PhiMode mode_from(const std::string& name) {
  if (name == "ratio") return PhiMode::ratio;
  if (name == "series") return PhiMode::series;
  throw std::invalid_argument("mode must be 'ratio' or 'series'");
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fourier frames for singular measures on the unit circle";

  py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<TorusPoint>(m, "TorusPoint")
      .def_readonly("t", &TorusPoint::t)
      .def_readonly("value", &TorusPoint::value)
      .def("__repr__", [](const TorusPoint& p) {
        return "TorusPoint(t=" + std::to_string(p.t) + ")";
      });
  m.def("torus_point", &torus_point, py::arg("t"));

  py::class_<AtomicMeasure>(m, "AtomicMeasure")
      .def_readonly("points", &AtomicMeasure::points)
      .def_readonly("weights", &AtomicMeasure::weights)
      .def("size", &AtomicMeasure::size)
      .def("mass", &AtomicMeasure::mass)
      .def("is_probability", &AtomicMeasure::is_probability, py::arg("tol") = 1e-12);
  m.def("atomic_measure", &atomic_measure, py::arg("atoms"),
        py::arg("allow_non_probability") = false);

  py::class_<SelfSimilarMeasure>(m, "SelfSimilarMeasure")
      .def_readonly("base", &SelfSimilarMeasure::base)
      .def_readonly("digits", &SelfSimilarMeasure::digits)
      .def_readonly("probs", &SelfSimilarMeasure::probs)
      .def_readonly("product_depth", &SelfSimilarMeasure::product_depth);
  m.def("self_similar_measure", &self_similar_measure, py::arg("base"),
        py::arg("digits"), py::arg("probs"), py::arg("product_depth"));
  m.def("cantor_measure", &cantor_measure, py::arg("product_depth") = 30);

  py::class_<DensityMeasure>(m, "DensityMeasure")
      .def_readonly("coeffs", &DensityMeasure::coeffs)
      .def("density", &DensityMeasure::density, py::arg("t"));
  m.def("density_measure", &density_measure, py::arg("coeffs"));

  m.def("fourier_coeff", &fourier_coeff, py::arg("mu"), py::arg("n"));
  m.def("fourier_coeffs", &fourier_coeffs, py::arg("mu"), py::arg("n_max"));
  m.def("poisson", &poisson, py::arg("mu"), py::arg("z"));
  m.def("herglotz", &herglotz, py::arg("mu"), py::arg("z"));
  m.def("cauchy",
        static_cast<cplx (*)(const Measure&, cplx)>(&cauchy), py::arg("mu"),
        py::arg("z"));
  m.def("cauchy_of",
        static_cast<cplx (*)(const AtomicMeasure&, const std::vector<cplx>&, cplx)>(
            &cauchy),
        py::arg("mu"), py::arg("g"), py::arg("z"));
  m.def("atomize", &atomize, py::arg("mu"), py::arg("depth"));
  m.def("quadrature_measure", &quadrature_measure, py::arg("mu"),
        py::arg("grid_count"));
  m.def("disc_grid", &disc_grid, py::arg("radius"), py::arg("count"));

  py::class_<TruncatedSeries>(m, "TruncatedSeries")
      .def_readonly("c", &TruncatedSeries::c)
      .def("degree", &TruncatedSeries::degree)
      .def("eval", &TruncatedSeries::eval, py::arg("z"));

  py::class_<UCoefficients>(m, "UCoefficients")
      .def_readonly("u", &UCoefficients::u)
      .def("n_max", &UCoefficients::n_max);
  m.def("u_coefficients", &u_coefficients, py::arg("mu"), py::arg("n_max"));
  m.def("toeplitz_identity_residual", &toeplitz_identity_residual, py::arg("mu"),
        py::arg("u"));
  m.def("phi_series", &phi_series, py::arg("u"));

  py::class_<FramePolynomial>(m, "FramePolynomial")
      .def_readonly("n", &FramePolynomial::n)
      .def_readonly("c", &FramePolynomial::c)
      .def("eval", &FramePolynomial::eval, py::arg("z"));
  m.def("frame_polynomial", &frame_polynomial, py::arg("u"), py::arg("n"));

  m.def("l2_inner", &l2_inner, py::arg("mu"), py::arg("f"), py::arg("g"));
  m.def("l2_norm", &l2_norm, py::arg("mu"), py::arg("f"));
  m.def("monomial_vector", &monomial_vector, py::arg("mu"), py::arg("n"));
  m.def("frame_vector", &frame_vector, py::arg("mu"), py::arg("g"));

  py::class_<KaczmarzTrace>(m, "KaczmarzTrace")
      .def_readonly("residual_norms", &KaczmarzTrace::residual_norms)
      .def_readonly("coefficients", &KaczmarzTrace::coefficients)
      .def_readonly("approximant", &KaczmarzTrace::approximant);
  m.def("kaczmarz_run", &kaczmarz_run, py::arg("mu"), py::arg("f"),
        py::arg("n_max"));
  m.def("dual_sequence", &dual_sequence, py::arg("mu"), py::arg("n_max"));
  m.def("parseval_sums", &parseval_sums, py::arg("mu"), py::arg("f"),
        py::arg("duals"));

  py::class_<BlaschkeProduct>(m, "BlaschkeProduct")
      .def_readonly("zeros", &BlaschkeProduct::zeros)
      .def_readonly("front", &BlaschkeProduct::front)
      .def("degree", &BlaschkeProduct::degree)
      .def("eval", &BlaschkeProduct::eval, py::arg("z"))
      .def("deriv", &BlaschkeProduct::deriv, py::arg("z"))
      .def("series", &BlaschkeProduct::series, py::arg("n_max"));
  m.def("blaschke_product", &blaschke_product, py::arg("zeros"),
        py::arg("front") = cplx{1.0, 0.0});

  py::class_<InnerFunction>(m, "InnerFunction")
      .def_static("from_measure", &InnerFunction::from_measure, py::arg("mu"),
                  py::arg("n_max") = 512)
      .def_static("from_blaschke", &InnerFunction::from_blaschke, py::arg("b"),
                  py::arg("n_max") = 512)
      .def(
          "eval",
          [](const InnerFunction& phi, cplx z, const std::string& mode) {
            return phi.eval(z, mode_from(mode));
          },
          py::arg("z"), py::arg("mode") = "ratio")
      .def("boundary_value", &InnerFunction::boundary_value, py::arg("zeta"))
      .def_property_readonly("u", &InnerFunction::u)
      .def_property_readonly("taylor", &InnerFunction::taylor);

  m.def("poisson_phi_residual", &poisson_phi_residual, py::arg("mu"),
        py::arg("phi"), py::arg("grid"));
  m.def("model_kernel", &model_kernel, py::arg("phi"), py::arg("z"), py::arg("w"));
  m.def("project_monomial", &project_monomial, py::arg("phi"), py::arg("n"),
        py::arg("w"));

  py::class_<RadialSweep>(m, "RadialSweep")
      .def_readonly("radii", &RadialSweep::radii)
      .def_readonly("values", &RadialSweep::values)
      .def_readonly("extrapolated", &RadialSweep::extrapolated)
      .def_readonly("target", &RadialSweep::target)
      .def_readonly("raw_distance", &RadialSweep::raw_distance)
      .def_readonly("final_distance", &RadialSweep::final_distance)
      .def_readonly("converged", &RadialSweep::converged);
  m.def("boundary_limit_check", &boundary_limit_check, py::arg("phi"), py::arg("g"),
        py::arg("zeta"), py::arg("j_max") = 20, py::arg("tol") = 1e-6);

  m.def("normalized_cauchy", &normalized_cauchy, py::arg("mu"), py::arg("g"),
        py::arg("z"));
  m.def("v_alpha", &v_alpha, py::arg("mu_alpha"), py::arg("phi"), py::arg("g"),
        py::arg("alpha"), py::arg("z"));
  m.def("v_alpha_coefficients", &v_alpha_coefficients, py::arg("mu_alpha"),
        py::arg("phi"), py::arg("g"), py::arg("alpha"), py::arg("n_max"));

  py::class_<ClarkAtomSet>(m, "ClarkAtomSet")
      .def_readonly("alpha", &ClarkAtomSet::alpha)
      .def_readonly("measure", &ClarkAtomSet::measure)
      .def_readonly("certified_residual", &ClarkAtomSet::certified_residual);
  m.def("clark_measure", &clark_measure, py::arg("b"), py::arg("alpha"));

  py::class_<CompositionCheck>(m, "CompositionCheck")
      .def_readonly("direct", &CompositionCheck::direct)
      .def_readonly("mixture", &CompositionCheck::mixture)
      .def_readonly("max_atom_distance", &CompositionCheck::max_atom_distance)
      .def_readonly("max_weight_distance", &CompositionCheck::max_weight_distance)
      .def_readonly("max_residual", &CompositionCheck::max_residual);
  m.def("clark_composition_check", &clark_composition_check, py::arg("b"),
        py::arg("theta"), py::arg("alpha"));

  m.def("boundary_values", &boundary_values, py::arg("mu"), py::arg("phi"));
  m.def("aleksandrov_residual",
        static_cast<double (*)(const AtomicMeasure&, const InnerFunction&, cplx)>(
            &aleksandrov_residual),
        py::arg("mu_test"), py::arg("phi"), py::arg("z"));
  m.def("backward_shift", &backward_shift, py::arg("s"), py::arg("m"));
  m.def("divisor_check", &divisor_check, py::arg("b1"), py::arg("b2"),
        py::arg("tol") = 1e-10);

  py::class_<GramMatrix>(m, "GramMatrix")
      .def_readonly("n_max", &GramMatrix::n_max)
      .def("at", &GramMatrix::at, py::arg("n"), py::arg("m"));
  m.def("gram", &gram, py::arg("mu"), py::arg("u"), py::arg("n_max"));

  py::class_<FrameOperatorSnapshot>(m, "FrameOperatorSnapshot")
      .def_readonly("n_max", &FrameOperatorSnapshot::n_max)
      .def_readonly("eigenvalues", &FrameOperatorSnapshot::eigenvalues)
      .def_readonly("deviation", &FrameOperatorSnapshot::deviation);
  m.def("frame_operator_snapshot", &frame_operator_snapshot, py::arg("mu"),
        py::arg("u"), py::arg("n_max"));
  m.def("frame_deviation", &frame_deviation, py::arg("mu"), py::arg("u"),
        py::arg("n_max"));
  m.def("frame_deviation_profile", &frame_deviation_profile, py::arg("mu"),
        py::arg("u"), py::arg("n_max"));

  py::class_<ExpansionTrace>(m, "ExpansionTrace")
      .def_readonly("coefficients", &ExpansionTrace::coefficients)
      .def_readonly("residuals", &ExpansionTrace::residuals)
      .def_readonly("approximant", &ExpansionTrace::approximant);
  m.def("expand", &expand, py::arg("mu"), py::arg("u"), py::arg("f"),
        py::arg("n_max"));
  m.def("kernel_double_series", &kernel_double_series, py::arg("gm"), py::arg("z"),
        py::arg("w"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_property_readonly(
          "status", [](const CheckResult& c) { return status_name(c.status); })
      .def_readonly("max_residual", &CheckResult::max_residual)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("detail", &CheckResult::detail);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("checks", &VerificationReport::checks)
      .def_readonly("all_passed", &VerificationReport::all_passed);
  m.def(
      "run_verification",
      [](const Measure& mu, int terms, double boundary_tol, double grid_radius,
         int grid_count, int carrier_depth,
         const std::optional<BlaschkeProduct>& reference_phi) {
        VerifyOptions opt;
        opt.terms = terms;
        opt.boundary_tol = boundary_tol;
        opt.grid_radius = grid_radius;
        opt.grid_count = grid_count;
        opt.carrier_depth = carrier_depth;
        opt.reference_phi = reference_phi;
        return run_verification(mu, opt);
      },
      py::arg("mu"), py::arg("terms") = 64, py::arg("boundary_tol") = 1e-6,
      py::arg("grid_radius") = 0.9, py::arg("grid_count") = 100,
      py::arg("carrier_depth") = 6, py::arg("reference_phi") = std::nullopt);

  m.def("parse_measure_spec", &parse_measure_spec, py::arg("json_text"));
  m.def("load_measure_spec", &load_measure_spec, py::arg("path"));
  m.def("file_hash", &file_hash, py::arg("path"));
}

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fockvolt/classify.hpp"
#include "fockvolt/kernel.hpp"
#include "fockvolt/norms.hpp"
#include "fockvolt/spectrum.hpp"
#include "fockvolt/verify.hpp"

namespace py = pybind11;
using namespace fockvolt;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Volterra-type integral operators on Fock-Sobolev spaces: weights, norms, "
            "reproducing kernels, boundedness classification and spectra.";

  py::enum_<NormalizerMode>(m, "NormalizerMode")
      .value("OnePlusR", NormalizerMode::OnePlusR)
      .value("ClampedRaw", NormalizerMode::ClampedRaw);

  py::class_<Weight>(m, "Weight")
      .def(py::init<int>(), py::arg("m"))
      .def(py::init<int, NormalizerMode>(), py::arg("m"), py::arg("mode"))
      .def_readonly("m", &Weight::m)
      .def("psi", &Weight::psi, py::arg("r"))
      .def("psi_prime", &Weight::psi_prime, py::arg("r"))
      .def("normalizer", &Weight::normalizer, py::arg("r"));

  py::class_<Poly>(m, "Poly")
      .def(py::init<std::vector<Complex>>(), py::arg("coeffs"))
      .def_static("constant", &Poly::constant)
      .def_static("identity", &Poly::identity)
      .def_static("monomial", &Poly::monomial, py::arg("n"), py::arg("c") = Complex{1.0, 0.0})
      .def_property_readonly("coeffs", &Poly::coeffs)
      .def_property_readonly("degree", &Poly::degree)
      .def("__call__", &Poly::eval, py::arg("z"))
      .def("derivative", &Poly::derivative)
      .def("antiderivative", &Poly::antiderivative);

  py::class_<QuadConfig>(m, "QuadConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadConfig::rel_tol)
      .def_readwrite("abs_tol", &QuadConfig::abs_tol)
      .def_readwrite("max_radius", &QuadConfig::max_radius)
      .def_readwrite("radial_panels", &QuadConfig::radial_panels)
      .def_readwrite("angular_samples", &QuadConfig::angular_samples)
      .def_readwrite("max_refinements", &QuadConfig::max_refinements)
      .def("validate", &QuadConfig::validate);

  py::class_<NormResult>(m, "NormResult")
      .def_property_readonly("finite", &NormResult::finite)
      .def_readonly("value", &NormResult::value)
      .def_readonly("argmax", &NormResult::argmax)
      .def_readonly("err_estimate", &NormResult::err_estimate)
      .def_readonly("direction", &NormResult::direction)
      .def_readonly("growth_report", &NormResult::growth_report)
      .def_readonly("note", &NormResult::note)
      .def("__repr__", [](const NormResult& r) {
        return r.finite() ? "NormResult(value=" + std::to_string(r.value) + ")"
                          : "NormResult(infinite, direction=" + std::to_string(r.direction) + ")";
      });

  py::enum_<MembershipReport::Verdict>(m, "MembershipVerdict")
      .value("Member", MembershipReport::Verdict::Member)
      .value("NonMember", MembershipReport::Verdict::NonMember)
      .value("BoundaryDirectional", MembershipReport::Verdict::BoundaryDirectional);

  py::class_<MembershipReport>(m, "MembershipReport")
      .def_readonly("verdict", &MembershipReport::verdict)
      .def_readonly("direction", &MembershipReport::direction)
      .def_readonly("detail", &MembershipReport::detail)
      .def_property_readonly("sup_finite", &MembershipReport::sup_finite);

  py::class_<EntireFunction>(m, "EntireFunction")
      .def_static("poly", &EntireFunction::poly, py::arg("p"))
      .def_static("exp_poly", &EntireFunction::exp_poly, py::arg("prefactor"), py::arg("exponent"))
      .def_static("constant", &EntireFunction::constant, py::arg("c"))
      .def_static("identity", &EntireFunction::identity)
      .def("__call__",
           [](const EntireFunction& f, Complex z, const QuadConfig& cfg) {
             return f.evaluate(z, cfg);
           },
           py::arg("z"), py::arg("cfg") = QuadConfig{})
      .def("value_at_zero", &EntireFunction::value_at_zero)
      .def("derivative", &EntireFunction::derivative)
      .def("describe", &EntireFunction::describe)
      .def_property_readonly("is_poly", [](const EntireFunction& f) {
        return f.kind() == EntireFunction::Kind::Poly;
      })
      .def_property_readonly("poly_coeffs", [](const EntireFunction& f) {
        return f.poly_coeffs().coeffs();
      });

  m.def("volterra_apply", &volterra_apply, py::arg("g"), py::arg("f"),
        "V_g f(z) = integral of f g' from 0 to z (exact on polynomials).");
  m.def("resolvent_apply", &resolvent_apply, py::arg("g1"), py::arg("lam"), py::arg("h"),
        "Unique entire solution of lam f - V_g1 f = h.");
  m.def("scale", &scale, py::arg("s"), py::arg("f"));
  m.def("exp_poly_membership", &exp_poly_membership, py::arg("p"), py::arg("q"), py::arg("w"));
  m.def("membership", &membership, py::arg("f"), py::arg("w"));

  m.def("norm_sup", &norm_sup, py::arg("f"), py::arg("w"), py::arg("cfg") = QuadConfig{});
  m.def("norm_p", &norm_p, py::arg("f"), py::arg("w"), py::arg("p"), py::arg("cfg") = QuadConfig{});
  m.def("norm_sup_lp", &norm_sup_LP, py::arg("f"), py::arg("w"), py::arg("cfg") = QuadConfig{});
  m.def("norm_p_lp", &norm_p_LP, py::arg("f"), py::arg("w"), py::arg("p"),
        py::arg("cfg") = QuadConfig{});

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("lhs", &EquivalenceReport::lhs)
      .def_readonly("rhs", &EquivalenceReport::rhs)
      .def_readonly("ratio", &EquivalenceReport::ratio)
      .def_readonly("function_id", &EquivalenceReport::function_id)
      .def_readonly("m", &EquivalenceReport::m)
      .def_readonly("p", &EquivalenceReport::p);
  m.def("smoothing_check", &smoothing_check, py::arg("g"), py::arg("lam"), py::arg("f"), py::arg("w"),
        py::arg("cfg") = QuadConfig{}, py::arg("id") = std::string_view{});

  py::class_<KernelModel>(m, "KernelModel")
      .def_static("build", &KernelModel::build, py::arg("w"), py::arg("N"),
                  py::arg("cfg") = QuadConfig{}, py::arg("cache_dir") = std::string{})
      .def_static("default_truncation", &KernelModel::default_truncation, py::arg("probe_radius"))
      .def_property_readonly("m", &KernelModel::m)
      .def_property_readonly("truncation", &KernelModel::truncation)
      .def_property_readonly("moments", &KernelModel::moments)
      .def_property_readonly("tail_bound", &KernelModel::tail_bound)
      .def("eval", &KernelModel::eval, py::arg("w"), py::arg("z"))
      .def("norm_sq", &KernelModel::norm_sq, py::arg("w"))
      .def("normalized_kernel", &KernelModel::normalized_kernel, py::arg("w"))
      .def("reproducing_residual", &KernelModel::reproducing_residual, py::arg("f"), py::arg("w"),
           py::arg("cfg") = QuadConfig{})
      .def("asymptotic_check", [](const KernelModel& k, const std::vector<double>& radii) {
        const auto rep = k.asymptotic_check(radii);
        return py::make_tuple(rep.ratios, rep.min_ratio, rep.max_ratio);
      });

  py::class_<ClassifierVerdict>(m, "ClassifierVerdict")
      .def_readonly("bounded", &ClassifierVerdict::bounded)
      .def_readonly("compact", &ClassifierVerdict::compact)
      .def_readonly("reason", &ClassifierVerdict::reason)
      .def_readonly("sup_ratio", &ClassifierVerdict::sup_ratio)
      .def_readonly("growth_exponent", &ClassifierVerdict::growth_exponent)
      .def_readonly("limit_ratio", &ClassifierVerdict::limit_ratio)
      .def_readonly("disk_radii", &ClassifierVerdict::disk_radii)
      .def_readonly("disk_integrals", &ClassifierVerdict::disk_integrals)
      .def_readonly("fitted_limit", &ClassifierVerdict::fitted_limit)
      .def_readonly("fitted_slope", &ClassifierVerdict::fitted_slope)
      .def_readonly("integral_divergent", &ClassifierVerdict::integral_divergent);
  m.def("symbol_ratio", &symbol_ratio, py::arg("g"), py::arg("w"), py::arg("z"));
  m.def("classify_into_sup", &classify_into_sup, py::arg("g"), py::arg("w"), py::arg("p") = 2.0);
  m.def("classify_from_sup", &classify_from_sup, py::arg("g"), py::arg("w"), py::arg("p"),
        py::arg("cfg") = QuadConfig{});
  m.def("carleson_density", &carleson_density, py::arg("g"), py::arg("p"), py::arg("w"),
        py::arg("z"));
  m.def("berezin_tilde", &berezin_tilde, py::arg("g"), py::arg("p"), py::arg("w"), py::arg("t"),
        py::arg("center"), py::arg("cfg") = QuadConfig{});

  py::enum_<SpectralStatus>(m, "SpectralStatus")
      .value("InSpectrum", SpectralStatus::InSpectrum)
      .value("Resolvent", SpectralStatus::Resolvent)
      .value("Boundary", SpectralStatus::Boundary);

  py::class_<SpectrumDescription>(m, "SpectrumDescription")
      .def_readonly("a", &SpectrumDescription::a)
      .def_readonly("radius", &SpectrumDescription::radius)
      .def_readonly("characterization_note", &SpectrumDescription::characterization_note);

  py::class_<SpectrumPointReport>(m, "SpectrumPointReport")
      .def_readonly("lam", &SpectrumPointReport::lambda)
      .def_readonly("status", &SpectrumPointReport::status)
      .def_readonly("has_membership", &SpectrumPointReport::has_membership)
      .def_readonly("raw_membership", &SpectrumPointReport::raw_membership)
      .def_readonly("cross_check_ok", &SpectrumPointReport::cross_check_ok);

  py::class_<ResolventScanPoint>(m, "ResolventScanPoint")
      .def_readonly("lam", &ResolventScanPoint::lambda)
      .def_readonly("status", &ResolventScanPoint::status)
      .def_readonly("lower_bound", &ResolventScanPoint::lower_bound)
      .def_readonly("per_function", &ResolventScanPoint::per_function)
      .def_readonly("notes", &ResolventScanPoint::notes);

  py::class_<ResolventScan>(m, "ResolventScan")
      .def_readonly("points", &ResolventScan::points);

  m.def("spectrum_of", &spectrum_of, py::arg("g"), py::arg("w"));
  m.def("in_spectrum", &in_spectrum, py::arg("g"), py::arg("w"), py::arg("lam"));
  m.def("default_spectral_testset", &default_spectral_testset, py::arg("cfg") = QuadConfig{});
  m.def("resolvent_norm_scan", &resolvent_norm_scan, py::arg("g"), py::arg("w"),
        py::arg("lambdas"), py::arg("testset"), py::arg("cfg") = QuadConfig{});
  m.def("resolvent_defect", &resolvent_defect, py::arg("g"), py::arg("lam"), py::arg("h"),
        py::arg("f"), py::arg("z"), py::arg("cfg") = QuadConfig{});

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("index", &CriterionResult::index)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("passed", &CriterionResult::passed)
      .def_readonly("elapsed_seconds", &CriterionResult::elapsed_seconds)
      .def_readonly("detail", &CriterionResult::detail);
  m.def("run_criterion", &run_criterion, py::arg("index"), py::arg("cfg") = QuadConfig{},
        py::arg("cache_dir") = std::string{});
}

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tightframe/error.hpp"
#include "tightframe/frames.hpp"
#include "tightframe/gu.hpp"
#include "tightframe/lsf.hpp"
#include "tightframe/matrix_file.hpp"
#include "tightframe/neumark.hpp"
#include "tightframe/quantum.hpp"

namespace py = pybind11;
using namespace tightframe;

namespace {

py::dict lsf_dict(const LsfResult& r) {
  py::dict d;
  d["frame"] = r.frame;
  d["scale"] = r.scale;
  d["residual"] = r.residual;
  d["singular_values"] = r.singular_values;
  d["rank"] = r.rank;
  return d;
}

py::tuple polar_tuple(const PolarFactors& f) {
  return py::make_tuple(f.isometry_part, f.hermitian_part);
}

}  // namespace

PYBIND11_MODULE(_tightframe, m) {
  m.doc() = "Tight frame construction, least-squares frames and rank-one measurements.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<FrameReport>(m, "FrameReport")
      .def_readonly("is_tight", &FrameReport::is_tight)
      .def_readonly("beta", &FrameReport::beta)
      .def_readonly("lower_bound", &FrameReport::lower_bound)
      .def_readonly("upper_bound", &FrameReport::upper_bound)
      .def_readonly("rank", &FrameReport::rank)
      .def_readonly("redundancy", &FrameReport::redundancy)
      .def_readonly("singular_values", &FrameReport::singular_values)
      .def("__repr__", [](const FrameReport& r) {
        return "<FrameReport tight=" + std::string(r.is_tight ? "True" : "False") +
               " rank=" + std::to_string(r.rank) + ">";
      });

  m.def("analyze_frame", &analyze_frame, py::arg("F"), py::arg("tol") = kDefaultTightTol,
        py::arg("rank_tol") = kDefaultRankTol);

  m.def(
      "expansion_coefficients",
      [](const ComplexMatrix& F, double beta, const ComplexVector& x, bool project, double tol) {
        ExpansionOptions opts;
        opts.project = project;
        opts.tol = tol;
        return expansion_coefficients(F, beta, x, opts);
      },
      py::arg("F"), py::arg("beta"), py::arg("x"), py::arg("project") = false,
      py::arg("tol") = 1e-9);

  m.def(
      "neumark_extension",
      [](const ComplexMatrix& F, double tol) {
        const NeumarkExtension ext = extend(F, tol);
        return py::make_tuple(ext.extended, ext.beta,
                              ext.case_tag == ExtensionCase::WithinSpace ? "within-space"
                                                                         : "expanded-space");
      },
      py::arg("F"), py::arg("tol") = kDefaultTightTol,
      "Returns (extended, beta, case).");

  m.def(
      "clsf", [](const ComplexMatrix& Phi, double beta0) { return lsf_dict(clsf(Phi, beta0)); },
      py::arg("Phi"), py::arg("beta0") = 1.0);
  m.def(
      "ulsf", [](const ComplexMatrix& Phi) { return lsf_dict(ulsf(Phi)); }, py::arg("Phi"));
  m.def(
      "canonical", [](const ComplexMatrix& Phi) { return canonical(Phi); }, py::arg("Phi"));
  m.def(
      "polar", [](const ComplexMatrix& Phi) { return polar_tuple(polar(Phi)); }, py::arg("Phi"),
      "Returns (H, Y) with Phi = H Y.");
  m.def(
      "tpd", [](const ComplexMatrix& Phi, int p) { return polar_tuple(tpd(Phi, p)); },
      py::arg("Phi"), py::arg("order"));

  m.def(
      "gu_canonical",
      [](const ComplexMatrix& Phi, const std::vector<int>& group, std::vector<int> map) {
        const AbelianGroup G(group);
        const GroupMap gm = map.empty() ? GroupMap::identity(G.order()) : GroupMap{std::move(map)};
        return gu_canonical(Phi, G, gm);
      },
      py::arg("Phi"), py::arg("group"), py::arg("map") = std::vector<int>{});
  m.def(
      "gu_set",
      [](const std::vector<ComplexMatrix>& generators, const ComplexVector& phi) {
        const GuSet s = generate_gu_set(generators, phi);
        return py::make_tuple(s.Phi, s.group.factors(), s.elements);
      },
      py::arg("generators"), py::arg("phi"), "Returns (Phi, group factors, group elements).");

  m.def(
      "probabilities",
      [](const ComplexMatrix& F, const ComplexVector& phi) {
        return probabilities(povm_from_frame(F), phi);
      },
      py::arg("F"), py::arg("phi"));
  m.def(
      "sample",
      [](const ComplexMatrix& F, const ComplexVector& phi, std::uint64_t trials,
         std::uint64_t seed) { return sample_outcomes(povm_from_frame(F), phi, trials, seed); },
      py::arg("F"), py::arg("phi"), py::arg("trials"), py::arg("seed") = 0);
  m.def(
      "lsm", [](const ComplexMatrix& states) { return lsm(states).matrix; }, py::arg("states"));
  m.def(
      "detection_error",
      [](const ComplexMatrix& M, const ComplexMatrix& states) {
        return detection_error(povm_from_frame(M), states);
      },
      py::arg("M"), py::arg("states"));

  m.def("read_matrix", &read_matrix_file, py::arg("path"));
  m.def("write_matrix", &write_matrix_file, py::arg("path"), py::arg("A"));
}

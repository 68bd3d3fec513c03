#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricdm/graded_dmod.hpp"
#include "toricdm/presentation.hpp"
#include "toricdm/report.hpp"

namespace py = pybind11;
using namespace toricdm;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) fail(ErrorCode::InvalidInput, "matrix must be non-empty");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix");
  return IntMatrix::from_rows(rows, cols);
}

// Reports go across as JSON text; the package decodes them.
std::pair<std::string, int> run(const std::string& command, const std::string& problem_text, const std::string& source) {
  RunOptions o;
  o.command = command;
  o.source = source;
  try {
    const auto r = run_command(parse_problem(problem_text), o);
    return {render_machine(r.report), r.exit_code};
  } catch (const Error& e) {
    return {render_machine(error_report(o, e)), exit_code_for(e.code())};
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> exc(m, "ToricError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(exc.ptr(), py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  m.attr("REPORT_SCHEMA") = kReportSchema;

  py::class_<ToricPresentation>(m, "Presentation")
      .def(py::init([](const std::vector<std::vector<std::int64_t>>& rows) { return ToricPresentation(to_matrix(rows)); }),
           py::arg("matrix"))
      .def_property_readonly("d", &ToricPresentation::d)
      .def_property_readonly("n", &ToricPresentation::n)
      .def_property_readonly("columns", &ToricPresentation::columns)
      .def_property_readonly("pointed", &ToricPresentation::pointed)
      .def_property_readonly("simplicial", &ToricPresentation::simplicial)
      .def_property_readonly("facets",
                             [](const ToricPresentation& P) {
                               std::vector<Degree> out;
                               for (const auto& f : P.facets()) out.push_back(f.coefficients);
                               return out;
                             })
      .def_property_readonly("normal", [](const ToricPresentation& P) { return P.classification().normal; })
      .def_property_readonly("scored", [](const ToricPresentation& P) { return P.classification().scored; })
      .def_property_readonly("s2", [](const ToricPresentation& P) { return P.classification().s2; })
      .def("contains", &ToricPresentation::member_NA, py::arg("degree"))
      .def("contains_in_face_shift", &ToricPresentation::member_NA_plus_face, py::arg("degree"), py::arg("face_id"))
      .def("decompose", &ToricPresentation::decompose, py::arg("degree"))
      .def("n_sigma", [](const ToricPresentation& P, const Degree& a, std::size_t s) { return n_sigma(P, a, s); },
           py::arg("degree"), py::arg("facet_id"))
      .def("gr_monomial", [](const ToricPresentation& P, const Degree& a) {
        const auto g = gr_monomial(P, a);
        return std::make_pair(g.degree, g.theta_exponents);
      }, py::arg("degree"))
      .def("gr_generators_dim1", [](const ToricPresentation& P) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& g : gr_generators_dim1(P)) out.emplace_back(g[0], g[1]);
        return out;
      })
      .def("interior_point", &interior_point);

  m.def("run", &run, py::arg("command"), py::arg("problem_text"), py::arg("source") = "<string>");
}

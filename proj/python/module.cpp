#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minorsign/io.hpp"
#include "minorsign/suite.hpp"

namespace py = pybind11;
using namespace minorsign;

namespace {

Rational cell_to_rational(const py::handle& cell) {
    if (py::isinstance<py::bool_>(cell)) throw py::type_error("matrix entries cannot be booleans");
    if (py::isinstance<py::int_>(cell)) {
        // arbitrary-size python ints survive the string route exactly
        auto parsed = Rational::parse(py::str(cell).cast<std::string>());
        if (!parsed) throw py::value_error("cannot convert integer entry");
        return *parsed;
    }
    if (py::isinstance<py::float_>(cell)) return Rational::from_double(cell.cast<double>());
    if (py::isinstance<py::str>(cell)) {
        auto parsed = Rational::parse(cell.cast<std::string>());
        if (!parsed) throw py::value_error("cannot parse entry \"" + cell.cast<std::string>() + "\"");
        return *parsed;
    }
    throw py::type_error("matrix entries must be int, float, or str");
}

Matrix matrix_from_py(const py::sequence& rows) {
    std::vector<std::vector<Rational>> entries;
    for (const py::handle& row : rows) {
        std::vector<Rational> r;
        for (const py::handle& cell : py::cast<py::sequence>(row)) r.push_back(cell_to_rational(cell));
        entries.push_back(std::move(r));
    }
    return Matrix::from_rows(entries);
}

std::string classify_json(const py::sequence& rows, int cap) {
    Matrix m = matrix_from_py(rows);
    ClassifyOptions opts{cap};
    ClassifyRun run = run_classify(m, opts);
    return classify_report(MatrixDocument::from_matrix(m), run, cap).dump();
}

std::string verify_json(const py::sequence& rows, int cap) {
    Matrix m = matrix_from_py(rows);
    ClassifyOptions opts{cap};
    ConsistencyReport report = check_consistency(m, opts);
    return verify_report(MatrixDocument::from_matrix(m), report, cap).dump();
}

std::vector<std::string> char_poly_py(const py::sequence& rows) {
    CharPoly cp = char_poly_faddeev(matrix_from_py(rows));
    std::vector<std::string> out;
    for (const Rational& a : cp.coeffs) out.push_back(a.str());
    return out;
}

std::vector<std::string> minor_sums_py(const py::sequence& rows) {
    std::vector<std::string> out;
    for (const Rational& e : minor_sums(matrix_from_py(rows))) out.push_back(e.str());
    return out;
}

py::dict root_counts_py(const py::sequence& rows) {
    RootCount rc = root_counts(char_poly_faddeev(matrix_from_py(rows)).as_polynomial());
    py::dict out;
    out["pos"] = rc.pos;
    out["neg"] = rc.neg;
    out["zero"] = rc.zero;
    out["nonreal"] = rc.nonreal;
    return out;
}

std::string hunt_json(const std::string& class_name, int n, int count, std::uint64_t seed, bool symmetric,
                      long max_trials, int cap) {
    auto target = MatrixClass::from_name(class_name);
    if (!target) throw py::value_error("unknown class \"" + class_name + "\"");
    GenSpec spec;
    spec.target = *target;
    spec.n = n;
    spec.count = count;
    spec.seed = seed;
    spec.symmetric = symmetric;
    spec.max_trials = max_trials;
    GenResult result = generate(spec, ClassifyOptions{cap});
    Json out;
    out["witnesses"] = Json::array();
    for (const Matrix& m : result.matrices)
        out["witnesses"].push_back(matrix_document_to_json(MatrixDocument::from_matrix(m)));
    out["trials_used"] = result.trials_used;
    out["exhausted"] = result.exhausted;
    return out.dump();
}

std::vector<std::string> class_names() {
    std::vector<std::string> out;
    for (const MatrixClass& c : all_classes()) out.push_back(c.name());
    return out;
}

}  // namespace

PYBIND11_MODULE(_minorsign, m) {
    m.doc() = "exact principal-minor sign classes and real-eigenvalue counts";

    m.def("classify_json", &classify_json, py::arg("rows"), py::arg("cap") = default_minor_cap,
          "Class memberships, minors, and minor sums as a JSON report string.");
    m.def("verify_json", &verify_json, py::arg("rows"), py::arg("cap") = default_minor_cap,
          "Full consistency report (classes, char poly, root counts, predictions) as JSON.");
    m.def("char_poly", &char_poly_py, py::arg("rows"),
          "Monic characteristic polynomial coefficients a_0..a_n as canonical strings.");
    m.def("minor_sums", &minor_sums_py, py::arg("rows"), "E_1..E_n as canonical strings.");
    m.def("root_counts", &root_counts_py, py::arg("rows"),
          "Real-eigenvalue counts with multiplicity: pos/neg/zero/nonreal.");
    m.def("hunt_json", &hunt_json, py::arg("class_name"), py::arg("n"), py::arg("count") = 1,
          py::arg("seed") = 0, py::arg("symmetric") = false, py::arg("max_trials") = 0,
          py::arg("cap") = default_minor_cap, "Verified witness matrices of a class, as JSON.");
    m.def("table_text", &render_prediction_table, "The prediction table for symbolic n.");
    m.def("class_names", &class_names, "The 24 class names in canonical order.");

    m.attr("DEFAULT_CAP") = default_minor_cap;

    py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);
}

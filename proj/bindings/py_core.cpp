// Python bindings for the mtl core: table builders, twisted sums, residue
// main terms, Laurent data, special functions, and the zeros audit.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtl/arith.hpp"
#include "mtl/laurent.hpp"
#include "mtl/mainterm.hpp"
#include "mtl/special.hpp"
#include "mtl/table_io.hpp"
#include "mtl/twist.hpp"
#include "mtl/zeros.hpp"

namespace py = pybind11;
using namespace mtl;

namespace {

py::array_t<double> values_array(const ArithTable& t) {
    // copy out: index i holds the value at n = i, entry 0 unused
    py::array_t<double> out(t.values.size());
    std::copy(t.values.begin(), t.values.end(), out.mutable_data());
    return out;
}

ScanSpec make_spec(int k, const std::string& variant, std::vector<double> x_grid,
                   std::vector<double> y_list, std::uint64_t n_max, int threads,
                   const std::string& out) {
    ScanSpec spec;
    spec.k = k;
    spec.family = parse_family(variant);
    spec.x_grid = std::move(x_grid);
    spec.y_list = std::move(y_list);
    spec.n_max = n_max ? n_max
                       : static_cast<std::uint64_t>(
                             spec.x_grid.empty() ? 2.0 : std::ceil(spec.x_grid.back()));
    spec.threads = threads;
    spec.output_path = out;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "twisted von Mangoldt sums, residue main terms, and RH-normalized remainders";

    py::register_exception<ArgumentError>(m, "MtlArgumentError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "MtlDomainError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "MtlRangeError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "MtlFormatError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "MtlValidationError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "MtlResourceError", PyExc_RuntimeError);
    py::register_exception<NumericalError>(m, "MtlNumericalError", PyExc_RuntimeError);

    py::class_<ArithTable>(m, "ArithTable")
        .def_property_readonly("n_max", [](const ArithTable& t) { return t.n_max; })
        .def_property_readonly("variant",
                               [](const ArithTable& t) { return t.variant.name(); })
        .def_property_readonly("values", &values_array,
                               "entry i is the value at n = i; entry 0 is unused")
        .def("__getitem__",
             [](const ArithTable& t, std::uint64_t n) {
                 if (n < 1 || n > t.n_max) throw py::index_error();
                 return t.values[n];
             })
        .def("__len__", [](const ArithTable& t) { return t.n_max; });

    m.def("sieve_von_mangoldt", &sieve_von_mangoldt, py::arg("n_max"));
    m.def("sieve_moebius", &sieve_moebius, py::arg("n_max"));
    m.def("natural_log_table", &natural_log_table, py::arg("n_max"));
    m.def("dirichlet_convolve", &dirichlet_convolve, py::arg("f"), py::arg("g"));
    m.def("lambda_conv_power", &lambda_conv_power, py::arg("k"), py::arg("n_max"));
    m.def("lambda_generalized", &lambda_generalized, py::arg("k"), py::arg("n_max"));
    m.def("lambda_generalized_oracle", &lambda_generalized_oracle, py::arg("k"),
          py::arg("n"), "divisor-sum oracle for lambda_generalized");
    m.def("save_table",
          [](const ArithTable& t, const std::string& path) { save_table(t, path); });
    m.def("load_table", [](const std::string& path) { return load_table(path); });

    py::class_<LaurentSeries>(m, "LaurentSeries")
        .def_property_readonly("pole_order", &LaurentSeries::pole_order)
        .def_property_readonly("max_regular_order", &LaurentSeries::max_regular_order)
        .def("a", &LaurentSeries::a, py::arg("m"),
             "principal coefficient of (s-1)^(-m)")
        .def("b", &LaurentSeries::b, py::arg("n"), "regular coefficient of (s-1)^n")
        .def("eval", &LaurentSeries::eval, py::arg("h"), "value at s = 1 + h");

    m.def("stieltjes_constants", &stieltjes_constants, py::arg("m_max"));
    m.def("zeta_laurent", &zeta_laurent, py::arg("m_max"));
    m.def(
        "alpha_laurent",
        [](int k, const std::string& variant) {
            return alpha_laurent(k, parse_family(variant));
        },
        py::arg("k"), py::arg("variant"),
        "Laurent data at s=1 of (-1)^k (zeta'/zeta)^k  [conv] or (-1)^k zeta^(k)/zeta  [gen]");

    m.def("residue_basis", &residue_basis, py::arg("m"), py::arg("x"), py::arg("y"));
    m.def(
        "main_term",
        [](int k, const std::string& variant, double x, double y) {
            return main_term(MainTermSpec::make(k, parse_family(variant)), x, y);
        },
        py::arg("k"), py::arg("variant"), py::arg("x"), py::arg("y"),
        "residue main term at w = 1 - iy");
    m.def(
        "main_term_closed_k2",
        [](const std::string& variant, double x, double y) {
            return main_term_closed_k2(parse_family(variant), x, y);
        },
        py::arg("variant"), py::arg("x"), py::arg("y"));
    m.def(
        "saloni_check",
        [](int m_ord, double y, complex s, double X) {
            const auto r = saloni_check(m_ord, y, s, X);
            return py::make_tuple(r.lhs, r.rhs, r.defect);
        },
        py::arg("m"), py::arg("y"), py::arg("s"), py::arg("X") = 1e10,
        "(lhs, rhs, defect) of the residue-integral identity");

    m.def("twisted_sum", &twisted_sum, py::arg("table"), py::arg("x"), py::arg("y"));
    m.def(
        "prefix_scan",
        [](const ArithTable& t, double y, std::vector<double> grid) {
            return prefix_scan(t, y, grid);
        },
        py::arg("table"), py::arg("y"), py::arg("x_grid"));

    py::class_<TwistRecord>(m, "TwistRecord")
        .def_readonly("x", &TwistRecord::x)
        .def_readonly("y", &TwistRecord::y)
        .def_readonly("psi", &TwistRecord::psi)
        .def_readonly("main", &TwistRecord::main)
        .def_readonly("remainder", &TwistRecord::remainder)
        .def_readonly("normalized", &TwistRecord::normalized)
        .def("__repr__", [](const TwistRecord& r) {
            return "TwistRecord(x=" + std::to_string(r.x) + ", y=" + std::to_string(r.y) +
                   ", normalized=" + std::to_string(r.normalized) + ")";
        });

    m.def(
        "scan",
        [](int k, const std::string& variant, std::vector<double> x_grid,
           std::vector<double> y_list, std::uint64_t n_max, int threads,
           const std::string& out) {
            const ScanSpec spec = make_spec(k, variant, std::move(x_grid),
                                            std::move(y_list), n_max, threads, out);
            const ScanResult r = scan(spec);
            return py::make_tuple(r.records, r.max_normalized);
        },
        py::arg("k"), py::arg("variant"), py::arg("x_grid"), py::arg("y_list"),
        py::arg("n_max") = 0, py::arg("threads") = 1, py::arg("out") = "",
        "(records, max_normalized); writes CSV when out is set");

    m.def("zeta_derivatives", &zeta_derivatives, py::arg("s"), py::arg("j_max"));
    m.def(
        "dirichlet_identity_check",
        [](int k, const std::string& variant, double s, std::uint64_t N) {
            const auto r = dirichlet_identity_check(k, parse_family(variant), s, N);
            return py::make_tuple(r.partial, r.closed, r.tail_bound);
        },
        py::arg("k"), py::arg("variant"), py::arg("s"), py::arg("n_max") = 100000,
        "(partial, closed, tail_bound)");
    m.def("digamma", &digamma, py::arg("s"));
    m.def("polygamma", &polygamma, py::arg("ell"), py::arg("s"));

    py::class_<ZeroTable>(m, "ZeroTable")
        .def_property_readonly("ordinates",
                               [](const ZeroTable& t) { return t.ordinates; })
        .def_property_readonly("count", &ZeroTable::count)
        .def("head", &ZeroTable::head, py::arg("n"));
    m.def("load_zeros", [](const std::string& path) { return load_zeros(path); },
          py::arg("path"));
    m.def(
        "zero_sum_linear",
        [](const ZeroTable& t, complex s) {
            const auto r = zero_sum_linear(t, s);
            return py::make_tuple(r.sum, r.b_estimate, r.tail_estimate);
        },
        py::arg("table"), py::arg("s"), "(sum, b_estimate, tail_estimate)");
    m.def(
        "zero_sum_power",
        [](const ZeroTable& t, int k, complex s) {
            const auto r = zero_sum_power(t, k, s);
            return py::make_tuple(r.sum, r.tail_estimate);
        },
        py::arg("table"), py::arg("k"), py::arg("s"), "(sum, tail_estimate)");
}

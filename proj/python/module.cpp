// python bindings for the row-verification toolkit
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omf/gens.hpp"
#include "omf/verify.hpp"

namespace py = pybind11;
using namespace omf;

namespace {

std::string big_str(const cpp_int& v) { return v.str(); }

py::dict report_to_dict(const RowReport& r) {
    py::dict d;
    d["row"] = r.row;
    d["m"] = r.m;
    d["q"] = r.q;
    d["variant"] = r.variant;
    d["method"] = r.method;
    d["z_order"] = py::int_(py::str(big_str(r.z_order)));
    d["x_order"] = py::int_(py::str(big_str(r.x_order)));
    d["y_order"] = py::int_(py::str(big_str(r.y_order)));
    d["datum"] = r.datum;
    d["orbit_size"] = py::int_(py::str(big_str(r.orbit_size)));
    d["intersection_order"] = py::int_(py::str(big_str(r.intersection_order)));
    d["expected_value"] = py::int_(py::str(big_str(r.expected_value)));
    d["expected_provenance"] = r.expected_provenance;
    d["status"] = r.status;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_omfact, mod) {
    mod.doc() = "exact verification of minus-type orthogonal group factorizations";

    mod.def(
        "verify_row",
        [](int row, int m, int q, const std::string& variant, bool heavy) {
            RowSpec spec{row, m, q, variant, false};
            VerifyOptions opt;
            opt.heavy = heavy;
            return report_to_dict(verify_row(spec, opt));
        },
        py::arg("row"), py::arg("m"), py::arg("q"), py::arg("variant") = "",
        py::arg("heavy") = false,
        "run one factorization-row check and return the report as a dict");

    mod.def(
        "mandatory_rows",
        []() {
            py::list out;
            for (const RowSpec& s : mandatory_matrix()) {
                py::dict d;
                d["row"] = s.row;
                d["m"] = s.m;
                d["q"] = s.q;
                d["variant"] = s.variant;
                out.append(d);
            }
            return out;
        },
        "the desk-scale mandatory suite as a list of row specs");

    mod.def(
        "row_params_ok",
        [](int row, int m, int q) {
            std::string why;
            bool ok = row_params_ok(row, m, q, &why);
            return py::make_tuple(ok, why);
        },
        py::arg("row"), py::arg("m"), py::arg("q"),
        "validate row parameters; returns (ok, reason)");

    mod.def(
        "omega_minus_order",
        [](int m, int q) { return py::int_(py::str(big_str(omega_minus_order(m, q)))); },
        py::arg("m"), py::arg("q"), "|Omega^-_{2m}(q)| as an exact integer");
    mod.def(
        "su_order", [](int n, int q) { return py::int_(py::str(big_str(su_order(n, q)))); },
        py::arg("n"), py::arg("q"), "|SU_n(q)| as an exact integer");
    mod.def("mathieu12_order",
            []() { return py::int_(py::str(big_str(mathieu12_order()))); });

    mod.def(
        "identity_row",
        [](int row, int m, int q) {
            py::list out;
            for (const IdentityResult& r : identity_row(row, m, q)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("row"), py::arg("m"), py::arg("q"),
        "big-integer identity checks for one row at (m, q)");

    mod.def(
        "identity_suite_ok",
        []() {
            for (const IdentityResult& r : identity_suite())
                if (!r.pass) return false;
            return true;
        },
        "true iff the whole arithmetic identity suite passes");

    mod.def(
        "singular_vector_count",
        [](int m, int p, int e) {
            const Field& F = Field::get(p, e);
            QuadraticSpace sp = minus_standard_space(m, F);
            return enumerate_value_set(sp, 0).size();
        },
        py::arg("m"), py::arg("p"), py::arg("e") = 1,
        "number of nonzero singular vectors of the standard minus space");

    mod.def(
        "group_order_from_gens",
        [](int which, int m, int p, int e) {
            const Field& F = Field::get(p, e);
            if (which == 0)
                return py::int_(
                    py::str(big_str(group_order(omega_minus_gens(minus_standard_space(m, F))))));
            return py::int_(py::str(big_str(group_order(su_gens(hermitian_standard(m, F))))));
        },
        py::arg("which"), py::arg("m"), py::arg("p"), py::arg("e"),
        "chain-computed order (which = 0: minus-type Omega, 1: SU)");

    mod.def("emit_report_json", [](int row, int m, int q) {
        return emit_report_json({verify_row(row, m, q)});
    });
}

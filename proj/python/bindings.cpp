#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclic_shape/cli.hpp"
#include "cyclic_shape/errors.hpp"
#include "cyclic_shape/json_io.hpp"
#include "cyclic_shape/trace_forms.hpp"

namespace py = pybind11;
using namespace cyclic_shape;

namespace {

// Python ints cross the boundary as decimal strings so magnitude is unbounded.
BigInt to_big(const py::int_& x) { return parse_bigint(py::str(x)); }

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(x).c_str(), nullptr, 10));
}

FactoredDiscriminant make_disc(int sign, const std::vector<std::pair<py::int_, unsigned>>& factors) {
    std::vector<PrimePower> pp;
    for (const auto& [p, e] : factors) pp.push_back({to_big(p), e});
    return FactoredDiscriminant(sign, std::move(pp));
}

py::list rows(const IntMatrix& M) {
    py::list out;
    for (std::size_t i = 1; i <= M.dim(); ++i) {
        py::list row;
        for (std::size_t j = 1; j <= M.dim(); ++j) row.append(to_py(M(i, j)));
        out.append(row);
    }
    return out;
}

IntMatrix matrix(const std::vector<std::vector<py::int_>>& rows) {
    std::vector<std::vector<BigInt>> big;
    for (const auto& r : rows) {
        auto& out = big.emplace_back();
        for (const auto& x : r) out.push_back(to_big(x));
    }
    return IntMatrix::from_rows(big);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trace-zero Gram matrices of tame cyclic number fields";

    static py::exception<Error> base(m, "CyclicShapeError", PyExc_ValueError);
    static py::exception<ValidationError> validation(m, "ValidationError", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<InvariantError> invariant(m, "InvariantError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            py::set_error(validation, e.what());
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const InvariantError& e) {
            py::set_error(invariant, e.what());
        }
    });

    m.def(
        "trace_zero_gram",
        [](Degree deg, int sign, const std::vector<std::pair<py::int_, unsigned>>& factors, const std::string& mode) {
            return rows(build_trace_zero(deg, make_disc(sign, factors), parse_mode(mode)).gram);
        },
        py::arg("m"), py::arg("sign"), py::arg("factors"), py::arg("mode") = "strict");

    m.def(
        "full_trace_gram",
        [](Degree deg, int sign, const std::vector<std::pair<py::int_, unsigned>>& factors, const std::string& mode) {
            return rows(build_full_trace(deg, make_disc(sign, factors), parse_mode(mode)).gram);
        },
        py::arg("m"), py::arg("sign"), py::arg("factors"), py::arg("mode") = "strict");

    m.def(
        "coefficients",
        [](Degree deg, int sign, const std::vector<std::pair<py::int_, unsigned>>& factors, const std::string& mode) {
            const auto table = coeff_table(validate_tame_cyclic(deg, make_disc(sign, factors), parse_mode(mode)));
            py::dict out;
            for (const auto& [d, e] : table.entries()) out[py::int_(d)] = to_py(e.value);
            return out;
        },
        py::arg("m"), py::arg("sign"), py::arg("factors"), py::arg("mode") = "strict");

    m.def(
        "determinant", [](const std::vector<std::vector<py::int_>>& g) { return to_py(det_exact(matrix(g))); },
        py::arg("rows"));

    m.def(
        "isometric",
        [](const std::vector<std::vector<py::int_>>& a, const std::vector<std::vector<py::int_>>& b) {
            const auto r = isometric(matrix(a), matrix(b));
            py::dict out;
            out["verdict"] = to_string(r.verdict);
            if (r.witness) out["witness"] = rows(*r.witness);
            if (r.verdict == Verdict::not_isometric) {
                out["invariant"] = r.invariant;
                out["left"] = r.left_value;
                out["right"] = r.right_value;
            }
            return out;
        },
        py::arg("left"), py::arg("right"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line; returns (exit_code, stdout, stderr).");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stirling_kit/checks.hpp"
#include "stirling_kit/cli.hpp"
#include "stirling_kit/hankel.hpp"
#include "stirling_kit/io.hpp"
#include "stirling_kit/sequences.hpp"
#include "stirling_kit/stirling.hpp"
#include "stirling_kit/transform.hpp"

namespace py = pybind11;
using namespace stirling_kit;

namespace {

using Texts = std::vector<std::string>;

SequenceValues values_of(const Texts& texts, const std::string& domain) {
    if (texts.empty()) throw std::invalid_argument("empty sequence");
    return parse_values(texts, parse_domain_tag(domain));
}

template <class T>
Texts texts_of(const std::vector<T>& values) {
    Texts out;
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

Texts transform(const Texts& texts, const std::string& domain, bool inverse) {
    return std::visit([&](const auto& v) { return texts_of(inverse ? inverse_stirling_transform(v) : stirling_transform(v)); },
                      values_of(texts, domain));
}

std::vector<Texts> matrix(const Texts& texts, const std::string& domain, const std::string& from, int rows, int cols) {
    if (from != "initial" && from != "final") throw std::invalid_argument("from must be \"initial\" or \"final\"");
    return std::visit(
        [&](const auto& v) {
            const auto block = from == "initial" ? build_from_initial(v, rows, cols) : build_from_final(v, rows, cols);
            std::vector<Texts> out;
            for (const auto& row : block.entries()) out.push_back(texts_of(row));
            return out;
        },
        values_of(texts, domain));
}

Texts hankel(const Texts& texts, const std::string& domain, int n_max) {
    return std::visit([&](const auto& v) { return texts_of(hankel_transform(v, n_max)); }, values_of(texts, domain));
}

py::tuple check(const std::string& suite, int max_n) {
    CheckOptions options;
    options.max_n = max_n;
    const auto reports = run_checks(suite, options);
    return py::make_tuple(all_passed(reports), render_report_text(reports));
}

py::tuple cli(const std::vector<std::string>& args) {
    std::vector<std::string> argv{"stirling-kit"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Stirling transforms over integers, rationals, Q(sqrt 5) and polynomials";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const std::domain_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        }
    });

    m.def("sequence_names", &registry_names, "Names accepted by generate()");
    m.def(
        "generate",
        [](const std::string& name, int length) {
            const auto record = generate(name, length);
            return py::make_tuple(std::string(domain_name(record.domain())), render_values(record.values));
        },
        py::arg("name"), py::arg("length"), "(domain, canonical texts) of a built-in sequence");
    m.def("transform", &transform, py::arg("values"), py::arg("domain"), py::arg("inverse") = false);
    m.def("matrix", &matrix, py::arg("values"), py::arg("domain"), py::arg("built_from"), py::arg("rows"), py::arg("cols"));
    m.def("hankel_transform", &hankel, py::arg("values"), py::arg("domain"), py::arg("n_max"));
    m.def("stirling1", [](int n, int k) { return stirling1(n, k).get_str(); }, py::arg("n"), py::arg("k"));
    m.def("stirling2", [](int n, int k) { return stirling2(n, k).get_str(); }, py::arg("n"), py::arg("k"));
    m.def("r_stirling2", [](int r, int n, int k) { return r_stirling2(r, n, k).get_str(); }, py::arg("r"), py::arg("n"), py::arg("k"));
    m.def("check", &check, py::arg("suite") = "all", py::arg("max_n") = 12, "(all passed, text report)");
    m.def("run_cli", &cli, py::arg("args"), "(exit code, stdout, stderr) of the command line");
}

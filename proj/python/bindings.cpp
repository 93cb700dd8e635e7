#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "confcoh/dga.hpp"
#include "confcoh/errors.hpp"
#include "confcoh/io.hpp"
#include "confcoh/qformula.hpp"
#include "confcoh/repr.hpp"

namespace py = pybind11;
using namespace confcoh;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::list to_py(const std::vector<Integer>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

// {(i, j): multiplicity}
py::dict to_py(const repr::VirtualRep& rep) {
    py::dict out;
    for (const auto& [label, mult] : rep.terms()) out[py::make_tuple(label.i(), label.j())] = to_py(mult);
    return out;
}

// {(k, h): {(i, j): multiplicity}}
py::dict to_py(const qformula::MixedTable& table) {
    py::dict out;
    for (const auto& [kh, rep] : table.entries) out[py::make_tuple(kh.first, kh.second)] = to_py(rep);
    return out;
}

py::dict to_py(const std::map<std::pair<int, int>, Integer>& dims) {
    py::dict out;
    for (const auto& [kh, d] : dims) out[py::make_tuple(kh.first, kh.second)] = to_py(d);
    return out;
}

dga::Model parse_model(const std::string& name) {
    if (name == "A") return dga::Model::A;
    if (name == "B") return dga::Model::B;
    throw InvalidArgument("model must be \"A\" or \"B\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weight-graded Betti numbers of UConf_n on a closed genus-g surface";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
    py::register_exception<NotACharacter>(m, "NotACharacter", error.ptr());
    py::register_exception<Genus0N1Unsupported>(m, "Genus0N1Unsupported", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    m.def(
        "dim_irrep", [](int genus, int i, int j) { return to_py(repr::dim_irrep(genus, repr::RepLabel::make(genus, i, j))); },
        py::arg("genus"), py::arg("i"), py::arg("j"), "Dimension of V(i,j) for sp(2g).");
    m.def(
        "weyl_dim", [](int genus, const std::vector<int>& weight) { return to_py(repr::weyl_dim(genus, weight)); },
        py::arg("genus"), py::arg("weight"), "Weyl dimension of a dominant weight given in e-coordinates.");
    m.def(
        "sl_hook_dim", [](int genus, int i, int j) { return to_py(repr::sl_hook_dim(genus, i, j)); }, py::arg("genus"),
        py::arg("i"), py::arg("j"));

    m.def(
        "betti", [](int genus, int n) { return to_py(qformula::betti(genus, n)); }, py::arg("genus"), py::arg("n"),
        "Betti numbers b_0, b_1, ... of UConf_n.");
    m.def(
        "euler_series", [](int genus, int max_n) { return to_py(qformula::euler_series(genus, max_n)); },
        py::arg("genus"), py::arg("max_n"));
    m.def(
        "mixed_table", [](int genus, int n) { return to_py(qformula::mixed_table(genus, n)); }, py::arg("genus"),
        py::arg("n"), "{(k, h): {(i, j): multiplicity}} for H^k of weight h.");
    m.def(
        "mixed_table_json", [](int genus, int n) { return io::to_json(qformula::mixed_table(genus, n)).dump(); },
        py::arg("genus"), py::arg("n"));
    m.def(
        "q_series",
        [](int genus, int max_n, bool dims) {
            const auto q = qformula::build_Q(genus, max_n);
            return dims ? io::render_series_dims(q, genus) : io::render_series(q);
        },
        py::arg("genus"), py::arg("max_n"), py::arg("dims") = false);

    m.def(
        "oracle_dims",
        [](int genus, int n, const std::string& model, unsigned threads) {
            dga::OracleOptions options;
            options.threads = threads;
            std::map<std::pair<int, int>, Integer> dims;
            {
                py::gil_scoped_release release;
                dims = dga::regraded_dims(dga::cohomology_dims(genus, n, parse_model(model), options));
            }
            return to_py(dims);
        },
        py::arg("genus"), py::arg("n"), py::arg("model") = "A", py::arg("threads") = 0,
        "{(k, h): dim} computed from the DGA model by exact linear algebra.");
    m.def(
        "oracle_table",
        [](int genus, int n, unsigned threads) {
            dga::OracleOptions options;
            options.threads = threads;
            qformula::MixedTable table;
            {
                py::gil_scoped_release release;
                table = dga::cohomology_reps(genus, n, options);
            }
            return to_py(table);
        },
        py::arg("genus"), py::arg("n"), py::arg("threads") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a confcoh subcommand in-process; returns (exit_code, stdout, stderr).");
}

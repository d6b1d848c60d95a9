#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ahg/report.hpp"

namespace py = pybind11;
using namespace ahg;

namespace {

RunConfig make_config(const std::string& manifold, const std::string& spec, int points,
                      std::uint64_t seed, const std::vector<double>& t, double tol_abs,
                      double tol_rel) {
    RunConfig cfg;
    cfg.manifold = manifold;
    cfg.spec_file = spec;
    cfg.points = points;
    cfg.seed = seed;
    cfg.t_values = t;
    cfg.tol_abs = tol_abs;
    cfg.tol_rel = tol_rel;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "almost Hermitian curvature identity engine";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<Error>(m, "EngineError");

    m.def("catalog", [] {
        py::list out;
        for (const auto& man : catalog()) {
            py::dict d;
            d["name"] = man.name;
            d["dim"] = 2 * man.n;
            d["expected_class"] = man.expected_class;
            d["exportable"] = man.exportable;
            out.append(d);
        }
        return out;
    });

    m.def(
        "verify_report",
        [](const std::string& manifold, const std::string& spec, int points,
           std::uint64_t seed, const std::vector<double>& t, double tol_abs, double tol_rel) {
            return render_report(make_config(manifold, spec, points, seed, t, tol_abs, tol_rel),
                                 "verify");
        },
        py::arg("manifold") = "", py::arg("spec") = "", py::arg("points") = 20,
        py::arg("seed") = 1, py::arg("t") = std::vector<double>{},
        py::arg("tol_abs") = 1e-8, py::arg("tol_rel") = 1e-6);

    m.def(
        "scalars_report",
        [](const std::string& manifold, const std::string& spec, int points,
           std::uint64_t seed, const std::vector<double>& t) {
            return render_report(make_config(manifold, spec, points, seed, t, 1e-8, 1e-6),
                                 "scalars");
        },
        py::arg("manifold") = "", py::arg("spec") = "", py::arg("points") = 4,
        py::arg("seed") = 1, py::arg("t") = std::vector<double>{});

    m.def(
        "classify_report",
        [](const std::string& manifold, const std::string& spec, int points,
           std::uint64_t seed) {
            return render_report(make_config(manifold, spec, points, seed, {}, 1e-8, 1e-6),
                                 "classify");
        },
        py::arg("manifold") = "", py::arg("spec") = "", py::arg("points") = 8,
        py::arg("seed") = 1);

    m.def(
        "integrate_report",
        [](const std::string& manifold, const std::string& integrand, const std::string& spec,
           int points, std::uint64_t seed, const std::vector<double>& t) {
            return render_report(make_config(manifold, spec, points, seed, t, 1e-8, 1e-6),
                                 "integrate", integrand);
        },
        py::arg("manifold"), py::arg("integrand"), py::arg("spec") = "",
        py::arg("points") = 16, py::arg("seed") = 1, py::arg("t") = std::vector<double>{});

    m.def("export_manifold",
          [](const std::string& name) { return manifold_to_json_text(find_manifold(name)); });

    m.def(
        "eval_expr",
        [](const std::string& src, const std::vector<double>& x, int order) {
            ExprAst ast = parse_expr(src, int(x.size()));
            Jet j = eval_expr(ast, x, order);
            py::dict d;
            d["value"] = j.value;
            d["grad"] = j.grad;
            if (order >= 2) d["hess"] = j.hess;
            return d;
        },
        py::arg("src"), py::arg("x"), py::arg("order") = 2);

    m.def("ledger_hash", [] { return ledger_hash(); });
    m.attr("__version__") = "0.1.0";
}

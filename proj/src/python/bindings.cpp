#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "ihara/cli.hpp"
#include "ihara/errors.hpp"
#include "ihara/families.hpp"
#include "ihara/graph_enum.hpp"
#include "ihara/rank_two.hpp"
#include "ihara/spanning_trees.hpp"
#include "ihara/zeta.hpp"

namespace py = pybind11;
using namespace ihara;

namespace {

py::int_ to_py(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list coeffs_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py(c));
    return out;
}

IntPoly poly_from_py(const std::vector<py::int_>& coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.emplace_back(std::string(py::str(py::handle(x))));
    return IntPoly(std::move(c));
}

py::dict report_to_py(const ZetaReport& r) {
    py::dict d;
    d["engine"] = std::string(engine_name(r.engine));
    d["coeffs"] = coeffs_to_py(r.poly);
    d["degree"] = r.degree;
    d["leading_coeff"] = to_py(r.leading_coeff);
    d["girth_readout"] = r.girth_readout;
    d["even"] = r.even;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Ihara zeta polynomials of multigraphs";

    auto base = py::register_exception<Error>(m, "IharaError");
    auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<SizeCapError>(m, "SizeCapError", base.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
    py::register_exception<FormulaViolation>(m, "FormulaViolation", base.ptr());
    py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", input.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", input.ptr());

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init<int>(), py::arg("n_vertices"))
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 Multigraph g(n);
                 for (auto [u, v] : edges) g.add_edge(u, v);
                 return g;
             }),
             py::arg("n_vertices"), py::arg("edges"))
        .def("add_edge", &Multigraph::add_edge, py::arg("u"), py::arg("v"), py::arg("count") = 1)
        .def_property_readonly("n_vertices", &Multigraph::n_vertices)
        .def_property_readonly("n_edges", &Multigraph::n_edges)
        .def_property_readonly("rank", &Multigraph::rank)
        .def("degree", &Multigraph::degree)
        .def("degrees", &Multigraph::degrees)
        .def("loops", &Multigraph::loops)
        .def("multiplicity", &Multigraph::multiplicity)
        .def("edges",
             [](const Multigraph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edge_list()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("to_edge_list_text", &format_edge_list)
        .def(py::self == py::self)
        .def("__repr__", [](const Multigraph& g) {
            std::ostringstream s;
            s << "Multigraph(n_vertices=" << g.n_vertices() << ", n_edges=" << g.n_edges() << ")";
            return s.str();
        });

    m.def("parse_edge_list", py::overload_cast<const std::string&>(&parse_edge_list), py::arg("text"));
    m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
    m.def("structural_report", [](const Multigraph& g) {
        const auto r = structural_report(g);
        py::dict d;
        d["connected"] = r.connected;
        d["min_degree"] = r.min_degree;
        d["rank"] = r.rank;
        d["girth"] = r.girth ? py::object(py::int_(*r.girth)) : py::object(py::none());
        d["bipartite"] = r.bipartite;
        return d;
    });
    m.def("validate", &validate);
    m.def("isomorphic", &isomorphic);
    m.def(
        "enumerate_multigraphs",
        [](int max_edges, int min_degree, bool connected, bool loops, bool multi_edges) {
            EnumerationOptions o;
            o.max_edges = max_edges;
            o.min_degree = min_degree;
            o.connected = connected;
            o.allow_loops = loops;
            o.allow_multi_edges = multi_edges;
            return enumerate_multigraphs(o);
        },
        py::arg("max_edges"), py::arg("min_degree") = 2, py::arg("connected") = true, py::arg("loops") = true,
        py::arg("multi_edges") = true);

    m.def(
        "zeta",
        [](const Multigraph& g, const std::string& engine, int cap) {
            return report_to_py(compute_zeta(g, parse_engine(engine), cap));
        },
        py::arg("graph"), py::arg("engine") = "bass", py::arg("cap") = kDefaultEnumerationCap,
        "Zeta reciprocal report; coeffs[k] is the coefficient of u^k.");
    m.def("zeta_coeffs", [](const Multigraph& g, const std::string& engine, int cap) {
        return coeffs_to_py(compute_zeta(g, parse_engine(engine), cap).poly);
    }, py::arg("graph"), py::arg("engine") = "bass", py::arg("cap") = kDefaultEnumerationCap);
    m.def("linear_subgraph_census", &linear_subgraph_census, py::arg("graph"),
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("poly_to_string", [](const std::vector<py::int_>& c) { return poly_from_py(c).to_string(); });
    m.def("check_invariants", [](const std::vector<py::int_>& c, const Multigraph& g) {
        poly_invariants(poly_from_py(c), g);
    });
    m.attr("DEFAULT_ENUMERATION_CAP") = kDefaultEnumerationCap;

    m.def("family_graph", [](const std::string& spec) { return gen_family(parse_family(spec)); });
    m.def("closed_form", [](const std::string& spec) { return coeffs_to_py(closed_form(parse_family(spec))); });
    m.def("verify_family", [](const std::string& spec) {
        const auto v = verify_family(parse_family(spec));
        py::dict d;
        d["spec"] = format_family(v.spec);
        d["numeric"] = v.numeric;
        d["engine_coeffs"] = coeffs_to_py(v.engine_poly);
        d["worst_residual"] = v.worst_residual;
        return d;
    });

    m.def("tree_count_kirchhoff", [](const Multigraph& g) { return to_py(kirchhoff_tree_count(g)); });
    m.def("tree_count_zeta", [](const Multigraph& g) {
        validate(g);
        return to_py(tree_count_from_zeta(zeta_bass(g).poly, g.rank()).kappa);
    });
    m.def("tree_count_closed_form",
          [](const std::string& spec) { return to_py(tree_count_closed_form(parse_family(spec)).kappa); });

    m.def("enumerate_rank2", [](int max_edges) {
        std::vector<std::string> out;
        for (const auto& s : enumerate_rank2(max_edges)) out.push_back(format_rank_two(s));
        return out;
    });
    m.def("completeness_check", [](int max_edges) {
        py::list rows;
        for (const auto& r : completeness_check(max_edges).rows) {
            py::dict d;
            d["spec"] = format_rank_two(r.spec);
            d["n_edges"] = r.n_edges;
            d["leading_coeff"] = to_py(r.leading_coeff);
            d["girth_readout"] = r.girth_readout;
            d["tree_count"] = to_py(r.tree_count);
            d["poly_hash"] = r.poly_hash;
            d["coeffs"] = coeffs_to_py(r.poly);
            rows.append(d);
        }
        return rows;
    });
    m.def("audit_rank2_exhaustive", [](int max_edges) { return audit_rank2_exhaustive(max_edges).exhaustive(); });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI invocation; returns (exit_code, stdout, stderr).");
}

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "springer/errors.hpp"
#include "springer/kappa.hpp"
#include "springer/moves.hpp"
#include "springer/poincare.hpp"
#include "springer/report.hpp"
#include "springer/rho.hpp"

namespace py = pybind11;
using namespace springer;

namespace {

py::int_ big_int(const mpz_class& value) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(value.get_str().c_str(), nullptr, 10));
}

py::list big_list(const std::vector<mpz_class>& values) {
    py::list out;
    for (const mpz_class& v : values) out.append(big_int(v));
    return out;
}

py::list poly_coeffs(const Polynomial& p) {
    std::vector<mpz_class> coeffs = p.coeffs();
    return big_list(coeffs);
}

Partition shape_arg(const std::string& text) { return Partition::parse(text); }

} // namespace

PYBIND11_MODULE(_springer, m) {
    m.doc() = "Betti numbers of type-A Springer fibers via row-standard tableaux";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<resource_limit_error>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<Partition>(m, "Partition")
        .def(py::init(&shape_arg), py::arg("text"))
        .def(py::init([](const std::vector<int>& parts) { return Partition(parts); }),
             py::arg("parts"))
        .def_property_readonly("parts", &Partition::parts)
        .def_property_readonly("n", &Partition::n)
        .def("conjugate", &Partition::conjugate)
        .def("__str__", &Partition::to_string)
        .def("__repr__",
             [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });

    py::class_<RowStandardTableau>(m, "RowStandardTableau")
        .def(py::init(&RowStandardTableau::parse), py::arg("text"))
        .def(py::init([](const std::vector<std::vector<int>>& rows) {
                 return RowStandardTableau(rows);
             }),
             py::arg("rows"))
        .def_property_readonly("rows", &RowStandardTableau::rows)
        .def_property_readonly("shape", &RowStandardTableau::shape)
        .def_property_readonly("n", &RowStandardTableau::n)
        .def("is_standard", &RowStandardTableau::is_standard)
        .def("__str__", &RowStandardTableau::to_string)
        .def("__repr__",
             [](const RowStandardTableau& t) {
                 return "RowStandardTableau('" + t.to_string() + "')";
             })
        .def("__eq__", [](const RowStandardTableau& a, const RowStandardTableau& b) {
            return a == b;
        });

    py::class_<StandardTableau>(m, "StandardTableau")
        .def(py::init(&StandardTableau::parse), py::arg("text"))
        .def_property_readonly("tableau", &StandardTableau::tableau)
        .def_property_readonly("shape", &StandardTableau::shape)
        .def_property_readonly("n", &StandardTableau::n)
        .def("__str__", &StandardTableau::to_string)
        .def("__repr__",
             [](const StandardTableau& t) { return "StandardTableau('" + t.to_string() + "')"; })
        .def("__eq__",
             [](const StandardTableau& a, const StandardTableau& b) { return a == b; });

    m.def("springer_dimension",
          [](const std::string& shape) { return springer_dimension(shape_arg(shape)); });
    m.def("row_standard_count",
          [](const std::string& shape) { return big_int(row_standard_count(shape_arg(shape))); });
    m.def("partitions_of", &partitions_of, py::arg("n"));

    m.def("inversions", [](const RowStandardTableau& t) {
        std::vector<std::pair<int, int>> out;
        for (const InversionPair& p : inversions(t)) out.emplace_back(p.i, p.j);
        return out;
    });
    m.def("inversion_count", &inversion_count);
    m.def("standardize", &standardize);
    m.def("prefix_composition_chain", &prefix_composition_chain);
    m.def("row_standard_tableaux", &all_row_standard, py::arg("shape"),
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("standard_tableaux", &all_standard, py::arg("shape"),
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("dominance_leq", &dominance_leq);
    m.def("min_standard_tableau", &min_standard_tableau);

    m.def("can_move", &can_move);
    m.def("apply_move", &apply_move);
    m.def("geodesic_to_standard",
          [](const RowStandardTableau& t, std::uint64_t cap) {
              return geodesic_to_standard(t, cap);
          },
          py::arg("tableau"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("greedy_reduction", &greedy_reduction);
    m.def("move_graph_summary",
          [](const Partition& shape, std::uint64_t cap) {
              const MoveGraph graph = MoveGraph::build(shape, cap);
              py::dict out;
              out["vertices"] = graph.vertex_count();
              out["edges"] = graph.edge_count();
              out["components"] = graph.component_count();
              auto sizes = graph.component_sizes();
              std::sort(sizes.begin(), sizes.end());
              out["component_sizes"] = sizes;
              return out;
          },
          py::arg("shape"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("move_graph_dot",
          [](const Partition& shape, std::uint64_t cap) {
              return to_dot(MoveGraph::build(shape, cap));
          },
          py::arg("shape"), py::arg("cap") = kDefaultEnumerationCap);

    m.def("prefix_stats", [](const StandardTableau& t) {
        const PrefixStats stats = prefix_stats(t);
        return py::make_tuple(stats.column, stats.row_count);
    });
    m.def("encode_tableau", [](const RowStandardTableau& t) {
        const auto [standard, code] = encode_tableau(t);
        return py::make_tuple(standard, code.values);
    });
    m.def("decode_tableau", [](const StandardTableau& t, const std::vector<int>& code) {
        return decode_tableau(t, MoveCode{code});
    });
    m.def("inversion_distribution",
          [](const StandardTableau& t) { return poly_coeffs(inversion_distribution(t)); });

    m.def("poincare_polynomial",
          [](const std::string& shape, const std::string& method, std::uint64_t cap) {
              return poly_coeffs(
                  betti_numbers(shape_arg(shape), method_from_string(method), cap).poincare);
          },
          py::arg("shape"), py::arg("method") = "all",
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("betti_numbers",
          [](const std::string& shape, const std::string& method, std::uint64_t cap) {
              const BettiTable table =
                  betti_numbers(shape_arg(shape), method_from_string(method), cap);
              py::dict out;
              out["shape"] = table.shape.parts();
              out["n"] = table.shape.n();
              out["dim"] = table.dim;
              out["poincare_by_codim"] = poly_coeffs(table.poincare);
              out["betti"] = big_list(table.betti);
              out["num_standard"] = big_int(table.num_standard);
              out["num_row_standard"] = big_int(table.num_row_standard);
              out["method"] = method_name(table.method);
              out["agreement"] = table.agreement;
              return out;
          },
          py::arg("shape"), py::arg("method") = "all",
          py::arg("cap") = kDefaultEnumerationCap);
    m.def("poincare_min_class",
          [](const std::string& shape) { return poly_coeffs(poincare_min_class(shape_arg(shape))); });

    py::class_<IntervalChain>(m, "IntervalChain")
        .def(py::init(&IntervalChain::parse), py::arg("text"))
        .def_static("prefix", &IntervalChain::prefix)
        .def_static("suffix", &IntervalChain::suffix)
        .def_property_readonly("pairs", &IntervalChain::pairs)
        .def_property_readonly("n", &IntervalChain::n)
        .def("reflected", &IntervalChain::reflected)
        .def("__str__", &IntervalChain::to_string)
        .def("__repr__",
             [](const IntervalChain& c) { return "IntervalChain('" + c.to_string() + "')"; })
        .def("__eq__",
             [](const IntervalChain& a, const IntervalChain& b) { return a == b; });

    m.def("interval_chains", &all_interval_chains, py::arg("n"));
    m.def("relabel_tableau", &relabel_tableau);
    m.def("relabel_table", [](const Partition& shape, const IntervalChain& chain) {
        py::dict out;
        for (const auto& [t, s] : relabel_table(shape, chain))
            out[py::str(t.to_string())] = s.to_string();
        return out;
    });
}

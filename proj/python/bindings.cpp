#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bbd/conditions.hpp"
#include "bbd/core.hpp"
#include "bbd/cycles.hpp"
#include "bbd/exemplars.hpp"
#include "bbd/harness.hpp"
#include "bbd/json_io.hpp"
#include "bbd/matching.hpp"

namespace py = pybind11;

namespace {

using bbd::BipartiteDigraph;

std::vector<std::string> names(const std::vector<bbd::VertexId>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(v.str());
    return out;
}

std::optional<std::vector<std::string>> cycle_names(const std::optional<bbd::Cycle>& c) {
    if (!c) return std::nullopt;
    return names(c->vertices());
}

bbd::SearchBudget budget_of(std::uint64_t max_expansions) {
    bbd::SearchBudget b;
    b.max_expansions = max_expansions;
    return b;
}

bbd::Family family_of(const std::string& name) {
    const auto f = bbd::parse_family(name);
    if (!f) throw bbd::ContractViolation("unknown family '" + name + "'");
    return *f;
}

bbd::TheoremId theorem_of(const std::string& name) {
    const auto id = bbd::parse_theorem(name);
    if (!id) throw bbd::ContractViolation("unknown theorem '" + name + "'");
    return *id;
}

bbd::MatchDirection direction_of(const std::string& name) {
    if (name == "XtoY") return bbd::MatchDirection::XtoY;
    if (name == "YtoX") return bbd::MatchDirection::YtoX;
    throw bbd::ContractViolation("direction must be 'XtoY' or 'YtoX'");
}

constexpr std::uint64_t kDefaultBudget = bbd::SearchBudget{}.max_expansions;

}  // namespace

PYBIND11_MODULE(_bbd, m) {
    m.doc() = "Balanced bipartite digraphs: degree conditions, cycles, matchings, theorem checks";

    auto base = py::register_exception<bbd::ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<bbd::ParseError>(m, "ParseError", PyExc_ValueError);
    auto limit = py::register_exception<bbd::ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    (void)base;
    (void)limit;

    py::class_<BipartiteDigraph>(m, "Graph")
        .def(py::init([](int a, const std::vector<std::pair<std::string, std::string>>& arcs) {
                 std::vector<bbd::Arc> parsed;
                 for (const auto& [u, v] : arcs) {
                     parsed.push_back({bbd::parse_vertex(u), bbd::parse_vertex(v)});
                 }
                 return BipartiteDigraph(a, parsed);
             }),
             py::arg("a"), py::arg("arcs") = std::vector<std::pair<std::string, std::string>>{})
        .def_property_readonly("half_order", &BipartiteDigraph::half_order)
        .def_property_readonly("order", &BipartiteDigraph::order)
        .def_property_readonly("arc_count", &BipartiteDigraph::arc_count)
        .def("arcs",
             [](const BipartiteDigraph& g) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& arc : g.arcs()) out.emplace_back(arc.from.str(), arc.to.str());
                 return out;
             })
        .def("has_arc",
             [](const BipartiteDigraph& g, const std::string& u, const std::string& v) {
                 return g.has_arc(bbd::parse_vertex(u), bbd::parse_vertex(v));
             })
        .def("degree",
             [](const BipartiteDigraph& g, const std::string& v) {
                 const auto d = bbd::degree(g, bbd::parse_vertex(v));
                 return py::make_tuple(d.out, d.in, d.total);
             })
        .def("converse", &BipartiteDigraph::converse)
        .def("serialize", [](const BipartiteDigraph& g) { return bbd::serialize(g); })
        .def("__eq__", [](const BipartiteDigraph& a, const BipartiteDigraph& b) { return a == b; })
        .def("__repr__", [](const BipartiteDigraph& g) {
            return "<Graph a=" + std::to_string(g.half_order()) + " arcs=" +
                   std::to_string(g.arc_count()) + ">";
        });

    m.def("parse_graph", [](const std::string& text) { return bbd::parse_graph(text); }, py::arg("text"));
    m.def("generate",
          [](const std::string& family, std::optional<int> a, int size_a) {
              return bbd::generate(bbd::FamilySpec{family_of(family), a, size_a});
          },
          py::arg("family"), py::arg("a") = py::none(), py::arg("size_a") = 1);

    m.def("is_strong",
          [](const BipartiteDigraph& g) { return bbd::is_strong(g).kind == bbd::ConnectivityKind::Strong; });
    m.def("max_bk",
          [](const BipartiteDigraph& g) -> std::optional<int> {
              const auto level = bbd::max_Bk(g);
              if (level.is_unbounded()) return std::nullopt;
              return level.value();
          },
          "Largest k with B_k, or None when there is no dominating pair.");
    m.def("dominating_pairs", [](const BipartiteDigraph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& p : bbd::dominating_pairs(g)) out.emplace_back(p.u.str(), p.v.str(), p.witness.str());
        return out;
    });
    m.def("hall_violator",
          [](const BipartiteDigraph& g, const std::string& direction)
              -> std::optional<std::vector<std::string>> {
              const auto s = bbd::hall_violator(g, direction_of(direction));
              if (!s) return std::nullopt;
              return names(*s);
          },
          py::arg("g"), py::arg("direction") = "XtoY");

    m.def("hamiltonian_cycle",
          [](const BipartiteDigraph& g, std::uint64_t budget) {
              return cycle_names(bbd::hamiltonian_cycle(g, budget_of(budget)));
          },
          py::arg("g"), py::arg("budget") = kDefaultBudget);
    m.def("even_spectrum",
          [](const BipartiteDigraph& g, std::uint64_t budget) {
              return bbd::even_spectrum(g, budget_of(budget));
          },
          py::arg("g"), py::arg("budget") = kDefaultBudget);

    m.def("is_isomorphic", [](const BipartiteDigraph& g1, const BipartiteDigraph& g2) {
        return bbd::is_isomorphic(g1, g2).isomorphic;
    });
    m.def("canonical_form", [](const BipartiteDigraph& g) { return bbd::canonical_form(g); });

    m.def("check_json",
          [](const BipartiteDigraph& g, std::uint64_t budget) {
              return bbd::to_json(bbd::run_check(g, budget_of(budget))).dump(2) + "\n";
          },
          py::arg("g"), py::arg("budget") = kDefaultBudget);

    m.def("verify_sample_json",
          [](const std::string& theorem, int a, double p, std::uint64_t seed, int count, int workers,
             std::optional<int> min_order, std::uint64_t budget) {
              const auto id = theorem_of(theorem);
              bbd::SampleConfig cfg;
              cfg.a = a;
              cfg.arc_probability = p;
              cfg.seed = seed;
              cfg.count = count;
              cfg.constraints = bbd::hypothesis_constraints(id);
              bbd::VerifyOptions opts;
              opts.workers = workers;
              opts.min_order = min_order;
              opts.budget = budget_of(budget);
              py::gil_scoped_release release;
              return bbd::to_json(bbd::verify_theorem(id, cfg, opts)).dump(2) + "\n";
          },
          py::arg("theorem"), py::arg("a"), py::arg("p"), py::arg("seed"), py::arg("count"),
          py::arg("workers") = 1, py::arg("min_order") = py::none(), py::arg("budget") = kDefaultBudget);

    m.def("verify_exhaustive_json",
          [](const std::string& theorem, int a, int workers, std::optional<int> min_order,
             std::uint64_t budget) {
              bbd::VerifyOptions opts;
              opts.workers = workers;
              opts.min_order = min_order;
              opts.budget = budget_of(budget);
              const auto id = theorem_of(theorem);
              py::gil_scoped_release release;
              return bbd::to_json(bbd::verify_theorem(id, bbd::ExhaustivePopulation{a}, opts)).dump(2) + "\n";
          },
          py::arg("theorem"), py::arg("a"), py::arg("workers") = 1, py::arg("min_order") = py::none(),
          py::arg("budget") = kDefaultBudget);

    m.def("export_dot", [](const BipartiteDigraph& g) { return bbd::export_dot(g); });
}

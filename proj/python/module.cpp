#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

#include "gcat/certify.hpp"
#include "gcat/cli.hpp"
#include "gcat/corpus.hpp"
#include "gcat/error.hpp"
#include "gcat/fca.hpp"
#include "gcat/fibration.hpp"
#include "gcat/io.hpp"

namespace py = pybind11;
using namespace gcat;

namespace {

GroupClass as_class(const py::object& c) {
  if (py::isinstance<py::str>(c)) return GroupClass::parse(c.cast<std::string>());
  return c.cast<GroupClass>();
}

Budget budget(std::int64_t max_cosets, int tietze_moves) { return Budget{max_cosets, tietze_moves}; }

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["answer"] = to_string(v.answer);
  d["trace"] = v.trace;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cat_G bounds, covers, FCA checks and vanishing certificates";

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init([](std::vector<Simplex> maximal, std::string name) {
             return SimplicialComplex::from_maximal(std::move(maximal), std::move(name));
           }),
           py::arg("maximal_simplices"), py::arg("name") = "complex")
      .def_property_readonly("name", &SimplicialComplex::name)
      .def_property_readonly("vertex_count", &SimplicialComplex::vertex_count)
      .def_property_readonly("dim", &SimplicialComplex::dim)
      .def_property_readonly("simplices", &SimplicialComplex::simplices)
      .def("maximal_simplices", &SimplicialComplex::maximal_simplices)
      .def("f_vector", &SimplicialComplex::f_vector)
      .def("renamed", &SimplicialComplex::renamed)
      .def("euler_characteristic", [](const SimplicialComplex& x) { return euler_characteristic(x); })
      .def("to_json", [](const SimplicialComplex& x) { return io::to_json(x).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::complex_from_json(io::json::parse(s)); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& x) {
        return "<SimplicialComplex " + x.name() + ": " + std::to_string(x.vertex_count()) + " vertices, dim " +
               std::to_string(x.dim()) + ">";
      });

  py::class_<SimplicialMap>(m, "SimplicialMap")
      .def(py::init<SimplicialComplex, SimplicialComplex, std::vector<Vertex>>(), py::arg("source"),
           py::arg("target"), py::arg("vertex_map"))
      .def_property_readonly("source", &SimplicialMap::source)
      .def_property_readonly("target", &SimplicialMap::target)
      .def_property_readonly("vertex_map", &SimplicialMap::vertex_map);

  m.def("subdivide", [](const SimplicialComplex& x, int n) { return iterated_subdivision(x, n); }, py::arg("x"),
        py::arg("n") = 1);
  m.def("product", [](const SimplicialComplex& x, const SimplicialComplex& y) {
    auto p = product(x, y);
    return py::make_tuple(p.complex, p.first, p.second);
  });
  m.def("wedge", [](const std::vector<SimplicialComplex>& xs, std::vector<Vertex> basepoints) {
    if (basepoints.empty()) basepoints.assign(xs.size(), 0);
    return wedge(xs, basepoints).complex;
  }, py::arg("complexes"), py::arg("basepoints") = std::vector<Vertex>{});
  m.def("mapping_torus", [](const SimplicialMap& g, int layers) {
    auto t = mapping_torus(g, layers);
    return py::make_tuple(t.complex, t.projection, t.fibre_vertices);
  }, py::arg("g"), py::arg("layers") = 3);

  m.def("pi1", [](const SimplicialComplex& x, int basepoint, int simplify) {
    auto p = edge_path_presentation(x, basepoint).group;
    if (simplify > 0) p = simplify_presentation(p, simplify);
    return py::make_tuple(p.generator_count, p.relators);
  }, py::arg("x"), py::arg("basepoint") = 0, py::arg("simplify") = 0);
  m.def("abelianization", [](int gens, const std::vector<Word>& relators) {
    auto h = abelianization(GroupPresentation::make(gens, relators));
    return py::make_tuple(h.rank, h.torsion);
  });
  m.def("coset_index", [](int gens, const std::vector<Word>& relators, std::int64_t max_cosets) -> py::object {
    auto r = todd_coxeter(GroupPresentation::make(gens, relators), {}, max_cosets);
    if (std::holds_alternative<CosetIndex>(r)) return py::int_(std::get<CosetIndex>(r).index);
    return py::none();
  }, py::arg("generators"), py::arg("relators"), py::arg("max_cosets") = 10000);

  py::class_<GroupClass>(m, "GroupClass")
      .def(py::init([](const std::string& s) { return GroupClass::parse(s); }))
      .def_property_readonly("descriptor", &GroupClass::descriptor)
      .def("implies", [](const GroupClass& a, const py::object& b) { return implies(a, as_class(b)); })
      .def("__repr__", [](const GroupClass& c) { return "<GroupClass " + c.descriptor() + ">"; });

  m.def("classify_group", [](int gens, const std::vector<Word>& relators, const py::object& c, std::int64_t max_cosets,
                             int moves) {
    return verdict_dict(classify_group(GroupPresentation::make(gens, relators), as_class(c), budget(max_cosets, moves)));
  }, py::arg("generators"), py::arg("relators"), py::arg("cls"), py::arg("max_cosets") = 10000,
        py::arg("tietze_moves") = 200);

  py::class_<VertexCover>(m, "VertexCover")
      .def(py::init([](SimplicialComplex x, std::vector<VertexSet> pieces, bool partition) {
             return VertexCover::make(std::move(x), std::move(pieces), partition);
           }),
           py::arg("complex"), py::arg("pieces"), py::arg("partition") = false)
      .def_readonly("complex", &VertexCover::complex)
      .def_readonly("pieces", &VertexCover::pieces)
      .def_readonly("partition", &VertexCover::partition)
      .def("__len__", &VertexCover::size);

  m.def("validate_cover", [](const VertexCover& c, const py::object& cls) {
    auto v = validate_cover(c, as_class(cls));
    py::list pieces;
    for (const auto& p : v.pieces) pieces.append(verdict_dict(p));
    auto d = verdict_dict(v.overall);
    d["pieces"] = pieces;
    return d;
  });
  m.def("stars_cover", [](const SimplicialComplex& x) { return stars_cover(x).cover; });
  m.def("nerve", [](const VertexCover& c) {
    auto r = multiplicity_and_nerve(c);
    return py::make_tuple(r.multiplicity, r.nerve);
  });
  m.def("cat_upper", [](const SimplicialComplex& x, const py::object& cls, const std::string& strategy) {
    auto r = cat_upper(x, as_class(cls), strategy);
    py::dict d;
    d["bound"] = r.bound;
    d["witness"] = r.witness;
    d["validation"] = to_string(r.validation.overall.answer);
    d["minimal"] = r.minimal;
    d["trace"] = r.trace;
    return d;
  }, py::arg("x"), py::arg("cls"), py::arg("strategy") = "greedy");
  m.def("cat_lower", [](const SimplicialComplex& x, const py::object& cls) { return cat_lower(x, as_class(cls)).bound; });

  m.def("combine_product", [](const SimplicialComplex& fibre, const SimplicialComplex& base, const VertexCover& fc) {
    return combine_covers(product_bundle(fibre, base), fc, circle_ls_cover(base));
  });

  m.def("check_fca", [](const SimplicialMap& f, const py::object& cls, int k) {
    auto r = check_fca(f, as_class(cls), k);
    auto d = verdict_dict(r.verdict);
    py::list fibres;
    for (const auto& rep : r.reports)
      fibres.append(py::make_tuple(rep.target_simplex, rep.fibre.complex.vertex_count(), to_string(rep.overall.answer)));
    d["fibres"] = fibres;
    return d;
  });

  m.def("finite_cover_rate", [](std::int64_t p, std::int64_t q, int d) {
    auto r = finite_cover_rate(LogRate{Rational(p, q), Rounding::LowerBound}, d).value;
    return py::make_tuple(r.numerator(), r.denominator());
  });

  py::class_<FactStore>(m, "FactStore")
      .def(py::init<>())
      .def("assert_axiom", [](FactStore& s, const std::string& stmt, const std::string& citation) {
        return s.assert_axiom(parse_statement(stmt), citation);
      })
      .def("add_computed", [](FactStore& s, const std::string& stmt, const std::string& witness) {
        return s.add_computed(parse_statement(stmt), witness);
      })
      .def("add_cover", [](FactStore& s, const std::string& space, const VertexCover& c, const py::object& cls) {
        return s.add_cover(space, c, as_class(cls));
      })
      .def("saturate", [](FactStore& s, int rounds) {
        auto r = s.saturate(SaturationBudget{rounds, 100000});
        py::dict d;
        d["rounds"] = r.rounds;
        d["derived"] = r.derived;
        d["complete"] = r.complete;
        d["contradictions"] = r.contradictions;
        return d;
      }, py::arg("rounds") = 64)
      .def("query", [](const FactStore& s, const std::string& goal) {
        auto q = s.query(parse_statement(goal, true));
        py::dict d;
        d["found"] = q.found;
        d["trace"] = q.trace;
        d["missing"] = q.missing;
        return d;
      })
      .def("statements", [](const FactStore& s) {
        std::vector<std::string> out;
        for (const auto& f : s.facts()) out.push_back(f.statement.str());
        return out;
      });

  py::module_ corpus = m.def_submodule("corpus", "example complexes");
  corpus.def("complexes", &corpus::complexes);
  corpus.def("circle", &corpus::circle);
  corpus.def("sphere", &corpus::sphere);
  corpus.def("torus", &corpus::torus);
  corpus.def("klein_bottle", [] { return corpus::klein_bottle().complex; });
  corpus.def("figure_eight", &corpus::figure_eight);
  corpus.def("genus2", &corpus::genus2);
  corpus.def("hexagon", &corpus::hexagon);
  corpus.def("hexagon_reflection", &corpus::hexagon_reflection);

  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfaces/canonical.hpp"
#include "mfaces/complex.hpp"
#include "mfaces/family.hpp"
#include "mfaces/gale.hpp"
#include "mfaces/generators.hpp"
#include "mfaces/homology.hpp"
#include "mfaces/io.hpp"
#include "mfaces/repro.hpp"
#include "mfaces/vectors.hpp"

namespace py = pybind11;
using namespace mfaces;

namespace {

VertexSet to_set(const std::vector<int>& labels) {
  VertexSet s;
  for (int v : labels) {
    if (v < 1 || v > kMaxLabel) throw std::invalid_argument("label out of range: " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.labels());
  return out;
}

SimplicialComplex from_lists(const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> f;
  for (const auto& l : facets) f.push_back(to_set(l));
  return SimplicialComplex::from_facets(std::move(f));
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["verdict"] = to_string(c.verdict);
  d["rule"] = c.rule;
  d["witness_vertex"] = c.witness_vertex;
  d["observed"] = c.observed;
  d["expected"] = c.expected;
  d["k"] = c.k;
  d["n"] = c.n;
  d["d"] = c.d;
  d["reason"] = c.reason;
  return d;
}

py::dict family_dict(const FamilyState& s) {
  py::dict d;
  d["sigma"] = s.sigma;
  d["edges"] = to_lists(s.edges);
  d["k"] = s.k;
  d["n"] = s.n;
  d["log"] = s.log;
  return d;
}

FamilyState family_from(const SimplicialComplex& sigma, const std::vector<std::vector<int>>& edges, int k) {
  FamilyState s;
  s.sigma = sigma;
  for (const auto& e : edges) s.edges.push_back(to_set(e));
  s.k = k;
  s.n = sigma.num_vertices();
  return s;
}

}  // namespace

PYBIND11_MODULE(_mfaces, m) {
  m.doc() = "Missing faces of simplicial spheres";

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init(&from_lists), py::arg("facets"))
      .def_property_readonly("facets", [](const SimplicialComplex& k) { return to_lists(k.facets()); })
      .def_property_readonly("vertices", [](const SimplicialComplex& k) { return k.vertices().labels(); })
      .def_property_readonly("dim", &SimplicialComplex::dim)
      .def_property_readonly("num_vertices", &SimplicialComplex::num_vertices)
      .def_property_readonly("num_facets", &SimplicialComplex::num_facets)
      .def("is_face", [](const SimplicialComplex& k, const std::vector<int>& f) { return k.is_face(to_set(f)); })
      .def("link", [](const SimplicialComplex& k, const std::vector<int>& f) { return link(k, to_set(f)); })
      .def("missing_faces", [](const SimplicialComplex& k) { return to_lists(missing_faces(k)); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& k) {
        return "<SimplicialComplex dim=" + std::to_string(k.dim()) + " vertices=" +
               std::to_string(k.num_vertices()) + " facets=" + std::to_string(k.num_facets()) + ">";
      });

  m.def("f_vector", &f_vector);
  m.def("m_vector", &m_vector);
  m.def("h_vector", [](const SimplicialComplex& k) { return face_profile(k, false).h; });
  m.def("g_vector", [](const SimplicialComplex& k) { return face_profile(k, false).g; });
  m.def("neighborliness", [](const SimplicialComplex& k) { return neighborliness(f_vector(k), k.num_vertices()); });
  m.def("is_eulerian", &is_eulerian);
  m.def("is_isomorphic", &is_isomorphic);
  m.def("betti", [](const SimplicialComplex& k) { return betti(k, Field::GF2); });
  m.def("pseudopower_upper", &pseudopower_upper);
  m.def("pseudopower_lower", &pseudopower_lower);
  m.def("verify_sphere", [](const SimplicialComplex& k, bool full) {
    const SphereCheck c = verify_sphere(k, full ? SphereLevel::Full : SphereLevel::Quick);
    return py::make_tuple(c.ok, c.reason);
  }, py::arg("k"), py::arg("full") = false);
  m.def("certify", [](const SimplicialComplex& k) { return certificate_dict(nonpolytopality_certificate(k)); });
  m.def("bounds", [](const SimplicialComplex& k) {
    py::list out;
    for (const auto& b : all_bounds(face_profile(k))) {
      py::dict d;
      d["name"] = b.name;
      d["kind"] = b.upper ? "upper" : "lower";
      d["value"] = to_string(b.value);
      d["observed"] = to_string(b.observed);
      d["slack"] = to_string(b.slack);
      d["satisfied"] = b.satisfied;
      out.append(d);
    }
    return out;
  });
  m.def("analyze", [](const SimplicialComplex& k, bool full) {
    py::dict d;
    for (const auto& [key, value] : analyze(k, AnalyzeOptions{full, true})) d[py::str(key)] = value;
    return d;
  }, py::arg("k"), py::arg("full") = false);

  m.def("cyclic_boundary", &cyclic_boundary, py::arg("d"), py::arg("n"));
  m.def("gs8", &gs8);
  m.def("p042", &p042);
  m.def("octahedron", &octahedron);
  m.def("stacked_sphere", &stacked_sphere, py::arg("d"), py::arg("n"));
  m.def("realize_2sphere", &realize_2sphere, py::arg("n"), py::arg("m2"));
  m.def("qk", [](int k) {
    const QkConstruction q = build_qk(k);
    return py::make_tuple(q.sphere, to_lists(q.edges));
  }, py::arg("k"));
  m.def("delta_sequence", &delta_sequence, py::arg("n"), py::arg("extra") = false);
  m.def("delta_sequence_2k", &delta_sequence_2k, py::arg("k"), py::arg("n"));
  m.def("gamma", [](int n, int i, int k) { return gamma(n, i, k); }, py::arg("n"), py::arg("i"), py::arg("k"));
  m.def("bistellar_flip", [](const SimplicialComplex& k, const std::vector<int>& a, std::optional<std::vector<int>> b) {
    const FlipMove move = b ? FlipMove{to_set(a), to_set(*b)} : flip_move(k, to_set(a));
    return bistellar_flip(k, move);
  }, py::arg("k"), py::arg("a"), py::arg("b") = std::nullopt);
  m.def("sew", &sew, py::arg("k"), py::arg("ball"), py::arg("new_vertex"));
  m.def("complement_ball", &complement_ball);

  m.def("family_seed", [](int k) { return family_dict(k == 2 ? family_seed_p042() : family_seed_qk(k)); }, py::arg("k"));
  m.def("family_step", [](const SimplicialComplex& sigma, const std::vector<std::vector<int>>& edges, int k) {
    return family_dict(family_step(family_from(sigma, edges, k)));
  }, py::arg("sigma"), py::arg("edges"), py::arg("k"));

  m.def("read_complex", &read_complex);
  m.def("write_complex", [](const SimplicialComplex& k) { return write_complex(k); });
  m.def("parse_lutz", [](const std::string& text) {
    py::list out;
    for (const auto& e : parse_lutz(text)) out.append(py::make_tuple(e.name, e.complex));
    return out;
  });

  m.def("run_acceptance", [](std::optional<std::string> data_dir) {
    ReproOptions opt;
    opt.data_dir = data_dir;
    py::list out;
    for (const auto& r : run_acceptance(opt)) out.append(py::make_tuple(r.id, r.name, to_string(r.status), r.detail));
    return out;
  }, py::arg("data_dir") = std::nullopt);

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
}

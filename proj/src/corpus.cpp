#include "gcat/corpus.hpp"

#include <algorithm>
#include <map>

#include "gcat/error.hpp"

namespace gcat::corpus {

SimplicialComplex circle() { return cycle_complex(3, "circle"); }
SimplicialComplex sphere() { return simplex_boundary(3, "sphere"); }
SimplicialComplex torus() { return product(circle(), circle()).complex.renamed("torus"); }

SimplicialComplex figure_eight() {
  return wedge({circle(), circle()}, {0, 0}).complex.renamed("figure_eight");
}

SimplicialComplex connected_sum(const SimplicialComplex& x, const Simplex& a,
                                const SimplicialComplex& y, const Simplex& b, std::string name) {
  if (a.size() != b.size() || !x.contains(a) || !y.contains(b) ||
      a.size() != static_cast<std::size_t>(x.dim() + 1) || x.dim() != y.dim())
    throw MalformedInput("connected sum needs top simplices of equal dimension");
  std::vector<Vertex> ymap(static_cast<std::size_t>(y.vertex_count()), -1);
  for (std::size_t i = 0; i < b.size(); ++i) ymap[static_cast<std::size_t>(b[i])] = a[i];
  Vertex next = x.vertex_count();
  for (auto& v : ymap)
    if (v < 0) v = next++;
  std::vector<Simplex> tops;
  for (const auto& s : x.maximal_simplices())
    if (s != a) tops.push_back(s);
  for (const auto& s : y.maximal_simplices()) {
    if (s == b) continue;
    Simplex t;
    for (Vertex v : s) t.push_back(ymap[static_cast<std::size_t>(v)]);
    std::sort(t.begin(), t.end());
    tops.push_back(std::move(t));
  }
  return SimplicialComplex::from_maximal(std::move(tops), std::move(name));
}

SimplicialComplex genus2() {
  auto t = torus();
  const Simplex tri = t.simplices_of_dim(2)[0];
  return connected_sum(t, tri, t, tri, "genus2");
}

SimplicialComplex solid_triangle() { return simplex_complex(2, "triangle"); }
SimplicialComplex solid_tetrahedron() { return simplex_complex(3, "tetrahedron"); }
SimplicialComplex hexagon() { return cycle_complex(6, "hexagon"); }

SimplicialMap hexagon_reflection() {
  auto h = hexagon();
  return SimplicialMap(h, h, {0, 5, 4, 3, 2, 1});
}

MappingTorus klein_bottle() {
  auto m = mapping_torus(hexagon_reflection());
  m.complex = m.complex.renamed("klein");
  return m;
}

MappingTorus circle_torus() {
  auto m = mapping_torus(identity_map(circle()));
  m.complex = m.complex.renamed("circle_mt");
  return m;
}

std::vector<SimplicialComplex> complexes() {
  return {point_complex("point"), circle(), sphere(), torus(), klein_bottle().complex,
          figure_eight(), genus2(), solid_triangle(), solid_tetrahedron()};
}

}  // namespace gcat::corpus

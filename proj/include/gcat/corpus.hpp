#pragma once

#include <string>
#include <vector>

#include "gcat/complex.hpp"

namespace gcat::corpus {

SimplicialComplex circle();        // triangle boundary
SimplicialComplex sphere();        // boundary of the 3-simplex
SimplicialComplex torus();         // 3x3 staircase
SimplicialComplex figure_eight();
SimplicialComplex genus2();        // connected sum of two staircase tori
SimplicialComplex solid_triangle();
SimplicialComplex solid_tetrahedron();
SimplicialComplex hexagon();
/// v -> -v mod 6, fixing 0 and 3.
SimplicialMap hexagon_reflection();
MappingTorus klein_bottle();
MappingTorus circle_torus();       // mapping torus of the identity on the circle

/// Connected sum along the triangles a and b; b's vertices are identified with a's in order.
SimplicialComplex connected_sum(const SimplicialComplex& x, const Simplex& a,
                                const SimplicialComplex& y, const Simplex& b,
                                std::string name);

/// The complexes written by `corpus`, in a fixed order.
std::vector<SimplicialComplex> complexes();

}  // namespace gcat::corpus

#pragma once

#include "cplx/complex.hpp"

namespace cplx {

// cone over C with a fresh apex; preserves the facet count, raises dim by 1
SimplicialComplex cone(const SimplicialComplex& c, Vertex apex);

// one-point suspension wrt an existing vertex v; adds exactly the vertex
// v_new, raises dim by 1
SimplicialComplex one_point_suspension(const SimplicialComplex& c, Vertex v, Vertex v_new);

SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex remove_facet(const SimplicialComplex& c, const Face& f);

// the full face complex of a single simplex
SimplicialComplex face_complex(const Face& f);

// Iterated families from the corollary: family_sphere(3) is the 13-vertex
// sphere, higher d by one-point suspension on the smallest vertex not in the
// knot cycle {1,2,3}; family_ball(3) is the first 37-facet ball, higher d by
// coning. Fresh labels are max+1 so output is reproducible byte for byte.
SimplicialComplex family_sphere(int d);
SimplicialComplex family_ball(int d);

}  // namespace cplx

#include "cplx/moves.hpp"

#include <algorithm>

#include "cplx/catalog.hpp"

namespace cplx {

SimplicialComplex cone(const SimplicialComplex& c, Vertex apex) {
  if (apex < 1) throw Error(Err::NotAVertex, "apex must be positive");
  if (c.has_face({apex}))
    throw Error(Err::VertexClash, "apex " + std::to_string(apex) + " is already a vertex");
  std::vector<Face> out;
  for (const Face& f : c.facets()) out.push_back(face_union(f, {apex}));
  return SimplicialComplex::pure(std::move(out));
}

SimplicialComplex one_point_suspension(const SimplicialComplex& c, Vertex v, Vertex v_new) {
  if (!c.has_face({v})) throw Error(Err::NotAVertex, std::to_string(v) + " is not a vertex");
  if (c.has_face({v_new}))
    throw Error(Err::VertexClash, std::to_string(v_new) + " is already a vertex");
  std::vector<Face> out;
  for (const Face& f : c.facets()) {
    if (std::binary_search(f.begin(), f.end(), v)) {
      out.push_back(face_union(f, {v_new}));
    } else {
      out.push_back(face_union(f, {v}));
      out.push_back(face_union(f, {v_new}));
    }
  }
  return SimplicialComplex::pure(std::move(out));
}

SimplicialComplex glue(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dim() != b.dim())
    throw Error(Err::DimensionMismatch, "glue requires equal dimensions, got " +
                                            std::to_string(a.dim()) + " and " +
                                            std::to_string(b.dim()));
  std::vector<Face> out = a.facets();
  const auto& fb = b.facets();
  out.insert(out.end(), fb.begin(), fb.end());
  return SimplicialComplex::pure(std::move(out));
}

SimplicialComplex remove_facet(const SimplicialComplex& c, const Face& f) {
  if (!c.has_facet(f)) throw Error(Err::NotAFacet, face_str(f) + " is not a facet");
  std::vector<Face> out;
  for (const Face& g : c.facets())
    if (g != f) out.push_back(g);
  if (out.empty()) return SimplicialComplex();
  return SimplicialComplex::pure(std::move(out));
}

SimplicialComplex face_complex(const Face& f) {
  if (f.empty()) throw Error(Err::Empty, "empty simplex");
  return SimplicialComplex::pure({f});
}

SimplicialComplex family_sphere(int d) {
  if (d < 3) throw Error(Err::BadDimension, "family_sphere requires d >= 3");
  SimplicialComplex s = catalog::load("S3_13_56");
  for (int k = 3; k < d; ++k) {
    // keep the knot edges 12, 13, 23 intact: suspend on the smallest vertex
    // outside the cycle
    Vertex v = 0;
    for (Vertex cand : s.vertices())
      if (cand != 1 && cand != 2 && cand != 3) {
        v = cand;
        break;
      }
    s = one_point_suspension(s, v, s.max_vertex() + 1);
  }
  return s;
}

SimplicialComplex family_ball(int d) {
  if (d < 3) throw Error(Err::BadDimension, "family_ball requires d >= 3");
  SimplicialComplex b = catalog::load("B3_12_37_a");
  for (int k = 3; k < d; ++k) b = cone(b, b.max_vertex() + 1);
  return b;
}

}  // namespace cplx

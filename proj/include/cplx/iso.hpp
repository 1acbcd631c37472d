#pragma once

#include <map>
#include <optional>

#include "cplx/complex.hpp"

namespace cplx {

struct CanonicalForm {
  SimplicialComplex complex;           // vertices relabeled to 1..n
  std::map<Vertex, Vertex> relabeling; // original -> canonical
};

// Canonical labeling by partition refinement on vertex invariants
// (link f-vector, iterated neighbor colors) plus backtracking over ambiguous
// cells; isomorphic complexes map to identical facet sets.
CanonicalForm canonical_form(const SimplicialComplex& c);

// vertex bijection a -> b if isomorphic, verified facet by facet
std::optional<std::map<Vertex, Vertex>> are_isomorphic(const SimplicialComplex& a,
                                                       const SimplicialComplex& b);

struct AutomorphismGroup {
  std::vector<std::map<Vertex, Vertex>> perms;  // all automorphisms
  unsigned long long order = 0;
};

AutomorphismGroup automorphism_group(const SimplicialComplex& c);

}  // namespace cplx

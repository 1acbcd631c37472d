#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplx {

using Vertex = int;
// A face is a strictly increasing list of positive vertex labels.
using Face = std::vector<Vertex>;

enum class Err {
  NonPure,
  Empty,
  ContainedFacet,
  NotAFace,
  NotAFacet,
  NotAVertex,
  VertexClash,
  DimensionMismatch,
  WrongDimension,
  NotABall,
  NotBallOrSphere,
  TooManyGenerators,
  UnknownName,
  Inadmissible,
  BadDimension,
  UnsupportedDimension,
  NotACandidate,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

Face make_face(std::initializer_list<Vertex> vs);
Face normalized_face(Face f);  // sort + dedupe, rejects labels < 1

bool face_subset(const Face& a, const Face& b);
Face face_union(const Face& a, const Face& b);
Face face_minus(const Face& a, const Face& b);
Face face_intersection(const Face& a, const Face& b);
std::string face_str(const Face& f);

struct FVector {
  std::vector<long long> counts;  // counts[k] = number of k-faces

  bool operator==(const FVector& o) const { return counts == o.counts; }
  std::string str() const;
};

enum class PseudomanifoldKind { Closed, WithBoundary, No };

// Immutable facet-antichain representation of a simplicial complex.
// `pure()` constructs with the validation the file format promises
// (uniform facet cardinality); `general()` admits mixed dimensions, which the
// catalog needs for the contractible complex C (tetrahedra + triangles).
class SimplicialComplex {
 public:
  SimplicialComplex();  // empty complex, dim -1

  static SimplicialComplex pure(std::vector<Face> facets);
  static SimplicialComplex general(std::vector<Face> facets);

  int dim() const { return d_->dim; }
  bool is_pure() const { return d_->pure; }
  bool is_empty() const { return d_->facets.empty(); }
  std::size_t facet_count() const { return d_->facets.size(); }
  const std::vector<Face>& facets() const { return d_->facets; }

  std::vector<Vertex> vertices() const;
  std::size_t vertex_count() const;
  Vertex max_vertex() const;  // 0 for empty

  // All k-faces, sorted; memoized per dimension.
  const std::vector<Face>& faces(int k) const;
  std::vector<Face> all_faces() const;
  bool has_face(const Face& f) const;
  bool has_facet(const Face& f) const;

  FVector f_vector() const;

  SimplicialComplex link(const Face& f) const;
  SimplicialComplex star_closed(const Face& f) const;
  SimplicialComplex delete_star(const Face& f) const;

  // Complex generated by the ridges lying in exactly one facet; empty
  // result means the complex is closed. Requires a pure complex of dim >= 1.
  SimplicialComplex boundary_complex() const;

  PseudomanifoldKind pseudomanifold_kind() const;

  SimplicialComplex relabeled(const std::map<Vertex, Vertex>& map) const;

  bool operator==(const SimplicialComplex& o) const { return d_->facets == o.d_->facets; }
  bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<Face> facets;  // lexicographically sorted
    int dim = -1;
    bool pure = true;
    mutable std::mutex mu;
    mutable std::map<int, std::vector<Face>> faces_by_dim;
  };
  explicit SimplicialComplex(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static SimplicialComplex from_checked(std::vector<Face> facets);

  std::shared_ptr<const Data> d_;
};

// .cplx text format: '#' starts a comment line, every other nonblank line is
// one facet as whitespace-separated positive integers. Canonical output has
// ascending vertices per line and lexicographically sorted lines.
SimplicialComplex parse_cplx(const std::string& text);
SimplicialComplex read_cplx_file(const std::string& path);
std::string to_cplx(const SimplicialComplex& c);
void write_cplx_file(const std::string& path, const SimplicialComplex& c);

}  // namespace cplx

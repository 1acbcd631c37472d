#pragma once

#include <unordered_map>
#include <vector>

#include "cplx/complex.hpp"
#include "cplx/util.hpp"

namespace cplx {

// Hasse diagram of all faces of a complex (mixed dimensions allowed), with
// mutable alive/dead state for elementary collapses. A face is free when it
// has exactly one live immediate coface and that coface is maximal.
class FacePoset {
 public:
  explicit FacePoset(const std::vector<Face>& facets);
  explicit FacePoset(const SimplicialComplex& c) : FacePoset(c.facets()) {}

  std::size_t size() const { return faces_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  const Face& face(int id) const { return faces_[id]; }
  bool alive(int id) const { return alive_[id]; }
  int id_of(const Face& f) const;

  // id of the unique live immediate coface if the face is free, else -1
  int free_partner(int id) const;

  // all live free faces as (face, coface) id pairs, ordered by
  // (dim descending, face lexicographic)
  std::vector<std::pair<int, int>> free_pairs() const;

  void collapse(int face_id, int coface_id);
  void uncollapse(int face_id, int coface_id);  // exact inverse, for backtracking

  std::vector<Face> live_faces() const;         // sorted by (dim, lex)
  std::vector<Face> live_faces_of_size(std::size_t k) const;

 private:
  std::vector<Face> faces_;                     // index = id, sorted by (dim, lex)
  std::unordered_map<Face, int, IntVecHash> index_;
  std::vector<std::vector<int>> covers_;        // immediate cofaces
  std::vector<std::vector<int>> covered_;       // immediate subfaces
  std::vector<int> live_cover_count_;
  std::vector<bool> alive_;
  std::size_t alive_count_ = 0;
};

}  // namespace cplx

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cplx/complex.hpp"
#include "cplx/group.hpp"
#include "cplx/recognition.hpp"

namespace cplx {

// Word in a finitely presented group: letters are +-(generator index + 1).
using Word = std::vector<int>;

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
};

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word invert_word(const Word& w);

struct TietzeOptions {
  bool full = true;  // false: only drop trivial relators / length <= 2 eliminations
};

// Simplification preserving the presented group: free and cyclic reduction,
// duplicate dropping, and elimination of generators occurring exactly once in
// some relator (shortest defining relator first).
Presentation tietze_simplified(Presentation p, const TietzeOptions& opt = {});

// Abelianization via the relator exponent matrix: (free rank, torsion > 1).
std::pair<long long, std::vector<std::string>> abelianization(const Presentation& p);

// number of homomorphisms into the target group, by exhaustive enumeration
// with relator pruning; throws TooManyGenerators above the cap
long long count_homs(const Presentation& p, const GroupTable& g, int gen_cap = 8);

// images of the generators under some homomorphism with non-abelian image,
// if one exists
std::optional<std::vector<int>> find_nonabelian_hom(const Presentation& p, const GroupTable& g,
                                                    int gen_cap = 8, int jobs = 1);

// all vertex triples with the three edges present and the triangle absent
std::vector<Face> find_candidate_triangles(const SimplicialComplex& c);

// Edge-path-group presentation of the complement of a 3-edge cycle in a
// 3-sphere: one derived subdivision, complement taken as the full subcomplex
// avoiding the cycle's simplices, elementary collapses, spanning tree, one
// relator per remaining triangle, Tietze simplification.
Presentation complement_presentation(const SimplicialComplex& sphere, const Face& cycle,
                                     int subdivisions = 1);

struct KnotWitness {
  Face cycle;
  std::string group;        // target group the evidence lives in
  std::vector<int> images;  // generator images of the simplified presentation
  Presentation presentation;
};

struct CertifyOptions {
  std::vector<GroupTable> groups;  // defaults to S3, A4, D4
  int gen_cap = 8;
  int jobs = 1;
  bool skip_verification = false;  // caller already verified ball/sphere status
  VerifyOptions verify;
};

struct CertifyResult {
  bool certified = false;
  std::optional<KnotWitness> witness;
  // consequences when certified: non-constructible, non-shellable, and (for a
  // 3-edge knot) no straight embedding
  bool non_constructible = false;
  bool non_shellable = false;
  bool no_straight_embedding = false;
  std::string note;
};

// Knotted-triangle certificate for a 3-ball or 3-sphere. A ball is first
// completed to a sphere by coning its boundary with a fresh apex; candidate
// cycles are taken from the input complex. Never refutes knottedness:
// a negative result is "none found".
CertifyResult certify_nonconstructible(const SimplicialComplex& c, const CertifyOptions& opt = {});

}  // namespace cplx

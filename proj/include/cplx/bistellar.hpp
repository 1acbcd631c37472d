#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

// Bistellar flip (F, V): requires link(F) = boundary of the simplex on V and
// V not a face; replaces F * bd(V) by V * bd(F). The facet-subdivision move
// has F a facet and V a single fresh vertex.
struct FlipMove {
  Face face;
  Face cofacet;

  FlipMove reversed() const { return {cofacet, face}; }
  bool operator==(const FlipMove& o) const = default;
  bool operator<(const FlipMove& o) const {
    return face != o.face ? face < o.face : cofacet < o.cofacet;
  }
};

// All admissible moves, sorted by (face, cofacet). Moves that would delete a
// face of the frozen set, or create a face spanned by frozen vertices that is
// not itself frozen, are excluded; this keeps every frozen face present and
// the frozen subcomplex induced.
std::vector<FlipMove> admissible_moves(const SimplicialComplex& c,
                                       const std::vector<Face>& frozen = {});

bool is_admissible(const SimplicialComplex& c, const FlipMove& m);
SimplicialComplex apply_move(const SimplicialComplex& c, const FlipMove& m);

struct ReduceOptions {
  std::uint64_t seed = 1;
  long long budget = 100000;       // accepted flips
  double t0 = 1.0;                 // initial temperature
  double cooling = 0.99;           // geometric cooling per accepted flip
  int restart_after_rejects = 60;  // consecutive uphill rejections before restart
  int max_stale_restarts = 30;     // restarts without improvement before giving up
  long long checkpoint_interval = 1000;  // accepted flips between trace checkpoints
  std::vector<Face> frozen;
};

struct ReduceTrace {
  std::uint64_t seed = 0;
  double t0 = 1.0;
  double cooling = 0.99;
  long long budget = 0;
  std::vector<Face> frozen;
  std::vector<FlipMove> moves;     // applied moves, in order
  std::vector<long long> checkpoints;  // indices into moves where invariants were checked
};

struct ReduceResult {
  SimplicialComplex complex;       // best complex found, by (f_d, f_0)
  ReduceTrace trace;               // replays input -> complex
  long long accepted = 0;
  bool reached_minimal = false;    // best complex is the boundary of a simplex
};

// Simulated-annealing reduction of (f_d, f_0); deterministic given the seed.
ReduceResult reduce(const SimplicialComplex& c, const ReduceOptions& opt = {});

SimplicialComplex replay_trace(const SimplicialComplex& c, const ReduceTrace& t);

std::string trace_to_string(const ReduceTrace& t);
ReduceTrace trace_from_string(const std::string& text);

// true iff c is the boundary complex of a simplex (minimal sphere)
bool is_simplex_boundary(const SimplicialComplex& c);

}  // namespace cplx

#pragma once

#include <string>

#include "cplx/bistellar.hpp"
#include "cplx/complex.hpp"

namespace cplx {

// exact predicates in dimension 2
bool is_sphere2(const SimplicialComplex& c);
bool is_ball2(const SimplicialComplex& c);

enum class ManifoldKind { Closed, WithBoundary, No };

// vertex-link test: closed iff every link is a 2-sphere, with boundary iff
// every link is a 2-sphere or 2-ball with at least one ball
ManifoldKind is_combinatorial_manifold3(const SimplicialComplex& c, int jobs = 1);

enum class Verdict { Yes, No, Unknown };

struct VerifyOptions {
  std::uint64_t seed = 1;
  long long flip_budget = 100000;  // accepted flips per reduction attempt
  int seeds = 3;                   // reduction attempts before Unknown
  int jobs = 1;
};

struct RecognitionResult {
  Verdict verdict = Verdict::Unknown;
  std::string witness;   // reason when verdict == No
  ReduceTrace trace;     // reduction certificate when verdict == Yes
};

// Certificate-based 3-sphere recognition: necessary conditions (vertex links,
// Euler characteristic, homology) plus bistellar reduction to the boundary of
// the 4-simplex. Unknown only when the reduction stalls within budget.
RecognitionResult verify_sphere3(const SimplicialComplex& c, const VerifyOptions& opt = {});

// 3-ball recognition via the cone: boundary must be a 2-sphere and the
// complex plus the cone over its boundary must verify as a 3-sphere.
RecognitionResult verify_ball3(const SimplicialComplex& c, const VerifyOptions& opt = {});

// d = 3 or 4; d = 4 checks vertex links with verify_sphere3 and reduces to
// the boundary of the 5-simplex
RecognitionResult verify_sphere(const SimplicialComplex& c, int d, const VerifyOptions& opt = {});

}  // namespace cplx

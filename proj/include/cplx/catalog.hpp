#pragma once

#include <string>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx::catalog {

// Embedded complexes. Base entries are transcribed facet tables; compound
// entries (B3_16_46, S3_17_74, S3_13_56, B3_12_37_a/b, complexC) are built
// from them. Digit grouping in the source tables: juxtaposed single digits
// are distinct vertices, multi-digit labels are space-separated, so
// "17 10 13" is the tetrahedron {1,7,10,13}.
std::vector<std::string> names();
bool has(const std::string& name);
SimplicialComplex load(const std::string& name);

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  long long flip_budget = 100000;
  int seeds = 3;
  int jobs = 1;
  bool quick = false;  // skip the slow claims (ball/sphere certificates, knots)
};

struct Report {
  std::vector<Claim> claims;
  bool all_pass() const;
};

// Checks every claim the source tables come with: f-vectors, boundary and
// star identities, ball/sphere certificates, free facets, strong
// non-shellability, knot certificates, isomorphism and symmetry claims.
Report verify(const VerifyOptions& opt = {});

}  // namespace cplx::catalog

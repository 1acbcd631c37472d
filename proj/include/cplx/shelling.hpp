#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cplx/complex.hpp"
#include "cplx/recognition.hpp"

namespace cplx {

struct ShellingCertificate {
  std::vector<Face> order;                     // permutation of the facets
  std::vector<std::vector<Face>> step_ridges;  // for i >= 1: ridges realizing the
                                               // pure (d-1) intersection at step i
};

// checks the stored order against the definition
bool replay_shelling(const SimplicialComplex& c, const ShellingCertificate& cert);

enum class SearchStatus { Yes, No, Unknown };

struct ShellingResult {
  SearchStatus status = SearchStatus::Unknown;  // Yes = shellable, No = not shellable
  std::optional<ShellingCertificate> certificate;
  long long expansions = 0;
  long long budget = 0;
};

// Exhaustive backtracking over shelling extensions with memoization on the
// used facet set; No only when the search space is exhausted.
ShellingResult find_shelling(const SimplicialComplex& c, long long budget = 200000);

// All facets whose removal leaves a 3-ball. Requires verify_ball3(b) = yes.
std::vector<Face> free_facets(const SimplicialComplex& b, const VerifyOptions& opt = {});

bool is_strongly_nonshellable(const SimplicialComplex& b, const VerifyOptions& opt = {});

struct ConstructibilityTree {
  Face leaf;  // nonempty iff this node is a single facet
  std::shared_ptr<ConstructibilityTree> left, right;
  std::vector<Face> interface_facets;  // facets of the (d-1) intersection complex
  std::shared_ptr<ConstructibilityTree> interface_tree;
};

struct ConstructibilityResult {
  SearchStatus status = SearchStatus::Unknown;
  std::shared_ptr<ConstructibilityTree> tree;
  long long expansions = 0;
  long long budget = 0;
};

// Recursive bipartition search with memoization on canonical forms.
ConstructibilityResult is_constructible(const SimplicialComplex& c, long long budget = 100000);

bool replay_constructibility(const SimplicialComplex& c, const ConstructibilityTree& t);

}  // namespace cplx

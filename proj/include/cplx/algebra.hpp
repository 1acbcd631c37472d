#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cplx/complex.hpp"

namespace cplx {

using BigInt = boost::multiprecision::cpp_int;

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
  BigInt& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
  static IntegerMatrix identity(int n);
  IntegerMatrix mul(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix& o) const = default;
};

// U * A * V = D with U, V unimodular and D diagonal, diag entries
// non-negative with d1 | d2 | ... .
struct SnfResult {
  IntegerMatrix d, u, v;
  std::vector<BigInt> diag;  // nonzero diagonal entries
  int rank = 0;
};

SnfResult smith_normal_form(const IntegerMatrix& m);
BigInt det(const IntegerMatrix& m);  // for unimodularity checks in tests

struct HomologyGroups {
  struct Group {
    long long betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1
    bool is_trivial() const { return betti == 0 && torsion.empty(); }
    bool is_z() const { return betti == 1 && torsion.empty(); }
    std::string str() const;
  };
  std::vector<Group> groups;  // index = dimension
  bool reduced = false;
};

HomologyGroups homology(const SimplicialComplex& c, bool reduced = false);

// boundary matrix d_k: rows = (k-1)-faces, cols = k-faces, signs from the
// ascending vertex order
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k);

long long euler_characteristic(const SimplicialComplex& c);

struct CollapseStep {
  Face free_face;
  Face coface;
};

struct CollapseOptions {
  int backtrack_depth = 0;       // 0 = greedy
  long long step_budget = 2000000;
};

struct CollapseResult {
  bool collapsible = false;      // false means "unknown", not a refutation
  std::vector<CollapseStep> trace;
  std::vector<Face> remainder;   // live faces where the search stopped
};

// Greedy free-face collapsing (free faces of maximal dimension first,
// lexicographic tie-break) with optional bounded backtracking.
CollapseResult is_collapsible(const SimplicialComplex& c, const CollapseOptions& opt = {});

// Replays a collapse trace; true iff every step is a valid elementary
// collapse and a single vertex remains.
bool replay_collapse(const SimplicialComplex& c, const std::vector<CollapseStep>& trace);

}  // namespace cplx

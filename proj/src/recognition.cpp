#include "cplx/recognition.hpp"

#include <atomic>

#include "cplx/algebra.hpp"
#include "cplx/moves.hpp"
#include "cplx/util.hpp"

namespace cplx {

bool is_sphere2(const SimplicialComplex& c) {
  if (c.dim() != 2) throw Error(Err::WrongDimension, "is_sphere2 requires dim 2");
  return c.pseudomanifold_kind() == PseudomanifoldKind::Closed && euler_characteristic(c) == 2;
}

bool is_ball2(const SimplicialComplex& c) {
  if (c.dim() != 2) throw Error(Err::WrongDimension, "is_ball2 requires dim 2");
  if (c.pseudomanifold_kind() != PseudomanifoldKind::WithBoundary) return false;
  if (euler_characteristic(c) != 1) return false;
  // boundary must be one cycle: every boundary vertex on exactly two boundary
  // edges, and the boundary edge graph connected
  SimplicialComplex bd = c.boundary_complex();
  if (bd.is_empty() || bd.dim() != 1) return false;
  std::map<Vertex, std::vector<Vertex>> deg;
  for (const Face& e : bd.facets()) {
    deg[e[0]].push_back(e[1]);
    deg[e[1]].push_back(e[0]);
  }
  for (const auto& [v, nb] : deg)
    if (nb.size() != 2) return false;
  std::map<Vertex, Vertex> parent;
  for (const auto& [v, nb] : deg) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Face& e : bd.facets()) parent[find(e[0])] = find(e[1]);
  Vertex root = find(deg.begin()->first);
  for (const auto& [v, nb] : deg)
    if (find(v) != root) return false;
  return true;
}

ManifoldKind is_combinatorial_manifold3(const SimplicialComplex& c, int jobs) {
  if (c.dim() != 3 || !c.is_pure())
    throw Error(Err::WrongDimension, "manifold test requires a pure dim-3 complex");
  auto verts = c.vertices();
  // 0 = sphere link, 1 = ball link, 2 = bad link
  std::vector<int> kind(verts.size(), 2);
  parallel_for(verts.size(), jobs, [&](std::size_t i) {
    SimplicialComplex link = c.link({verts[i]});
    if (link.dim() != 2) {
      kind[i] = 2;
      return;
    }
    if (is_sphere2(link))
      kind[i] = 0;
    else if (is_ball2(link))
      kind[i] = 1;
    else
      kind[i] = 2;
  });
  bool any_ball = false;
  for (int k : kind) {
    if (k == 2) return ManifoldKind::No;
    if (k == 1) any_ball = true;
  }
  return any_ball ? ManifoldKind::WithBoundary : ManifoldKind::Closed;
}

namespace {

bool homology_is_sphere(const HomologyGroups& h, int d) {
  if (int(h.groups.size()) != d + 1) return false;
  for (int k = 0; k <= d; ++k) {
    const auto& g = h.groups[k];
    bool want_z = (k == 0 || k == d);
    if (want_z ? !g.is_z() : !g.is_trivial()) return false;
  }
  return true;
}

RecognitionResult reduce_to_simplex_boundary(const SimplicialComplex& c,
                                             const VerifyOptions& opt) {
  RecognitionResult res;
  for (int attempt = 0; attempt < std::max(1, opt.seeds); ++attempt) {
    ReduceOptions ro;
    ro.seed = opt.seed + std::uint64_t(attempt);
    ro.budget = opt.flip_budget;
    ReduceResult r = reduce(c, ro);
    if (r.reached_minimal) {
      res.verdict = Verdict::Yes;
      res.trace = std::move(r.trace);
      return res;
    }
  }
  res.verdict = Verdict::Unknown;
  res.witness = "bistellar reduction stalled within budget";
  return res;
}

}  // namespace

RecognitionResult verify_sphere3(const SimplicialComplex& c, const VerifyOptions& opt) {
  if (c.dim() != 3) throw Error(Err::WrongDimension, "verify_sphere3 requires dim 3");
  RecognitionResult res;
  ManifoldKind mk = is_combinatorial_manifold3(c, opt.jobs);
  if (mk != ManifoldKind::Closed) {
    res.verdict = Verdict::No;
    res.witness = mk == ManifoldKind::WithBoundary ? "complex has boundary"
                                                   : "some vertex link is not a 2-sphere";
    return res;
  }
  if (euler_characteristic(c) != 0) {
    res.verdict = Verdict::No;
    res.witness = "Euler characteristic != 0";
    return res;
  }
  if (!homology_is_sphere(homology(c), 3)) {
    res.verdict = Verdict::No;
    res.witness = "homology differs from (Z,0,0,Z)";
    return res;
  }
  return reduce_to_simplex_boundary(c, opt);
}

RecognitionResult verify_ball3(const SimplicialComplex& c, const VerifyOptions& opt) {
  if (c.dim() != 3) throw Error(Err::WrongDimension, "verify_ball3 requires dim 3");
  RecognitionResult res;
  ManifoldKind mk = is_combinatorial_manifold3(c, opt.jobs);
  if (mk != ManifoldKind::WithBoundary) {
    res.verdict = Verdict::No;
    res.witness = mk == ManifoldKind::Closed ? "complex is closed"
                                             : "some vertex link is neither 2-sphere nor 2-ball";
    return res;
  }
  SimplicialComplex bd = c.boundary_complex();
  if (bd.is_empty() || !is_sphere2(bd)) {
    res.verdict = Verdict::No;
    res.witness = "boundary is not a 2-sphere";
    return res;
  }
  HomologyGroups h = homology(c);
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    bool ok = (k == 0) ? h.groups[k].is_z() : h.groups[k].is_trivial();
    if (!ok) {
      res.verdict = Verdict::No;
      res.witness = "homology differs from a point";
      return res;
    }
  }
  SimplicialComplex sphere = glue(c, cone(bd, c.max_vertex() + 1));
  RecognitionResult sub = verify_sphere3(sphere, opt);
  if (sub.verdict == Verdict::No) sub.witness = "coned complex: " + sub.witness;
  return sub;
}

RecognitionResult verify_sphere(const SimplicialComplex& c, int d, const VerifyOptions& opt) {
  if (d == 3) return verify_sphere3(c, opt);
  if (d != 4)
    throw Error(Err::UnsupportedDimension, "verify_sphere supports d = 3 or 4");
  if (c.dim() != 4) throw Error(Err::WrongDimension, "verify_sphere(4) requires dim 4");
  RecognitionResult res;
  if (!c.is_pure()) {
    res.verdict = Verdict::No;
    res.witness = "not pure";
    return res;
  }
  if (euler_characteristic(c) != 2) {
    res.verdict = Verdict::No;
    res.witness = "Euler characteristic != 2";
    return res;
  }
  if (!homology_is_sphere(homology(c), 4)) {
    res.verdict = Verdict::No;
    res.witness = "homology differs from (Z,0,0,0,Z)";
    return res;
  }
  // every vertex link must verify as a 3-sphere
  auto verts = c.vertices();
  std::vector<int> verdicts(verts.size(), int(Verdict::Unknown));
  std::vector<std::string> witnesses(verts.size());
  parallel_for(verts.size(), opt.jobs, [&](std::size_t i) {
    VerifyOptions sub = opt;
    sub.jobs = 1;
    try {
      RecognitionResult r = verify_sphere3(c.link({verts[i]}), sub);
      verdicts[i] = int(r.verdict);
      witnesses[i] = r.witness;
    } catch (const Error& e) {
      verdicts[i] = int(Verdict::No);
      witnesses[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verdicts[i] == int(Verdict::No)) {
      res.verdict = Verdict::No;
      res.witness = "link of vertex " + std::to_string(verts[i]) + ": " + witnesses[i];
      return res;
    }
    if (verdicts[i] == int(Verdict::Unknown)) {
      res.verdict = Verdict::Unknown;
      res.witness = "link of vertex " + std::to_string(verts[i]) + " not certified";
      return res;
    }
  }
  return reduce_to_simplex_boundary(c, opt);
}

}  // namespace cplx

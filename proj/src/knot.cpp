#include "cplx/knot.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cplx/algebra.hpp"
#include "cplx/faceposet.hpp"
#include "cplx/moves.hpp"
#include "cplx/util.hpp"

namespace cplx {

Word free_reduce(Word w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

Word invert_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

namespace {

// lexicographically minimal rotation of w and of its inverse, for duplicate
// detection
Word canonical_cyclic(const Word& w) {
  if (w.empty()) return w;
  const Word inv = invert_word(w);
  Word best;
  for (const Word* v : {&w, &inv}) {
    for (std::size_t s = 0; s < v->size(); ++s) {
      Word rot;
      rot.reserve(v->size());
      for (std::size_t i = 0; i < v->size(); ++i) rot.push_back((*v)[(s + i) % v->size()]);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

void normalize(Presentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (Word& w : p.relators) {
    Word r = cyclic_reduce(std::move(w));
    if (r.empty()) continue;
    Word key = canonical_cyclic(r);
    if (seen.insert(key).second) out.push_back(std::move(r));
  }
  p.relators = std::move(out);
}

// substitute generator g := rep in-place
void substitute(Word& w, int g, const Word& rep) {
  Word out;
  Word rep_inv = invert_word(rep);
  for (int x : w) {
    if (x == g)
      out.insert(out.end(), rep.begin(), rep.end());
    else if (x == -g)
      out.insert(out.end(), rep_inv.begin(), rep_inv.end());
    else
      out.push_back(x);
  }
  w = free_reduce(std::move(out));
}

void drop_generator(Presentation& p, int g) {
  for (Word& w : p.relators)
    for (int& x : w) {
      if (x > g) --x;
      if (x < -g) ++x;
    }
  --p.ngens;
}

}  // namespace

Presentation tietze_simplified(Presentation p, const TietzeOptions& opt) {
  normalize(p);
  for (;;) {
    // pick the shortest relator containing a generator exactly once
    int best_rel = -1, best_gen = 0;
    for (int ri = 0; ri < int(p.relators.size()); ++ri) {
      const Word& w = p.relators[ri];
      if (!opt.full && w.size() > 2) continue;
      std::map<int, int> occ;
      for (int x : w) occ[std::abs(x)]++;
      int gen = 0;
      for (auto [g, cnt] : occ)
        if (cnt == 1) {
          gen = g;
          break;
        }
      if (!gen) continue;
      if (best_rel < 0 || p.relators[ri].size() < p.relators[best_rel].size()) {
        best_rel = ri;
        best_gen = gen;
      }
    }
    if (best_rel < 0) break;

    // rotate so the defining occurrence comes first, with positive sign
    Word r = p.relators[best_rel];
    std::size_t pos = 0;
    while (std::abs(r[pos]) != best_gen) ++pos;
    std::rotate(r.begin(), r.begin() + pos, r.end());
    if (r[0] < 0) {
      r = invert_word(r);  // the +g letter is now last
      std::rotate(r.begin(), r.end() - 1, r.end());
    }
    // r = g * w  ==> g = w^{-1}
    Word rep = invert_word(Word(r.begin() + 1, r.end()));

    p.relators.erase(p.relators.begin() + best_rel);
    for (Word& w : p.relators) substitute(w, best_gen, rep);
    drop_generator(p, best_gen);
    normalize(p);
  }
  return p;
}

std::pair<long long, std::vector<std::string>> abelianization(const Presentation& p) {
  IntegerMatrix m(int(p.relators.size()), p.ngens);
  for (int i = 0; i < m.rows; ++i)
    for (int x : p.relators[i]) {
      if (x > 0)
        m.at(i, x - 1) += 1;
      else
        m.at(i, -x - 1) -= 1;
    }
  SnfResult s = smith_normal_form(m);
  std::vector<std::string> torsion;
  for (const BigInt& d : s.diag)
    if (d > 1) torsion.push_back(d.str());
  return {p.ngens - s.rank, torsion};
}

namespace {

int eval_word(const Word& w, const std::vector<int>& img, const GroupTable& g) {
  int acc = g.identity;
  for (int x : w) {
    int e = x > 0 ? img[x - 1] : g.inverse[img[-x - 1]];
    acc = g.mul(acc, e);
  }
  return acc;
}

// DFS over generator images; relators checked as soon as their support is
// assigned
struct HomSearch {
  const Presentation& p;
  const GroupTable& g;
  std::vector<std::vector<const Word*>> by_level;

  HomSearch(const Presentation& pres, const GroupTable& grp) : p(pres), g(grp) {
    by_level.resize(p.ngens + 1);
    for (const Word& w : p.relators) {
      int level = 0;
      for (int x : w) level = std::max(level, std::abs(x));
      by_level[level].push_back(&w);
    }
  }

  bool check(int level, const std::vector<int>& img) const {
    for (const Word* w : by_level[level])
      if (eval_word(*w, img, g) != g.identity) return false;
    return true;
  }

  long long count(int level, std::vector<int>& img) const {
    if (level == p.ngens) return 1;
    long long total = 0;
    for (int e = 0; e < g.n; ++e) {
      img[level] = e;
      if (check(level + 1, img)) total += count(level + 1, img);
    }
    return total;
  }

  bool find_nonabelian(int level, std::vector<int>& img, std::vector<int>& out) const {
    if (level == p.ngens) {
      for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
          if (!g.commute(img[i], img[j])) {
            out = img;
            return true;
          }
      return false;
    }
    for (int e = 0; e < g.n; ++e) {
      img[level] = e;
      if (check(level + 1, img) && find_nonabelian(level + 1, img, out)) return true;
    }
    return false;
  }
};

}  // namespace

long long count_homs(const Presentation& p, const GroupTable& g, int gen_cap) {
  if (p.ngens > gen_cap)
    throw Error(Err::TooManyGenerators, "presentation has " + std::to_string(p.ngens) +
                                            " generators, cap is " + std::to_string(gen_cap));
  // relators with no generators at all must hold in the trivial sense
  for (const Word& w : p.relators)
    if (p.ngens == 0 && !free_reduce(w).empty()) return 0;
  HomSearch search(p, g);
  std::vector<int> img(p.ngens, g.identity);
  if (!search.check(0, img) && p.ngens == 0) return 0;
  return search.count(0, img);
}

std::optional<std::vector<int>> find_nonabelian_hom(const Presentation& p, const GroupTable& g,
                                                    int gen_cap, int /*jobs*/) {
  if (p.ngens > gen_cap)
    throw Error(Err::TooManyGenerators, "presentation has " + std::to_string(p.ngens) +
                                            " generators, cap is " + std::to_string(gen_cap));
  if (p.ngens < 2) return std::nullopt;  // image of < 2 generators is cyclic
  HomSearch search(p, g);
  std::vector<int> img(p.ngens, g.identity), out;
  if (search.find_nonabelian(0, img, out)) return out;
  return std::nullopt;
}

std::vector<Face> find_candidate_triangles(const SimplicialComplex& c) {
  std::vector<Face> out;
  auto verts = c.vertices();
  std::set<Face> edges(c.faces(1).begin(), c.faces(1).end());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!edges.count({verts[i], verts[j]})) continue;
      for (std::size_t k = j + 1; k < verts.size(); ++k) {
        if (!edges.count({verts[i], verts[k]}) || !edges.count({verts[j], verts[k]})) continue;
        Face t = {verts[i], verts[j], verts[k]};
        if (!c.has_face(t)) out.push_back(std::move(t));
      }
    }
  return out;
}

namespace {

struct Subdivision {
  std::vector<Face> facets;        // chains, as id sets
  std::set<Face> banned_vertices;  // singleton id faces banned in this round
};

// one barycentric subdivision; ids are assigned by (size, lex) order over the
// faces, banned faces carry over as banned barycenter vertices
Subdivision subdivide(const std::vector<Face>& facets, const std::set<Face>& banned) {
  std::set<Face> all;
  for (const Face& f : facets) {
    std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      Face g;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) g.push_back(f[i]);
      all.insert(std::move(g));
    }
  }
  std::vector<Face> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<Face, int> id;
  for (int i = 0; i < int(ordered.size()); ++i) id[ordered[i]] = i + 1;

  Subdivision out;
  // maximal chains: one per permutation of each facet
  for (const Face& f : facets) {
    Face perm = f;
    std::sort(perm.begin(), perm.end());
    do {
      Face chain;
      Face prefix;
      for (Vertex v : perm) {
        prefix = face_union(prefix, {v});
        chain.push_back(id.at(prefix));
      }
      std::sort(chain.begin(), chain.end());
      out.facets.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(out.facets.begin(), out.facets.end());
  out.facets.erase(std::unique(out.facets.begin(), out.facets.end()), out.facets.end());

  for (const auto& [face, i] : id)
    if (banned.count(face)) out.banned_vertices.insert({i});
  return out;
}

// subsets of `faces` that are chains in the banned subcomplex become banned
// faces of the next round; only needed for subdivisions >= 2
std::set<Face> banned_chains(const std::set<Face>& banned_vertices) { return banned_vertices; }

std::vector<Face> antichain(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // containment is only possible between sets sharing their maximum element
  // (chains of the same top face), but the general quadratic filter is cheap
  // enough after grouping by the maximum
  std::map<Vertex, std::vector<Face>> by_max;
  for (Face& f : faces) by_max[f.back()].push_back(std::move(f));
  std::vector<Face> out;
  for (auto& [m, group] : by_max) {
    for (const Face& f : group) {
      bool dominated = false;
      for (const Face& g : group)
        if (f != g && face_subset(f, g)) {
          dominated = true;
          break;
        }
      if (!dominated) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Presentation complement_presentation(const SimplicialComplex& sphere, const Face& cycle,
                                     int subdivisions) {
  if (cycle.size() != 3) throw Error(Err::NotACandidate, "cycle must have three vertices");
  Face t = cycle;
  std::set<Face> banned = {{t[0]}, {t[1]}, {t[2]}, {t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
  for (const Face& e : {Face{t[0], t[1]}, Face{t[0], t[2]}, Face{t[1], t[2]}})
    if (!sphere.has_face(e))
      throw Error(Err::NotACandidate, "edge " + face_str(e) + " missing");
  if (sphere.has_face(t))
    throw Error(Err::NotACandidate, "triangle " + face_str(t) + " is a face");

  std::vector<Face> facets = sphere.facets();
  for (int round = 0; round < std::max(1, subdivisions); ++round) {
    Subdivision sd = subdivide(facets, banned);
    facets = std::move(sd.facets);
    banned = banned_chains(sd.banned_vertices);
    if (round + 1 < std::max(1, subdivisions)) {
      // rebuild banned as all chains within the banned set: with barycentric
      // ids, those are exactly faces of the subdivided cycle, i.e. id sets
      // whose members are all banned vertices
      std::set<Face> expanded;
      std::set<Vertex> banned_ids;
      for (const Face& f : banned) banned_ids.insert(f[0]);
      for (const Face& f : facets) {
        std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
          Face g;
          bool all_banned = true;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) {
              g.push_back(f[i]);
              if (!banned_ids.count(f[i])) all_banned = false;
            }
          if (all_banned) expanded.insert(std::move(g));
        }
      }
      banned = std::move(expanded);
    }
  }

  // full subcomplex on the non-banned vertices
  std::set<Vertex> banned_ids;
  for (const Face& f : banned)
    if (f.size() == 1) banned_ids.insert(f[0]);
  std::vector<Face> complement;
  for (const Face& f : facets) {
    Face g;
    for (Vertex v : f)
      if (!banned_ids.count(v)) g.push_back(v);
    if (!g.empty()) complement.push_back(std::move(g));
  }
  complement = antichain(std::move(complement));

  // elementary collapses preserve the homotopy type; shrink before reading
  // off the presentation
  FacePoset poset(complement);
  for (;;) {
    auto free = poset.free_pairs();
    if (free.empty()) break;
    poset.collapse(free[0].first, free[0].second);
  }

  std::vector<Face> verts = poset.live_faces_of_size(1);
  std::vector<Face> edges = poset.live_faces_of_size(2);
  std::vector<Face> tris = poset.live_faces_of_size(3);

  // spanning tree of the 1-skeleton (BFS from the smallest vertex)
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Face& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  std::set<Face> tree;
  std::set<Vertex> visited;
  if (!verts.empty()) {
    std::deque<Vertex> queue = {verts[0][0]};
    visited.insert(verts[0][0]);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : adj[v])
        if (visited.insert(w).second) {
          tree.insert(normalized_face({v, w}));
          queue.push_back(w);
        }
    }
  }
  if (visited.size() != verts.size())
    throw Error(Err::NotACandidate, "complement is not connected");

  std::map<Face, int> gen;
  int ngens = 0;
  for (const Face& e : edges)
    if (!tree.count(e)) gen[e] = ++ngens;

  auto letter = [&](Vertex a, Vertex b) -> int {  // oriented edge a -> b
    Face e = normalized_face({a, b});
    auto it = gen.find(e);
    if (it == gen.end()) return 0;  // tree edge
    return a < b ? it->second : -it->second;
  };

  Presentation p;
  p.ngens = ngens;
  for (const Face& tri : tris) {
    Word w;
    int l1 = letter(tri[0], tri[1]);
    int l2 = letter(tri[1], tri[2]);
    int l3 = letter(tri[2], tri[0]);
    for (int l : {l1, l2, l3})
      if (l) w.push_back(l);
    p.relators.push_back(std::move(w));
  }
  return tietze_simplified(std::move(p));
}

CertifyResult certify_nonconstructible(const SimplicialComplex& c, const CertifyOptions& opt) {
  if (c.dim() != 3)
    throw Error(Err::NotBallOrSphere, "certification requires a dim-3 complex");
  CertifyResult res;
  std::vector<GroupTable> groups = opt.groups;
  if (groups.empty())
    groups = {GroupTable::symmetric3(), GroupTable::alternating4(), GroupTable::dihedral4()};

  ManifoldKind mk = is_combinatorial_manifold3(c, opt.jobs);
  if (mk == ManifoldKind::No)
    throw Error(Err::NotBallOrSphere, "complex is not a combinatorial 3-manifold");

  SimplicialComplex sphere = c;
  if (mk == ManifoldKind::WithBoundary) {
    if (!opt.skip_verification && verify_ball3(c, opt.verify).verdict != Verdict::Yes)
      throw Error(Err::NotBallOrSphere, "complex did not verify as a 3-ball");
    sphere = glue(c, cone(c.boundary_complex(), c.max_vertex() + 1));
  } else {
    if (!opt.skip_verification && verify_sphere3(c, opt.verify).verdict != Verdict::Yes)
      throw Error(Err::NotBallOrSphere, "complex did not verify as a 3-sphere");
  }

  // candidates come from the input complex; coning cannot create or close one
  std::vector<Face> candidates = find_candidate_triangles(c);
  for (const Face& cand : candidates) {
    Presentation p;
    try {
      p = complement_presentation(sphere, cand);
    } catch (const Error&) {
      continue;
    }
    if (p.ngens > opt.gen_cap) {
      res.note += "cycle " + face_str(cand) + ": presentation too large; ";
      continue;
    }
    for (const GroupTable& g : groups) {
      auto img = find_nonabelian_hom(p, g, opt.gen_cap, opt.jobs);
      if (img) {
        res.certified = true;
        res.witness = KnotWitness{cand, g.name, *img, p};
        res.non_constructible = true;
        res.non_shellable = true;
        res.no_straight_embedding = true;
        return res;
      }
    }
  }
  return res;
}

}  // namespace cplx

#include "cplx/complex.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cplx/util.hpp"

namespace cplx {

Face make_face(std::initializer_list<Vertex> vs) { return normalized_face(Face(vs)); }

Face normalized_face(Face f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  for (Vertex v : f)
    if (v < 1) throw Error(Err::Parse, "vertex labels must be positive, got " + std::to_string(v));
  return f;
}

bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_minus(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string face_str(const Face& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f[i]);
  }
  return s;
}

std::string FVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

SimplicialComplex::SimplicialComplex() {
  auto d = std::make_shared<Data>();
  d_ = std::move(d);
}

SimplicialComplex SimplicialComplex::from_checked(std::vector<Face> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  auto d = std::make_shared<Data>();
  int dim = -1;
  bool pure = true;
  for (const Face& f : facets) {
    int fd = int(f.size()) - 1;
    if (dim != -1 && fd != dim) pure = false;
    dim = std::max(dim, fd);
  }
  d->facets = std::move(facets);
  d->dim = dim;
  d->pure = pure;
  return SimplicialComplex(std::move(d));
}

SimplicialComplex SimplicialComplex::pure(std::vector<Face> facets) {
  if (facets.empty()) throw Error(Err::Empty, "facet list is empty");
  std::size_t card = 0;
  for (Face& f : facets) {
    f = normalized_face(std::move(f));
    if (f.empty()) throw Error(Err::Empty, "empty facet");
    if (card == 0) card = f.size();
    if (f.size() != card)
      throw Error(Err::NonPure, "mixed facet cardinalities " + std::to_string(card) + " and " +
                                    std::to_string(f.size()));
  }
  return from_checked(std::move(facets));
}

SimplicialComplex SimplicialComplex::general(std::vector<Face> facets) {
  if (facets.empty()) throw Error(Err::Empty, "facet list is empty");
  for (Face& f : facets) {
    f = normalized_face(std::move(f));
    if (f.empty()) throw Error(Err::Empty, "empty facet");
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const Face& a : facets)
    for (const Face& b : facets)
      if (a != b && face_subset(a, b))
        throw Error(Err::ContainedFacet, "facet " + face_str(a) + " contained in " + face_str(b));
  return from_checked(std::move(facets));
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::set<Vertex> vs;
  for (const Face& f : d_->facets) vs.insert(f.begin(), f.end());
  return std::vector<Vertex>(vs.begin(), vs.end());
}

std::size_t SimplicialComplex::vertex_count() const { return vertices().size(); }

Vertex SimplicialComplex::max_vertex() const {
  Vertex m = 0;
  for (const Face& f : d_->facets)
    if (!f.empty()) m = std::max(m, f.back());
  return m;
}

namespace {

void subsets_of_size(const Face& f, std::size_t k, std::size_t start, Face& cur,
                     std::set<Face>& out) {
  if (cur.size() == k) {
    out.insert(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= f.size(); ++i) {
    cur.push_back(f[i]);
    subsets_of_size(f, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Face>& SimplicialComplex::faces(int k) const {
  std::lock_guard<std::mutex> lock(d_->mu);
  auto it = d_->faces_by_dim.find(k);
  if (it != d_->faces_by_dim.end()) return it->second;
  std::set<Face> out;
  if (k >= 0) {
    Face cur;
    for (const Face& f : d_->facets)
      if (f.size() >= std::size_t(k) + 1) subsets_of_size(f, std::size_t(k) + 1, 0, cur, out);
  }
  auto& slot = d_->faces_by_dim[k];
  slot.assign(out.begin(), out.end());
  return slot;
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (int k = 0; k <= dim(); ++k) {
    const auto& fk = faces(k);
    out.insert(out.end(), fk.begin(), fk.end());
  }
  return out;
}

bool SimplicialComplex::has_face(const Face& f) const {
  if (f.empty()) return !is_empty();
  for (const Face& g : d_->facets)
    if (face_subset(f, g)) return true;
  return false;
}

bool SimplicialComplex::has_facet(const Face& f) const {
  return std::binary_search(d_->facets.begin(), d_->facets.end(), f);
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  for (int k = 0; k <= dim(); ++k) fv.counts.push_back((long long)faces(k).size());
  return fv;
}

SimplicialComplex SimplicialComplex::link(const Face& f) const {
  if (!has_face(f)) throw Error(Err::NotAFace, face_str(f) + " is not a face");
  std::vector<Face> out;
  for (const Face& g : d_->facets)
    if (face_subset(f, g)) out.push_back(face_minus(g, f));
  // link of a facet is the empty complex
  out.erase(std::remove_if(out.begin(), out.end(), [](const Face& x) { return x.empty(); }),
            out.end());
  if (out.empty()) return SimplicialComplex();
  return from_checked(std::move(out));
}

SimplicialComplex SimplicialComplex::star_closed(const Face& f) const {
  if (!has_face(f)) throw Error(Err::NotAFace, face_str(f) + " is not a face");
  std::vector<Face> out;
  for (const Face& g : d_->facets)
    if (face_subset(f, g)) out.push_back(g);
  return from_checked(std::move(out));
}

SimplicialComplex SimplicialComplex::delete_star(const Face& f) const {
  if (!has_face(f)) throw Error(Err::NotAFace, face_str(f) + " is not a face");
  std::vector<Face> out;
  for (const Face& g : d_->facets)
    if (!face_subset(f, g)) out.push_back(g);
  if (out.empty()) return SimplicialComplex();
  return from_checked(std::move(out));
}

SimplicialComplex SimplicialComplex::boundary_complex() const {
  if (!is_pure() || dim() < 1)
    throw Error(Err::WrongDimension, "boundary requires a pure complex of dim >= 1");
  std::map<Face, int> ridge_count;
  for (const Face& g : d_->facets)
    for (std::size_t i = 0; i < g.size(); ++i) {
      Face r = g;
      r.erase(r.begin() + i);
      ridge_count[r]++;
    }
  std::vector<Face> out;
  for (const auto& [r, n] : ridge_count)
    if (n == 1) out.push_back(r);
  if (out.empty()) return SimplicialComplex();
  return from_checked(std::move(out));
}

PseudomanifoldKind SimplicialComplex::pseudomanifold_kind() const {
  if (is_empty() || !is_pure()) return PseudomanifoldKind::No;
  // ridge -> incident facet indices (the empty ridge handles dim 0)
  std::map<Face, std::vector<int>> ridges;
  const auto& fs = d_->facets;
  for (int i = 0; i < int(fs.size()); ++i)
    for (std::size_t j = 0; j < fs[i].size(); ++j) {
      Face r = fs[i];
      r.erase(r.begin() + j);
      ridges[r].push_back(i);
    }
  bool has_boundary = false;
  for (const auto& [r, inc] : ridges) {
    if (inc.size() > 2) return PseudomanifoldKind::No;
    if (inc.size() == 1) has_boundary = true;
  }
  // strong connectivity via union-find on the facet-ridge graph
  std::vector<int> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [r, inc] : ridges)
    if (inc.size() == 2) parent[find(inc[0])] = find(inc[1]);
  int root = find(0);
  for (int i = 1; i < int(fs.size()); ++i)
    if (find(i) != root) return PseudomanifoldKind::No;
  return has_boundary ? PseudomanifoldKind::WithBoundary : PseudomanifoldKind::Closed;
}

SimplicialComplex SimplicialComplex::relabeled(const std::map<Vertex, Vertex>& map) const {
  std::set<Vertex> images;
  std::vector<Face> out;
  for (const Face& g : d_->facets) {
    Face h;
    for (Vertex v : g) {
      auto it = map.find(v);
      if (it == map.end()) throw Error(Err::NotAVertex, "no image for vertex " + std::to_string(v));
      h.push_back(it->second);
    }
    out.push_back(normalized_face(std::move(h)));
    if (out.back().size() != g.size())
      throw Error(Err::VertexClash, "relabeling is not injective on " + face_str(g));
  }
  if (out.empty()) return SimplicialComplex();
  return from_checked(std::move(out));
}

SimplicialComplex parse_cplx(const std::string& text) {
  std::vector<Face> facets;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    Face f;
    long long v;
    while (ls >> v) {
      if (v < 1)
        throw Error(Err::Parse, "line " + std::to_string(lineno) + ": bad vertex label");
      f.push_back(Vertex(v));
    }
    if (!ls.eof())
      throw Error(Err::Parse, "line " + std::to_string(lineno) + ": not an integer list");
    if (!f.empty()) facets.push_back(std::move(f));
  }
  if (facets.empty()) throw Error(Err::Empty, "no facets in input");
  return SimplicialComplex::pure(std::move(facets));
}

SimplicialComplex read_cplx_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_cplx(ss.str());
}

std::string to_cplx(const SimplicialComplex& c) {
  std::string out;
  for (const Face& f : c.facets()) {
    out += face_str(f);
    out += '\n';
  }
  return out;
}

void write_cplx_file(const std::string& path, const SimplicialComplex& c) {
  std::ofstream out(path);
  if (!out) throw Error(Err::Parse, "cannot open " + path + " for writing");
  out << to_cplx(c);
}

}  // namespace cplx

#include "cplx/iso.hpp"

#include <algorithm>
#include <set>

namespace cplx {

namespace {

struct RefineContext {
  int n = 0;
  std::vector<Vertex> verts;                  // index -> original label
  std::vector<std::vector<int>> nbrs;         // adjacency by index
  std::vector<std::vector<long long>> invariant;  // initial per-vertex invariant
  std::vector<std::vector<int>> facet_idx;    // facets over indices, sorted
};

RefineContext build_context(const SimplicialComplex& c) {
  RefineContext ctx;
  ctx.verts = c.vertices();
  ctx.n = int(ctx.verts.size());
  std::map<Vertex, int> pos;
  for (int i = 0; i < ctx.n; ++i) pos[ctx.verts[i]] = i;

  ctx.nbrs.resize(ctx.n);
  for (const Face& e : c.faces(1)) {
    int a = pos[e[0]], b = pos[e[1]];
    ctx.nbrs[a].push_back(b);
    ctx.nbrs[b].push_back(a);
  }
  for (auto& v : ctx.nbrs) std::sort(v.begin(), v.end());

  // invariant: f-vector of the vertex link, then sorted neighbor degrees
  ctx.invariant.resize(ctx.n);
  for (int i = 0; i < ctx.n; ++i) {
    FVector lf = c.link({ctx.verts[i]}).f_vector();
    auto& inv = ctx.invariant[i];
    inv = lf.counts;
    inv.push_back(-1);  // separator
    std::vector<long long> degs;
    for (int j : ctx.nbrs[i]) degs.push_back((long long)ctx.nbrs[j].size());
    std::sort(degs.begin(), degs.end());
    inv.insert(inv.end(), degs.begin(), degs.end());
  }

  for (const Face& f : c.facets()) {
    std::vector<int> g;
    for (Vertex v : f) g.push_back(pos[v]);
    std::sort(g.begin(), g.end());
    ctx.facet_idx.push_back(std::move(g));
  }
  std::sort(ctx.facet_idx.begin(), ctx.facet_idx.end());
  return ctx;
}

// iterate (color, sorted neighbor colors) to a stable partition
std::vector<int> refine(const RefineContext& ctx, std::vector<int> color) {
  for (;;) {
    std::vector<std::pair<std::vector<long long>, int>> sig(ctx.n);
    for (int i = 0; i < ctx.n; ++i) {
      std::vector<long long> s;
      s.push_back(color[i]);
      std::vector<long long> ncol;
      for (int j : ctx.nbrs[i]) ncol.push_back(color[j]);
      std::sort(ncol.begin(), ncol.end());
      s.insert(s.end(), ncol.begin(), ncol.end());
      sig[i] = {std::move(s), i};
    }
    std::vector<std::pair<std::vector<long long>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(ctx.n);
    int classes = 0;
    for (int k = 0; k < ctx.n; ++k) {
      if (k > 0 && sorted[k].first != sorted[k - 1].first) ++classes;
      next[sorted[k].second] = classes;
    }
    bool stable = true;
    for (int i = 0; i < ctx.n && stable; ++i)
      for (int j = 0; j < ctx.n && stable; ++j)
        if ((color[i] == color[j]) != (next[i] == next[j])) stable = false;
    color = std::move(next);
    if (stable) return color;
  }
}

std::vector<int> initial_colors(const RefineContext& ctx) {
  std::vector<std::pair<std::vector<long long>, int>> sig(ctx.n);
  for (int i = 0; i < ctx.n; ++i) sig[i] = {ctx.invariant[i], i};
  std::sort(sig.begin(), sig.end());
  std::vector<int> color(ctx.n);
  int classes = 0;
  for (int k = 0; k < ctx.n; ++k) {
    if (k > 0 && sig[k].first != sig[k - 1].first) ++classes;
    color[sig[k].second] = classes;
  }
  return refine(ctx, color);
}

// facet list under the labeling "index i -> rank of color[i]"; colors discrete
std::vector<std::vector<int>> apply_labels(const RefineContext& ctx, const std::vector<int>& color) {
  std::vector<std::vector<int>> out;
  out.reserve(ctx.facet_idx.size());
  for (const auto& f : ctx.facet_idx) {
    std::vector<int> g;
    for (int i : f) g.push_back(color[i] + 1);
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CanonSearch {
  const RefineContext& ctx;
  std::vector<std::vector<int>> best;
  std::vector<int> best_color;

  void dfs(const std::vector<int>& color) {
    // first non-singleton cell (smallest color value)
    std::vector<int> count(ctx.n, 0);
    for (int c : color) ++count[c];
    int cell = -1;
    for (int c = 0; c < ctx.n; ++c)
      if (count[c] >= 2) {
        cell = c;
        break;
      }
    if (cell < 0) {
      auto img = apply_labels(ctx, color);
      if (best.empty() || img < best) {
        best = img;
        best_color = color;
      }
      return;
    }
    for (int i = 0; i < ctx.n; ++i) {
      if (color[i] != cell) continue;
      // individualize i: it goes strictly before the rest of its cell
      std::vector<int> next(ctx.n);
      for (int j = 0; j < ctx.n; ++j) next[j] = 2 * color[j] + (color[j] == cell ? 1 : 0);
      next[i] = 2 * cell;
      dfs(refine(ctx, next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& c) {
  CanonicalForm out;
  if (c.is_empty()) {
    out.complex = c;
    return out;
  }
  RefineContext ctx = build_context(c);
  CanonSearch search{ctx};
  search.dfs(initial_colors(ctx));
  std::vector<Face> facets;
  for (const auto& f : search.best) facets.push_back(Face(f.begin(), f.end()));
  out.complex = SimplicialComplex::general(std::move(facets));
  for (int i = 0; i < ctx.n; ++i) out.relabeling[ctx.verts[i]] = search.best_color[i] + 1;
  return out;
}

std::optional<std::map<Vertex, Vertex>> are_isomorphic(const SimplicialComplex& a,
                                                       const SimplicialComplex& b) {
  if (a.is_empty() && b.is_empty()) return std::map<Vertex, Vertex>{};
  if (a.is_empty() != b.is_empty()) return std::nullopt;
  CanonicalForm ca = canonical_form(a);
  CanonicalForm cb = canonical_form(b);
  if (ca.complex != cb.complex) return std::nullopt;
  std::map<Vertex, Vertex> canon_to_b;
  for (const auto& [v, l] : cb.relabeling) canon_to_b[l] = v;
  std::map<Vertex, Vertex> out;
  for (const auto& [v, l] : ca.relabeling) out[v] = canon_to_b.at(l);
  // verify facet by facet
  if (a.relabeled(out) != b) return std::nullopt;
  return out;
}

namespace {

struct AutSearch {
  const RefineContext& ctx;
  std::vector<int> color;
  std::set<std::vector<int>> facet_set;
  std::vector<std::vector<bool>> adj;
  std::vector<int> image;
  std::vector<bool> used;
  std::vector<std::map<Vertex, Vertex>>* out;
  const std::vector<Vertex>* verts;

  void dfs(int i) {
    int n = ctx.n;
    if (i == n) {
      // full facet-set check
      for (const auto& f : ctx.facet_idx) {
        std::vector<int> g;
        for (int x : f) g.push_back(image[x]);
        std::sort(g.begin(), g.end());
        if (!facet_set.count(g)) return;
      }
      std::map<Vertex, Vertex> perm;
      for (int j = 0; j < n; ++j) perm[(*verts)[j]] = (*verts)[image[j]];
      out->push_back(std::move(perm));
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || color[w] != color[i]) continue;
      // adjacency consistency with already assigned vertices
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (adj[i][j] != adj[w][image[j]]) ok = false;
      if (!ok) continue;
      image[i] = w;
      used[w] = true;
      dfs(i + 1);
      used[w] = false;
    }
  }
};

}  // namespace

AutomorphismGroup automorphism_group(const SimplicialComplex& c) {
  AutomorphismGroup g;
  if (c.is_empty()) {
    g.order = 1;
    return g;
  }
  RefineContext ctx = build_context(c);
  std::vector<int> color = initial_colors(ctx);
  AutSearch search{ctx, color};
  for (const auto& f : ctx.facet_idx) search.facet_set.insert(f);
  search.adj.assign(ctx.n, std::vector<bool>(ctx.n, false));
  for (int i = 0; i < ctx.n; ++i)
    for (int j : ctx.nbrs[i]) search.adj[i][j] = true;
  search.image.assign(ctx.n, -1);
  search.used.assign(ctx.n, false);
  search.out = &g.perms;
  search.verts = &ctx.verts;
  search.dfs(0);
  g.order = g.perms.size();
  return g;
}

}  // namespace cplx

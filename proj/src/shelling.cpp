#include "cplx/shelling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cplx/iso.hpp"
#include "cplx/moves.hpp"
#include "cplx/util.hpp"

namespace cplx {

namespace {

void all_nonempty_subsets(const Face& f, std::vector<Face>& out) {
  std::size_t n = f.size();
  for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
    Face g;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) g.push_back(f[i]);
    out.push_back(std::move(g));
  }
}

std::vector<Face> ridges_of(const Face& f) {
  std::vector<Face> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Face r = f;
    r.erase(r.begin() + i);
    out.push_back(std::move(r));
  }
  return out;
}

// shelling condition for facet f against the union of `present` faces:
// the intersection with the union must be generated by ridges of f
bool valid_extension(const Face& f, const std::unordered_map<Face, int, IntVecHash>& present,
                     std::vector<Face>* realized_ridges) {
  std::vector<Face> shared_ridges;
  for (Face& r : ridges_of(f))
    if (present.count(r)) shared_ridges.push_back(std::move(r));
  if (shared_ridges.empty()) return false;
  std::vector<Face> subs;
  all_nonempty_subsets(f, subs);
  for (const Face& g : subs) {
    if (g.size() == f.size() || !present.count(g)) continue;
    bool covered = false;
    for (const Face& r : shared_ridges)
      if (face_subset(g, r)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  if (realized_ridges) *realized_ridges = shared_ridges;
  return true;
}

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (auto x : v) h = hash_combine(h, std::hash<std::uint64_t>()(x));
    return h;
  }
};

struct ShellingSearch {
  const std::vector<Face>& facets;
  long long budget;
  long long expansions = 0;
  std::unordered_map<Face, int, IntVecHash> present;  // face -> multiplicity
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> failed;
  std::vector<std::uint64_t> used_mask;
  std::vector<int> order;
  std::vector<std::vector<Face>> step_ridges;
  bool exhausted = true;

  explicit ShellingSearch(const std::vector<Face>& fs, long long b) : facets(fs), budget(b) {
    used_mask.assign((fs.size() + 63) / 64, 0);
  }

  void push_faces(const Face& f) {
    std::vector<Face> subs;
    all_nonempty_subsets(f, subs);
    for (Face& g : subs) present[std::move(g)]++;
  }
  void pop_faces(const Face& f) {
    std::vector<Face> subs;
    all_nonempty_subsets(f, subs);
    for (const Face& g : subs) {
      auto it = present.find(g);
      if (--it->second == 0) present.erase(it);
    }
  }

  bool dfs(std::size_t placed) {
    if (placed == facets.size()) return true;
    if (expansions >= budget) {
      exhausted = false;
      return false;
    }
    if (failed.count(used_mask)) return false;
    // candidates ordered by shared-ridge count descending, then lex
    std::vector<std::pair<int, int>> cands;  // (-shared, index)
    for (int i = 0; i < int(facets.size()); ++i) {
      if (used_mask[i / 64] & (1ull << (i % 64))) continue;
      std::vector<Face> rr;
      if (placed == 0) {
        cands.push_back({0, i});
        continue;
      }
      if (!valid_extension(facets[i], present, &rr)) continue;
      cands.push_back({-int(rr.size()), i});
    }
    std::sort(cands.begin(), cands.end());
    for (auto [neg, i] : cands) {
      ++expansions;
      if (expansions > budget) {
        exhausted = false;
        break;
      }
      std::vector<Face> rr;
      if (placed > 0) valid_extension(facets[i], present, &rr);
      used_mask[i / 64] |= 1ull << (i % 64);
      push_faces(facets[i]);
      order.push_back(i);
      step_ridges.push_back(std::move(rr));
      if (dfs(placed + 1)) return true;
      step_ridges.pop_back();
      order.pop_back();
      pop_faces(facets[i]);
      used_mask[i / 64] &= ~(1ull << (i % 64));
    }
    if (exhausted) failed.insert(used_mask);
    return false;
  }
};

}  // namespace

bool replay_shelling(const SimplicialComplex& c, const ShellingCertificate& cert) {
  if (!c.is_pure() || c.is_empty()) return false;
  std::vector<Face> sorted_order = cert.order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != c.facets()) return false;
  if (cert.step_ridges.size() != cert.order.size()) return false;
  if (!cert.step_ridges[0].empty()) return false;
  std::unordered_map<Face, int, IntVecHash> present;
  std::vector<Face> subs;
  for (std::size_t i = 0; i < cert.order.size(); ++i) {
    const Face& f = cert.order[i];
    if (i > 0) {
      std::vector<Face> realized;
      if (!valid_extension(f, present, &realized)) return false;
      std::set<Face> want(realized.begin(), realized.end());
      std::set<Face> got(cert.step_ridges[i].begin(), cert.step_ridges[i].end());
      if (want != got) return false;
    }
    subs.clear();
    all_nonempty_subsets(f, subs);
    for (Face& g : subs) present[std::move(g)]++;
  }
  return true;
}

ShellingResult find_shelling(const SimplicialComplex& c, long long budget) {
  if (!c.is_pure() || c.is_empty())
    throw Error(Err::WrongDimension, "find_shelling requires a nonempty pure complex");
  ShellingResult res;
  res.budget = budget;
  ShellingSearch search(c.facets(), budget);
  bool found = search.dfs(0);
  res.expansions = search.expansions;
  if (found) {
    ShellingCertificate cert;
    for (std::size_t i = 0; i < search.order.size(); ++i) {
      cert.order.push_back(c.facets()[search.order[i]]);
      cert.step_ridges.push_back(search.step_ridges[i]);
    }
    res.status = SearchStatus::Yes;
    res.certificate = std::move(cert);
  } else if (search.exhausted) {
    res.status = SearchStatus::No;
  } else {
    res.status = SearchStatus::Unknown;
  }
  return res;
}

std::vector<Face> free_facets(const SimplicialComplex& b, const VerifyOptions& opt) {
  if (verify_ball3(b, opt).verdict != Verdict::Yes)
    throw Error(Err::NotABall, "free_facets requires a verified 3-ball");
  // a single tetrahedron reports its facet as free (removal leaves the empty
  // complex)
  if (b.facet_count() == 1) return {b.facets()[0]};
  const auto& fs = b.facets();
  std::vector<char> is_free(fs.size(), 0);
  parallel_for(fs.size(), opt.jobs, [&](std::size_t i) {
    VerifyOptions sub = opt;
    sub.jobs = 1;
    SimplicialComplex rest = remove_facet(b, fs[i]);
    try {
      is_free[i] = verify_ball3(rest, sub).verdict == Verdict::Yes ? 1 : 0;
    } catch (const Error&) {
      is_free[i] = 0;
    }
  });
  std::vector<Face> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (is_free[i]) out.push_back(fs[i]);
  return out;
}

bool is_strongly_nonshellable(const SimplicialComplex& b, const VerifyOptions& opt) {
  return free_facets(b, opt).empty();
}

namespace {

struct ConstructSearch {
  long long budget;
  long long expansions = 0;
  bool exhausted = true;
  // canonical form -> (status, tree in canonical labels)
  std::unordered_map<std::string, std::pair<SearchStatus, std::shared_ptr<ConstructibilityTree>>>
      memo;

  std::shared_ptr<ConstructibilityTree> relabel_tree(const ConstructibilityTree& t,
                                                     const std::map<Vertex, Vertex>& map) {
    auto out = std::make_shared<ConstructibilityTree>();
    if (!t.leaf.empty()) {
      Face f;
      for (Vertex v : t.leaf) f.push_back(map.at(v));
      out->leaf = normalized_face(std::move(f));
      return out;
    }
    if (t.left) out->left = relabel_tree(*t.left, map);
    if (t.right) out->right = relabel_tree(*t.right, map);
    for (const Face& g : t.interface_facets) {
      Face f;
      for (Vertex v : g) f.push_back(map.at(v));
      out->interface_facets.push_back(normalized_face(std::move(f)));
    }
    std::sort(out->interface_facets.begin(), out->interface_facets.end());
    if (t.interface_tree) out->interface_tree = relabel_tree(*t.interface_tree, map);
    return out;
  }

  std::pair<SearchStatus, std::shared_ptr<ConstructibilityTree>> run(const SimplicialComplex& c) {
    if (c.facet_count() == 1) {
      auto leaf = std::make_shared<ConstructibilityTree>();
      leaf->leaf = c.facets()[0];
      return {SearchStatus::Yes, leaf};
    }
    if (c.dim() == 0) {
      // at most two points (see the vertex-pair base case of the recursion)
      if (c.facet_count() == 2) {
        auto node = std::make_shared<ConstructibilityTree>();
        node->left = std::make_shared<ConstructibilityTree>();
        node->left->leaf = c.facets()[0];
        node->right = std::make_shared<ConstructibilityTree>();
        node->right->leaf = c.facets()[1];
        return {SearchStatus::Yes, node};
      }
      return {SearchStatus::No, nullptr};
    }

    CanonicalForm canon = canonical_form(c);
    std::string key = to_cplx(canon.complex);
    auto it = memo.find(key);
    if (it != memo.end()) {
      if (it->second.first == SearchStatus::Yes) {
        std::map<Vertex, Vertex> canon_to_orig;
        for (const auto& [v, l] : canon.relabeling) canon_to_orig[l] = v;
        return {SearchStatus::Yes, relabel_tree(*it->second.second, canon_to_orig)};
      }
      return {it->second.first, nullptr};
    }

    const auto& fs = c.facets();
    int n = int(fs.size());
    bool saw_unknown = false;
    // facet 0 stays on the left side; masks choose the right side
    for (std::uint64_t mask = 1; n <= 63 && mask < (1ull << (n - 1)); ++mask) {
      if (++expansions > budget) {
        exhausted = false;
        break;
      }
      std::vector<Face> left_f, right_f;
      left_f.push_back(fs[0]);
      for (int i = 1; i < n; ++i) {
        if (mask & (1ull << (i - 1)))
          right_f.push_back(fs[i]);
        else
          left_f.push_back(fs[i]);
      }
      if (right_f.empty()) continue;
      SimplicialComplex c1 = SimplicialComplex::pure(left_f);
      SimplicialComplex c2 = SimplicialComplex::pure(right_f);
      // intersection complex: maximal faces common to both
      std::set<Face> faces1;
      for (const Face& f : c1.all_faces()) faces1.insert(f);
      std::vector<Face> common;
      for (const Face& f : c2.all_faces())
        if (faces1.count(f)) common.push_back(f);
      if (common.empty()) continue;
      // maximal elements
      std::vector<Face> maximal;
      for (const Face& f : common) {
        bool dominated = false;
        for (const Face& g : common)
          if (f != g && face_subset(f, g)) {
            dominated = true;
            break;
          }
        if (!dominated) maximal.push_back(f);
      }
      bool pure_ridge = !maximal.empty();
      for (const Face& f : maximal)
        if (int(f.size()) != c.dim() + 1 - 1) pure_ridge = false;
      if (!pure_ridge) continue;
      SimplicialComplex inter = SimplicialComplex::pure(maximal);

      auto [s1, t1] = run(c1);
      if (s1 == SearchStatus::Unknown) saw_unknown = true;
      if (s1 != SearchStatus::Yes) continue;
      auto [s2, t2] = run(c2);
      if (s2 == SearchStatus::Unknown) saw_unknown = true;
      if (s2 != SearchStatus::Yes) continue;
      auto [si, ti] = run(inter);
      if (si == SearchStatus::Unknown) saw_unknown = true;
      if (si != SearchStatus::Yes) continue;

      auto node = std::make_shared<ConstructibilityTree>();
      node->left = t1;
      node->right = t2;
      node->interface_facets = inter.facets();
      node->interface_tree = ti;
      std::map<Vertex, Vertex> orig_to_canon(canon.relabeling.begin(), canon.relabeling.end());
      memo[key] = {SearchStatus::Yes, relabel_tree(*node, orig_to_canon)};
      return {SearchStatus::Yes, node};
    }
    if (n > 63) exhausted = false;  // bipartitions not enumerable with this mask width
    SearchStatus s =
        (exhausted && !saw_unknown) ? SearchStatus::No : SearchStatus::Unknown;
    if (s == SearchStatus::No) memo[key] = {s, nullptr};
    return {s, nullptr};
  }
};

}  // namespace

ConstructibilityResult is_constructible(const SimplicialComplex& c, long long budget) {
  if (!c.is_pure() || c.is_empty())
    throw Error(Err::WrongDimension, "is_constructible requires a nonempty pure complex");
  ConstructSearch search{budget};
  auto [status, tree] = search.run(c);
  ConstructibilityResult res;
  res.status = status;
  res.tree = tree;
  res.expansions = search.expansions;
  res.budget = budget;
  return res;
}

namespace {

std::vector<Face> tree_facets(const ConstructibilityTree& t) {
  if (!t.leaf.empty()) return {t.leaf};
  std::vector<Face> out;
  if (t.left)
    for (Face& f : tree_facets(*t.left)) out.push_back(std::move(f));
  if (t.right)
    for (Face& f : tree_facets(*t.right)) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool replay_constructibility(const SimplicialComplex& c, const ConstructibilityTree& t) {
  if (!t.leaf.empty()) return c.facet_count() == 1 && c.facets()[0] == t.leaf;
  if (!t.left || !t.right) return false;
  std::vector<Face> lf = tree_facets(*t.left);
  std::vector<Face> rf = tree_facets(*t.right);
  std::vector<Face> all = lf;
  all.insert(all.end(), rf.begin(), rf.end());
  std::sort(all.begin(), all.end());
  if (all != c.facets()) return false;  // also fails on overlap (duplicates)
  SimplicialComplex c1 = SimplicialComplex::pure(lf);
  SimplicialComplex c2 = SimplicialComplex::pure(rf);
  if (c1.dim() != c.dim() || c2.dim() != c.dim()) return false;

  std::set<Face> faces1;
  for (const Face& f : c1.all_faces()) faces1.insert(f);
  std::vector<Face> common;
  for (const Face& f : c2.all_faces())
    if (faces1.count(f)) common.push_back(f);

  if (c.dim() == 0) {
    // vertex-pair split: empty interface
    return common.empty() && t.interface_facets.empty() && c.facet_count() == 2;
  }
  std::vector<Face> maximal;
  for (const Face& f : common) {
    bool dominated = false;
    for (const Face& g : common)
      if (f != g && face_subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  if (maximal.empty() || maximal != t.interface_facets) return false;
  for (const Face& f : maximal)
    if (int(f.size()) != c.dim()) return false;
  SimplicialComplex inter = SimplicialComplex::pure(maximal);
  if (!t.interface_tree) return false;
  return replay_constructibility(c1, *t.left) && replay_constructibility(c2, *t.right) &&
         replay_constructibility(inter, *t.interface_tree);
}

}  // namespace cplx

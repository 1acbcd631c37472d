#include "cplx/bistellar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "cplx/util.hpp"

namespace cplx {

bool is_simplex_boundary(const SimplicialComplex& c) {
  if (c.is_empty() || !c.is_pure()) return false;
  int d = c.dim();
  auto verts = c.vertices();
  if (int(verts.size()) != d + 2) return false;
  if (int(c.facet_count()) != d + 2) return false;
  // every (d+1)-subset of the vertex set must be a facet
  for (std::size_t skip = 0; skip < verts.size(); ++skip) {
    Face f;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (i != skip) f.push_back(verts[i]);
    if (!c.has_facet(f)) return false;
  }
  return true;
}

namespace {

void proper_subsets(const Face& f, std::vector<Face>& out) {
  std::size_t n = f.size();
  for (std::size_t mask = 1; mask + 1 < (1ull << n); ++mask) {
    Face g;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) g.push_back(f[i]);
    out.push_back(std::move(g));
  }
}

struct FrozenSet {
  std::set<Face> closure;  // frozen faces and all their subfaces
  Face vertex_span;        // union of frozen vertices

  explicit FrozenSet(const std::vector<Face>& frozen) {
    for (const Face& f : frozen) {
      Face g = normalized_face(f);
      vertex_span = face_union(vertex_span, g);
      std::size_t n = g.size();
      for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
        Face h;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1ull << i)) h.push_back(g[i]);
        closure.insert(std::move(h));
      }
    }
  }

  bool empty() const { return closure.empty(); }

  // the move deletes the open star of F: a frozen face dies iff F lies
  // below one, i.e. F is in the closure
  bool move_deletes(const Face& f) const { return closure.count(f) != 0; }

  // faces created by the move are V u F' for proper F' of F; exclude the move
  // if one of them is spanned by frozen vertices without being frozen itself
  bool move_spans(const Face& v, const Face& f) const {
    if (!face_subset(v, vertex_span)) return false;
    if (!closure.count(v)) return true;  // V itself would violate fullness
    std::vector<Face> subs;
    proper_subsets(f, subs);
    for (const Face& s : subs) {
      Face w = face_union(v, s);
      if (face_subset(w, vertex_span) && !closure.count(w)) return true;
    }
    return false;
  }

  bool excludes(const FlipMove& m) const {
    if (empty()) return false;
    return move_deletes(m.face) || move_spans(m.cofacet, m.face);
  }
};

}  // namespace

std::vector<FlipMove> admissible_moves(const SimplicialComplex& c,
                                       const std::vector<Face>& frozen) {
  std::vector<FlipMove> out;
  if (c.is_empty() || !c.is_pure()) return out;
  int d = c.dim();
  FrozenSet fz(frozen);

  // proper face -> incident facets
  std::map<Face, std::vector<const Face*>> star;
  for (const Face& g : c.facets()) {
    std::vector<Face> subs;
    proper_subsets(g, subs);
    for (Face& s : subs) star[std::move(s)].push_back(&g);
  }

  for (const auto& [f, inc] : star) {
    std::size_t want = std::size_t(d) + 2 - f.size();  // |V|
    if (inc.size() != want) continue;
    Face v;
    for (const Face* g : inc) v = face_union(v, face_minus(*g, f));
    if (v.size() != want) continue;
    // link(F) must be exactly bd(simplex on V)
    std::set<Face> link;
    for (const Face* g : inc) link.insert(face_minus(*g, f));
    bool ok = true;
    for (std::size_t skip = 0; skip < v.size() && ok; ++skip) {
      Face w;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (i != skip) w.push_back(v[i]);
      if (!link.count(w)) ok = false;
    }
    if (!ok) continue;
    if (c.has_face(v)) continue;
    FlipMove m{f, v};
    if (fz.excludes(m)) continue;
    out.push_back(std::move(m));
  }

  // facet subdivision with a fresh vertex
  Vertex fresh = c.max_vertex() + 1;
  for (const Face& g : c.facets()) {
    FlipMove m{g, {fresh}};
    if (fz.excludes(m)) continue;
    out.push_back(std::move(m));
  }

  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const SimplicialComplex& c, const FlipMove& m) {
  if (m.face.empty() || m.cofacet.empty()) return false;
  if (!c.has_face(m.face)) return false;
  int d = c.dim();
  if (m.face.size() + m.cofacet.size() != std::size_t(d) + 2) return false;
  if (c.has_face(m.cofacet)) return false;
  if (!face_intersection(m.face, m.cofacet).empty()) return false;
  if (m.face.size() == std::size_t(d) + 1) {
    // subdivision move: cofacet is one fresh vertex
    return m.cofacet.size() == 1 && c.has_facet(m.face);
  }
  std::set<Face> link;
  for (const Face& g : c.facets())
    if (face_subset(m.face, g)) link.insert(face_minus(g, m.face));
  if (link.size() != m.cofacet.size()) return false;
  for (std::size_t skip = 0; skip < m.cofacet.size(); ++skip) {
    Face w;
    for (std::size_t i = 0; i < m.cofacet.size(); ++i)
      if (i != skip) w.push_back(m.cofacet[i]);
    if (!link.count(w)) return false;
  }
  return true;
}

SimplicialComplex apply_move(const SimplicialComplex& c, const FlipMove& m) {
  if (!is_admissible(c, m))
    throw Error(Err::Inadmissible,
                "move (" + face_str(m.face) + " | " + face_str(m.cofacet) + ") is not admissible");
  std::vector<Face> out;
  for (const Face& g : c.facets())
    if (!face_subset(m.face, g)) out.push_back(g);
  for (std::size_t i = 0; i < m.face.size(); ++i) {
    Face rest = m.face;
    rest.erase(rest.begin() + i);
    out.push_back(face_union(m.cofacet, rest));
  }
  return SimplicialComplex::pure(std::move(out));
}

namespace {

std::pair<long long, long long> size_key(const SimplicialComplex& c) {
  return {(long long)c.facet_count(), (long long)c.vertex_count()};
}

// facet-count change of a move: |F| added, |V| removed
long long move_delta(const FlipMove& m) {
  return (long long)m.face.size() - (long long)m.cofacet.size();
}

}  // namespace

ReduceResult reduce(const SimplicialComplex& c, const ReduceOptions& opt) {
  ReduceResult res;
  res.trace.seed = opt.seed;
  res.trace.t0 = opt.t0;
  res.trace.cooling = opt.cooling;
  res.trace.budget = opt.budget;
  res.trace.frozen = opt.frozen;

  SimplicialComplex cur = c;
  SimplicialComplex best = c;
  std::size_t best_len = 0;
  int d = c.dim();

  Rng master(opt.seed);
  std::uint64_t restart_idx = 0;
  Rng rng(master.fork(restart_idx));
  double temp = opt.t0;
  int rejects = 0;
  int stale_restarts = 0;
  bool improved_since_restart = false;
  long long last_checkpoint = 0;

  auto note_accept = [&](const FlipMove& m) {
    cur = apply_move(cur, m);
    res.trace.moves.push_back(m);
    ++res.accepted;
    temp *= opt.cooling;
    rejects = 0;
    if (size_key(cur) < size_key(best)) {
      best = cur;
      best_len = res.trace.moves.size();
      improved_since_restart = true;
    }
    if (res.accepted - last_checkpoint >= opt.checkpoint_interval) {
      res.trace.checkpoints.push_back((long long)res.trace.moves.size());
      last_checkpoint = res.accepted;
    }
  };

  while (res.accepted < opt.budget) {
    if ((long long)best.facet_count() == d + 2 && is_simplex_boundary(best)) break;

    auto moves = admissible_moves(cur, opt.frozen);
    if (moves.empty()) break;  // cannot happen for closed manifolds (subdivision exists)

    // classify by (facet delta, vertex delta)
    long long best_down = 0, best_up = 0;
    bool has_down = false, has_neutral = false, has_up = false;
    for (const auto& m : moves) {
      long long delta = move_delta(m);
      if (delta < 0) {
        if (!has_down || delta < best_down) best_down = delta;
        has_down = true;
      } else if (delta == 0) {
        has_neutral = true;
      } else {
        if (!has_up || delta < best_up) best_up = delta;
        has_up = true;
      }
    }

    auto pick_random = [&](long long delta_want) -> const FlipMove& {
      std::vector<const FlipMove*> pool;
      for (const auto& m : moves)
        if (move_delta(m) == delta_want) pool.push_back(&m);
      return *pool[rng.below(pool.size())];
    };

    if (has_down) {
      note_accept(pick_random(best_down));
      continue;
    }
    bool try_neutral = has_neutral && (!has_up || rng.unit() < 0.9);
    if (try_neutral) {
      note_accept(pick_random(0));
      continue;
    }
    if (has_up) {
      const FlipMove& m = pick_random(best_up);
      double p = std::exp(-double(best_up) / std::max(temp, 1e-12));
      if (rng.unit() < p) {
        note_accept(m);
        continue;
      }
      ++rejects;
    } else {
      ++rejects;
    }

    if (rejects > opt.restart_after_rejects) {
      // restart from the best complex with a fresh sub-seed
      if (!improved_since_restart) {
        if (++stale_restarts > opt.max_stale_restarts) break;
      } else {
        stale_restarts = 0;
      }
      improved_since_restart = false;
      ++restart_idx;
      rng = Rng(master.fork(restart_idx));
      temp = opt.t0;
      rejects = 0;
      cur = best;
      res.trace.moves.resize(best_len);
      while (!res.trace.checkpoints.empty() &&
             res.trace.checkpoints.back() > (long long)best_len)
        res.trace.checkpoints.pop_back();
    }
  }

  res.trace.moves.resize(best_len);
  while (!res.trace.checkpoints.empty() && res.trace.checkpoints.back() > (long long)best_len)
    res.trace.checkpoints.pop_back();
  res.trace.checkpoints.push_back((long long)best_len);
  res.complex = best;
  res.reached_minimal = is_simplex_boundary(best);
  return res;
}

SimplicialComplex replay_trace(const SimplicialComplex& c, const ReduceTrace& t) {
  SimplicialComplex cur = c;
  for (const auto& m : t.moves) cur = apply_move(cur, m);
  return cur;
}

std::string trace_to_string(const ReduceTrace& t) {
  std::ostringstream out;
  out << "# seed=" << t.seed << "\n";
  out << "# t0=" << t.t0 << "\n";
  out << "# cooling=" << t.cooling << "\n";
  out << "# budget=" << t.budget << "\n";
  out << "# frozen=";
  for (std::size_t i = 0; i < t.frozen.size(); ++i) {
    if (i) out << ", ";
    out << face_str(t.frozen[i]);
  }
  out << "\n# checkpoints=";
  for (std::size_t i = 0; i < t.checkpoints.size(); ++i) {
    if (i) out << " ";
    out << t.checkpoints[i];
  }
  out << "\n";
  for (const auto& m : t.moves) out << face_str(m.face) << " | " << face_str(m.cofacet) << "\n";
  return out.str();
}

namespace {

Face parse_face_str(const std::string& s) {
  std::istringstream in(s);
  Face f;
  long long v;
  while (in >> v) f.push_back(Vertex(v));
  return normalized_face(std::move(f));
}

}  // namespace

ReduceTrace trace_from_string(const std::string& text) {
  ReduceTrace t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      while (!key.empty() && key.front() == ' ') key.erase(key.begin());
      while (!key.empty() && key.back() == ' ') key.pop_back();
      std::string val = line.substr(eq + 1);
      if (key == "seed") t.seed = std::stoull(val);
      else if (key == "t0") t.t0 = std::stod(val);
      else if (key == "cooling") t.cooling = std::stod(val);
      else if (key == "budget") t.budget = std::stoll(val);
      else if (key == "checkpoints") {
        std::istringstream vs(val);
        long long x;
        while (vs >> x) t.checkpoints.push_back(x);
      } else if (key == "frozen") {
        std::istringstream vs(val);
        std::string part;
        while (std::getline(vs, part, ',')) {
          Face f = parse_face_str(part);
          if (!f.empty()) t.frozen.push_back(std::move(f));
        }
      }
      continue;
    }
    auto bar = line.find('|');
    if (bar == std::string::npos) throw Error(Err::Parse, "trace line without '|': " + line);
    FlipMove m{parse_face_str(line.substr(0, bar)), parse_face_str(line.substr(bar + 1))};
    if (m.face.empty() || m.cofacet.empty())
      throw Error(Err::Parse, "bad trace line: " + line);
    t.moves.push_back(std::move(m));
  }
  return t;
}

}  // namespace cplx

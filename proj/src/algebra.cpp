#include "cplx/algebra.hpp"

#include <algorithm>
#include <map>

#include "cplx/faceposet.hpp"

namespace cplx {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::mul(const IntegerMatrix& o) const {
  IntegerMatrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const BigInt& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

BigInt det(const IntegerMatrix& m) {
  // fraction-free Gaussian elimination (Bareiss)
  if (m.rows != m.cols) return 0;
  int n = m.rows;
  IntegerMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
  IntegerMatrix d, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const BigInt& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += q * d.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void add_col(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += q * d.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

BigInt absval(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
  SnfWork w{m, IntegerMatrix::identity(m.rows), IntegerMatrix::identity(m.cols)};
  int n = std::min(m.rows, m.cols);
  int t = 0;
  for (; t < n; ++t) {
    // find a pivot of minimal absolute value in the remaining block
    int pr = -1, pc = -1;
    BigInt best;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        const BigInt& x = w.d.at(i, j);
        if (x == 0) continue;
        BigInt ax = absval(x);
        if (pr < 0 || ax < best) {
          best = ax;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // remaining block is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (w.d.at(i, t) == 0) continue;
        BigInt q = w.d.at(i, t) / w.d.at(t, t);
        w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) {
          w.swap_rows(t, i);  // remainder is smaller, continue euclid
          dirty = true;
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (w.d.at(t, j) == 0) continue;
        BigInt q = w.d.at(t, j) / w.d.at(t, t);
        w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide every remaining entry
      bool fixed = true;
      for (int i = t + 1; i < m.rows && fixed; ++i)
        for (int j = t + 1; j < m.cols && fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }
  SnfResult res;
  res.d = w.d;
  res.u = w.u;
  res.v = w.v;
  res.rank = t;
  for (int i = 0; i < t; ++i) res.diag.push_back(w.d.at(i, i));
  return res;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  const auto& lower = c.faces(k - 1);
  const auto& upper = c.faces(k);
  std::map<Face, int> lower_index;
  for (int i = 0; i < int(lower.size()); ++i) lower_index[lower[i]] = i;
  IntegerMatrix m(int(lower.size()), int(upper.size()));
  for (int j = 0; j < int(upper.size()); ++j) {
    const Face& f = upper[j];
    int sign = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Face g = f;
      g.erase(g.begin() + i);
      m.at(lower_index.at(g), j) = sign;
      sign = -sign;
    }
  }
  return m;
}

std::string HomologyGroups::Group::str() const {
  if (is_trivial()) return "0";
  std::string s;
  if (betti == 1)
    s = "Z";
  else if (betti > 1)
    s = "Z^" + std::to_string(betti);
  for (const BigInt& t : torsion) {
    if (!s.empty()) s += "+";
    s += "Z/" + t.str();
  }
  return s;
}

HomologyGroups homology(const SimplicialComplex& c, bool reduced) {
  HomologyGroups h;
  h.reduced = reduced;
  int d = c.dim();
  if (d < 0) return h;
  std::vector<int> rank(d + 2, 0);
  std::vector<std::vector<BigInt>> tors(d + 2);
  for (int k = 1; k <= d; ++k) {
    SnfResult s = smith_normal_form(boundary_matrix(c, k));
    rank[k] = s.rank;
    for (const BigInt& x : s.diag)
      if (x > 1) tors[k].push_back(x);
  }
  if (reduced) {
    // augmentation map: one row of ones over the vertices
    IntegerMatrix aug(1, int(c.faces(0).size()));
    for (int j = 0; j < aug.cols; ++j) aug.at(0, j) = 1;
    rank[0] = smith_normal_form(aug).rank;  // 1 for nonempty
  }
  for (int k = 0; k <= d; ++k) {
    HomologyGroups::Group g;
    g.betti = (long long)c.faces(k).size() - rank[k] - rank[k + 1];
    g.torsion = tors[k + 1];
    h.groups.push_back(std::move(g));
  }
  return h;
}

long long euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  FVector fv = c.f_vector();
  for (std::size_t k = 0; k < fv.counts.size(); ++k)
    chi += (k % 2 == 0) ? fv.counts[k] : -fv.counts[k];
  return chi;
}

namespace {

bool collapse_dfs(FacePoset& poset, int depth_left, long long& budget,
                  std::vector<CollapseStep>& trace) {
  if (budget-- <= 0) return false;
  auto free = poset.free_pairs();
  if (free.empty()) return poset.alive_count() == 1;
  int tries = depth_left > 0 ? int(free.size()) : 1;
  for (int i = 0; i < tries; ++i) {
    auto [f, cf] = free[i];
    poset.collapse(f, cf);
    trace.push_back({poset.face(f), poset.face(cf)});
    if (collapse_dfs(poset, i > 0 ? depth_left - 1 : depth_left, budget, trace)) return true;
    trace.pop_back();
    poset.uncollapse(f, cf);
    if (budget <= 0) break;
  }
  return false;
}

}  // namespace

CollapseResult is_collapsible(const SimplicialComplex& c, const CollapseOptions& opt) {
  CollapseResult res;
  FacePoset poset(c);
  if (opt.backtrack_depth <= 0) {
    long long steps = opt.step_budget;
    for (;;) {
      if (steps-- <= 0) break;
      auto free = poset.free_pairs();
      if (free.empty()) break;
      auto [f, cf] = free[0];
      poset.collapse(f, cf);
      res.trace.push_back({poset.face(f), poset.face(cf)});
    }
    res.collapsible = poset.alive_count() == 1;
  } else {
    long long budget = opt.step_budget;
    res.collapsible = collapse_dfs(poset, opt.backtrack_depth, budget, res.trace);
  }
  res.remainder = poset.live_faces();
  return res;
}

bool replay_collapse(const SimplicialComplex& c, const std::vector<CollapseStep>& trace) {
  FacePoset poset(c);
  for (const auto& step : trace) {
    int f = poset.id_of(step.free_face);
    int cf = poset.id_of(step.coface);
    if (f < 0 || cf < 0) return false;
    if (poset.free_partner(f) != cf) return false;
    poset.collapse(f, cf);
  }
  return poset.alive_count() == 1 && poset.live_faces()[0].size() == 1;
}

}  // namespace cplx

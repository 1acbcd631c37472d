#include "cplx/faceposet.hpp"

#include <algorithm>
#include <set>

namespace cplx {

FacePoset::FacePoset(const std::vector<Face>& facets) {
  std::set<Face> all;
  // all nonempty subsets of every facet
  for (const Face& f : facets) {
    std::size_t n = f.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      Face g;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) g.push_back(f[i]);
      all.insert(std::move(g));
    }
  }
  faces_.assign(all.begin(), all.end());
  std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (int i = 0; i < int(faces_.size()); ++i) index_[faces_[i]] = i;

  covers_.resize(faces_.size());
  covered_.resize(faces_.size());
  for (int i = 0; i < int(faces_.size()); ++i) {
    const Face& f = faces_[i];
    // remove one vertex -> immediate subface
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f.size() == 1) break;
      Face g = f;
      g.erase(g.begin() + j);
      auto it = index_.find(g);
      if (it != index_.end()) {
        covered_[i].push_back(it->second);
        covers_[it->second].push_back(i);
      }
    }
  }
  live_cover_count_.resize(faces_.size());
  for (int i = 0; i < int(faces_.size()); ++i) live_cover_count_[i] = int(covers_[i].size());
  alive_.assign(faces_.size(), true);
  alive_count_ = faces_.size();
}

int FacePoset::id_of(const Face& f) const {
  auto it = index_.find(f);
  return it == index_.end() ? -1 : it->second;
}

int FacePoset::free_partner(int id) const {
  if (!alive_[id] || live_cover_count_[id] != 1) return -1;
  int partner = -1;
  for (int c : covers_[id])
    if (alive_[c]) {
      partner = c;
      break;
    }
  if (partner == -1 || live_cover_count_[partner] != 0) return -1;
  return partner;
}

std::vector<std::pair<int, int>> FacePoset::free_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < int(faces_.size()); ++i) {
    int p = free_partner(i);
    if (p >= 0) out.emplace_back(i, p);
  }
  // ids are sorted by (dim, lex); free faces of maximal dimension first
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    std::size_t da = faces_[a.first].size(), db = faces_[b.first].size();
    if (da != db) return da > db;
    return faces_[a.first] < faces_[b.first];
  });
  return out;
}

void FacePoset::collapse(int face_id, int coface_id) {
  alive_[face_id] = false;
  alive_[coface_id] = false;
  alive_count_ -= 2;
  for (int s : covered_[face_id])
    if (alive_[s]) --live_cover_count_[s];
  for (int s : covered_[coface_id])
    if (alive_[s]) --live_cover_count_[s];
}

void FacePoset::uncollapse(int face_id, int coface_id) {
  for (int s : covered_[face_id])
    if (alive_[s]) ++live_cover_count_[s];
  for (int s : covered_[coface_id])
    if (alive_[s]) ++live_cover_count_[s];
  alive_[face_id] = true;
  alive_[coface_id] = true;
  alive_count_ += 2;
}

std::vector<Face> FacePoset::live_faces() const {
  std::vector<Face> out;
  for (int i = 0; i < int(faces_.size()); ++i)
    if (alive_[i]) out.push_back(faces_[i]);
  return out;
}

std::vector<Face> FacePoset::live_faces_of_size(std::size_t k) const {
  std::vector<Face> out;
  for (int i = 0; i < int(faces_.size()); ++i)
    if (alive_[i] && faces_[i].size() == k) out.push_back(faces_[i]);
  return out;
}

}  // namespace cplx

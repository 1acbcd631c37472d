#include "cplx/group.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cplx/complex.hpp"

namespace cplx {

GroupTable GroupTable::from_table(std::string name, int n, std::vector<int> table) {
  if (n < 1 || int(table.size()) != n * n)
    throw Error(Err::Parse, "group table must have n*n entries");
  for (int x : table)
    if (x < 0 || x >= n) throw Error(Err::Parse, "group table entry out of range");
  GroupTable g;
  g.name = std::move(name);
  g.n = n;
  g.table = std::move(table);
  // identity
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      if (g.mul(a, b) != b || g.mul(b, a) != b) ok = false;
    if (ok) e = a;
  }
  if (e < 0) throw Error(Err::Parse, "group table has no identity");
  g.identity = e;
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == e && g.mul(b, a) == e) g.inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse[a] < 0) throw Error(Err::Parse, "group table element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(Err::Parse, "group table is not associative");
  return g;
}

GroupTable GroupTable::parse(const std::string& name, const std::string& text) {
  std::istringstream in(text);
  int n;
  if (!(in >> n)) throw Error(Err::Parse, "group table: missing order");
  std::vector<int> table;
  int x;
  while (in >> x) table.push_back(x);
  return from_table(name, n, std::move(table));
}

std::string GroupTable::serialize() const {
  std::ostringstream out;
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << " ";
      out << mul(a, b);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// builds the table of a permutation group given as a sorted list of
// permutations; mul(a,b) = a after b
GroupTable from_perms(std::string name, std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  int n = int(perms.size());
  std::size_t deg = perms[0].size();
  auto find = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return int(it - perms.begin());
  };
  std::vector<int> table(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> comp(deg);
      for (std::size_t x = 0; x < deg; ++x) comp[x] = perms[a][perms[b][x]];
      table[a * n + b] = find(comp);
    }
  return GroupTable::from_table(std::move(name), n, std::move(table));
}

std::vector<std::vector<int>> all_perms(int deg) {
  std::vector<int> p(deg);
  for (int i = 0; i < deg; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

GroupTable GroupTable::symmetric3() { return from_perms("S3", all_perms(3)); }

GroupTable GroupTable::alternating4() {
  std::vector<std::vector<int>> even;
  for (auto& p : all_perms(4))
    if (perm_sign(p) == 1) even.push_back(p);
  return from_perms("A4", std::move(even));
}

GroupTable GroupTable::dihedral4() {
  // symmetries of a square with corners 0..3: closure of rotation and a
  // reflection
  std::set<std::vector<int>> elems;
  std::vector<int> r = {1, 2, 3, 0};
  std::vector<int> s = {0, 3, 2, 1};
  elems.insert({0, 1, 2, 3});
  for (;;) {
    std::set<std::vector<int>> next = elems;
    for (const auto& a : elems)
      for (const auto* g : {&r, &s}) {
        std::vector<int> comp(4);
        for (int x = 0; x < 4; ++x) comp[x] = (*g)[a[x]];
        next.insert(comp);
      }
    if (next.size() == elems.size()) break;
    elems = std::move(next);
  }
  return from_perms("D4", std::vector<std::vector<int>>(elems.begin(), elems.end()));
}

GroupTable GroupTable::named(const std::string& spec) {
  if (spec == "S3" || spec == "s3") return symmetric3();
  if (spec == "A4" || spec == "a4") return alternating4();
  if (spec == "D4" || spec == "d4") return dihedral4();
  std::ifstream in(spec);
  if (!in) throw Error(Err::Parse, "unknown group '" + spec + "' (not S3/A4/D4 or a table file)");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(spec, ss.str());
}

}  // namespace cplx

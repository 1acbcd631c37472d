#pragma once

#include <string>
#include <vector>

namespace cplx {

// Finite group as a multiplication table over element indices 0..n-1.
// Text format: first token n, then n*n entries row by row.
struct GroupTable {
  std::string name;
  int n = 0;
  std::vector<int> table;  // table[a*n+b] = a*b
  int identity = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[a * n + b]; }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  static GroupTable from_table(std::string name, int n, std::vector<int> table);
  static GroupTable parse(const std::string& name, const std::string& text);
  std::string serialize() const;

  static GroupTable symmetric3();   // S3, order 6
  static GroupTable alternating4(); // A4, order 12
  static GroupTable dihedral4();    // D4, order 8

  // "S3"/"A4"/"D4" or a path to a table file
  static GroupTable named(const std::string& spec);
};

}  // namespace cplx

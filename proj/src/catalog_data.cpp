// Facet tables in .cplx text form, kept as verbatim resources so they can be
// proofread line by line against the source tables. Column breaks from the
// tables are preserved as comments.

namespace cplx::catalog::data {

// the 9 tetrahedra shielding the three knot edges (column 1 of the 46-facet
// table; identical to column 1 of the 38-facet table)
const char* shield9 = R"(# shield tetrahedra, three per knot edge
1 2 6 9
1 2 6 12
1 2 9 12
1 3 5 8
1 3 5 11
1 3 8 11
2 3 4 7
2 3 4 10
2 3 7 10
)";

// the 16 triangles closing the holes of the knot
const char* closing16 = R"(4 5 6
1 4 6
2 4 5
3 5 6
1 4 7
2 5 8
3 6 9
1 7 10
2 8 11
3 9 12
1 5 10
2 6 11
3 4 12
4 5 10
5 6 11
4 6 12
)";

// columns 2-6 of the 46-facet table: the 37 thickening tetrahedra
const char* thickening37 = R"(# column 2
1 4 6 12
2 4 5 10
3 5 6 11
# column 3
1 4 7 13
2 4 7 13
1 7 10 13
2 7 10 13
1 5 10 13
2 5 10 13
1 5 8 13
2 5 8 13
# column 4
2 5 8 14
3 5 8 14
2 8 11 14
3 8 11 14
2 6 11 14
3 6 11 14
2 6 9 14
3 6 9 14
# column 5
3 6 9 15
1 6 9 15
3 9 12 15
1 9 12 15
3 4 12 15
1 4 12 15
3 4 7 15
1 4 7 15
# column 6
4 5 6 16
1 4 6 16
1 4 13 16
2 4 13 16
2 4 5 16
2 5 14 16
3 5 14 16
3 5 6 16
3 6 15 16
1 6 15 16
)";

// the 28 boundary triangles of the 46-facet ball
const char* boundary28 = R"(1 13 16
2 13 16
2 14 16
3 14 16
3 15 16
1 15 16
4 5 6
4 5 10
1 5 10
1 5 11
1 8 11
2 8 11
2 8 13
1 8 13
5 6 11
2 6 11
2 6 12
2 9 12
3 9 12
3 9 14
2 9 14
4 6 12
3 4 12
3 4 10
3 7 10
1 7 10
1 7 15
3 7 15
)";

// the 12-vertex 38-facet ball
const char* b3_12_38 = R"(# column 1
1 2 6 9
1 2 6 12
1 2 9 12
1 3 5 8
1 3 5 11
1 3 8 11
2 3 4 7
2 3 4 10
2 3 7 10
# column 2
1 5 8 10
1 5 10 11
1 6 7 9
1 6 7 12
1 7 8 10
1 7 8 11
1 7 10 12
1 9 10 12
# column 3
2 4 5 7
2 4 5 10
2 5 8 10
2 6 9 11
2 7 8 10
2 7 8 11
2 8 9 11
2 8 9 12
# column 4
3 4 6 7
3 4 6 10
3 5 9 11
3 6 7 12
3 7 10 12
3 8 9 11
3 8 9 12
3 9 10 12
# column 5
4 5 6 7
4 5 6 10
5 6 7 9
5 6 9 11
5 6 10 11
)";

// the 18 facets of the star of vertex 13 in the 13-vertex sphere
const char* star13 = R"(1 7 9 13
1 7 11 13
1 9 10 13
1 10 11 13
2 5 7 13
2 5 8 13
2 6 11 13
2 6 12 13
2 7 11 13
2 8 12 13
3 5 8 13
3 5 9 13
3 6 10 13
3 6 12 13
3 8 12 13
3 9 10 13
5 7 9 13
6 10 11 13
)";

// the 16 triangles closing the knot holes in the reduced sphere
const char* closing16_v2 = R"(4 5 6
4 6 7
2 4 5
5 6 9
1 6 7
2 5 8
3 5 9
1 7 10
2 8 11
3 9 12
1 5 10
2 6 11
3 6 12
4 5 10
5 6 11
3 4 6
)";

// the trefoil cycle itself
const char* knot_cycle = R"(1 2
1 3
2 3
)";

}  // namespace cplx::catalog::data

#pragma once

#include <string>
#include <vector>

#include "schrome/complex.hpp"

namespace schrome {

// Named complexes used throughout the test corpus:
//   K_EX     pure 2-complex with facets {1,2,3},{2,3,4},{4,5,6}
//   MB       5-vertex Moebius band, facets {1,2,4},{2,4,5},{2,3,5},{1,3,5},{1,3,4}
//   MT7      7-vertex torus, facets {i,i+1,i+3} and {i,i+2,i+3} mod 7
//   P2_6     6-vertex projective plane (antipodal icosahedron quotient)
//   T2_9     9-vertex torus (3x3 grid with diagonals, opposite sides glued)
//   TRI_PATH three triangles: two sharing an edge, third attached at a vertex
//   TRI_FAN  same pieces wedged at a vertex of the shared edge
// TRI_PATH and TRI_FAN are non-isomorphic but have equal chromatic tables.
SimplicialComplex builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

}  // namespace schrome

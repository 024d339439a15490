#pragma once

#include "cactoidlab/surface.hpp"

namespace cactoidlab {

// Any rational strictly inside (lo, hi). Lengths with no closed rational
// form (cevians, chords) are picked from their valid open interval; the
// metric consequences are always measured afterwards, never assumed.
Rational pick_length(const Rational& lo, const Rational& hi);

// Octahedron mesh; graph diameter equals `diameter` exactly.
TriSurface sphere_mesh(const Rational& diameter, const std::string& prefix = "");

// Hexagon fan; graph diameter equals `diameter` exactly, one boundary loop.
TriSurface disc_mesh(const Rational& diameter, const std::string& prefix = "");

// Square prism ring, two boundary loops, edge scale `edge`.
TriSurface annulus_mesh(const Rational& edge, const std::string& prefix = "");

// Five-vertex projective-plane-with-hole strip, one boundary loop,
// non-orientable, all edges `edge`.
TriSurface mobius_mesh(const Rational& edge, const std::string& prefix = "");

// Six-vertex closed non-orientable mesh with euler characteristic 1.
TriSurface rp2_mesh(const Rational& edge, const std::string& prefix = "");

// 3x3 grid torus, closed, orientable, euler characteristic 0.
TriSurface torus_mesh(const Rational& edge, const std::string& prefix = "");

// Removes the listed faces, opening one boundary loop per face when the
// faces are pairwise vertex-disjoint. Validates the result.
TriSurface punctured(const TriSurface& s, const std::vector<int>& faces);

// All edge lengths multiplied by factor > 0.
TriSurface scaled(const TriSurface& s, const Rational& factor);

TriSurface with_prefix(const TriSurface& s, const std::string& prefix);

// Raw disjoint union; not a valid TriSurface on its own (disconnected).
TriSurface disjoint_union(const TriSurface& a, const TriSurface& b);

// Graph diameter of the mesh edge graph.
Rational mesh_diameter(const TriSurface& s);

}  // namespace cactoidlab

#pragma once

#include <string>
#include <vector>

#include "cactoidlab/surface.hpp"

namespace cactoidlab {

// Symbolic cut calculus on surface classes: only connectivity numbers and
// orientability constraints are tracked, never embedded curves.

enum class CutKind { wedge_split, two_point_identified, plain_surface };

enum class OrientationConstraint { orientable, non_orientable, unconstrained };

struct CutPart {
    int connectivity = 0;
    OrientationConstraint orientation = OrientationConstraint::unconstrained;
};

struct CutOutcome {
    CutKind kind = CutKind::plain_surface;
    std::vector<CutPart> parts;  // two for wedge_split, one otherwise
    // two_point_identified only: the glued points lie on the part boundary
    bool boundary_identification = false;
    std::string orientability_note;
    int source_connectivity = 0;
    bool source_orientable = true;
};

// Cutting along a separating simple arc (not contractible together with a
// boundary subarc): wedge splits with c1 + c2 = c + 1, both parts >= 2.
// At least one part non-orientable iff the input is non-orientable.
std::vector<CutOutcome> cut_separating_arc(const SurfaceInvariants& s);

// Cutting along a non-separating simple arc: one part of connectivity
// c - 1 with a boundary 2-point identification. The part needs a boundary
// to hold the glued points, so c = 1 admits no such arc.
CutOutcome cut_nonseparating_arc(const SurfaceInvariants& s);

// Collapsing a non-contractible simple Jordan curve: wedge pairs summing
// to c, an interior 2-point identification of a c - 2 surface, or (only
// when the input is non-orientable) a plain c - 1 surface.
std::vector<CutOutcome> cut_jordan(const SurfaceInvariants& s);

// Inverse arithmetic: reapplies the gluing-side connectivity bookkeeping
// (wedge on boundary points, 2-point identification +1 boundary / +2
// interior) and returns the reconstructed connectivity number.
int reglue_roundtrip(const CutOutcome& outcome);

}  // namespace cactoidlab

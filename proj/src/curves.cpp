#include "cactoidlab/curves.hpp"

namespace cactoidlab {

namespace {

CutPart part_of(int connectivity, OrientationConstraint o) {
    return {connectivity, o};
}

// wedge pairs: both parts orientable iff the source is orientable; a
// non-orientable source only constrains the pair jointly
void set_wedge_orientations(CutOutcome& out) {
    if (out.source_orientable) {
        for (auto& p : out.parts) p.orientation = OrientationConstraint::orientable;
    } else {
        out.orientability_note = "at least one part non-orientable";
    }
}

}  // namespace

std::vector<CutOutcome> cut_separating_arc(const SurfaceInvariants& s) {
    if (s.boundary_count < 1) {
        throw ValidationError("separating simple arc needs a boundary");
    }
    if (s.connectivity < 3) {
        throw ValidationError("no admissible split: parts need connectivity >= 2");
    }
    std::vector<CutOutcome> outs;
    for (int c1 = 2; c1 <= (s.connectivity + 1) / 2; ++c1) {
        int c2 = s.connectivity + 1 - c1;
        CutOutcome out;
        out.kind = CutKind::wedge_split;
        out.source_connectivity = s.connectivity;
        out.source_orientable = s.orientable;
        out.boundary_identification = true;  // wedge point on both part boundaries
        out.parts = {part_of(c1, OrientationConstraint::unconstrained),
                     part_of(c2, OrientationConstraint::unconstrained)};
        set_wedge_orientations(out);
        outs.push_back(std::move(out));
    }
    return outs;
}

CutOutcome cut_nonseparating_arc(const SurfaceInvariants& s) {
    if (s.boundary_count < 1) {
        throw ValidationError("non-separating simple arc needs a boundary");
    }
    if (s.connectivity < 1) throw ValidationError("connectivity too small");
    if (s.connectivity == 1) {
        // the part would be a sphere, which has no boundary for the glued points
        throw ValidationError("no such arc: part would have no boundary");
    }
    CutOutcome out;
    out.kind = CutKind::two_point_identified;
    out.boundary_identification = true;
    out.source_connectivity = s.connectivity;
    out.source_orientable = s.orientable;
    out.parts = {part_of(s.connectivity - 1,
                         s.orientable ? OrientationConstraint::orientable
                                      : OrientationConstraint::unconstrained)};
    if (!s.orientable) out.orientability_note = "part orientability unconstrained";
    return out;
}

std::vector<CutOutcome> cut_jordan(const SurfaceInvariants& s) {
    if (s.connectivity < 1) {
        throw ValidationError("no non-contractible Jordan curve on a sphere class");
    }
    std::vector<CutOutcome> outs;
    for (int c1 = 1; c1 <= s.connectivity / 2; ++c1) {
        CutOutcome out;
        out.kind = CutKind::wedge_split;
        out.source_connectivity = s.connectivity;
        out.source_orientable = s.orientable;
        out.parts = {part_of(c1, OrientationConstraint::unconstrained),
                     part_of(s.connectivity - c1, OrientationConstraint::unconstrained)};
        set_wedge_orientations(out);
        outs.push_back(std::move(out));
    }
    if (s.connectivity >= 2) {
        CutOutcome out;
        out.kind = CutKind::two_point_identified;
        out.boundary_identification = false;
        out.source_connectivity = s.connectivity;
        out.source_orientable = s.orientable;
        out.parts = {part_of(s.connectivity - 2,
                             s.orientable ? OrientationConstraint::orientable
                                          : OrientationConstraint::unconstrained)};
        if (!s.orientable) out.orientability_note = "orientability unconstrained";
        outs.push_back(std::move(out));
    }
    if (!s.orientable) {
        CutOutcome out;
        out.kind = CutKind::plain_surface;
        out.source_connectivity = s.connectivity;
        out.source_orientable = false;
        out.parts = {part_of(s.connectivity - 1, OrientationConstraint::unconstrained)};
        outs.push_back(std::move(out));
    }
    return outs;
}

int reglue_roundtrip(const CutOutcome& outcome) {
    switch (outcome.kind) {
        case CutKind::wedge_split: {
            if (outcome.parts.size() != 2) {
                throw ValidationError("wedge split needs two parts");
            }
            int sum = outcome.parts[0].connectivity + outcome.parts[1].connectivity;
            // a boundary wedge comes from an arc glue, which merges one boundary
            return sum - (outcome.boundary_identification ? 1 : 0);
        }
        case CutKind::two_point_identified:
            if (outcome.parts.size() != 1) {
                throw ValidationError("2-point identification needs one part");
            }
            return outcome.parts[0].connectivity +
                   (outcome.boundary_identification ? 1 : 2);
        case CutKind::plain_surface:
            if (outcome.parts.size() != 1) {
                throw ValidationError("plain outcome needs one part");
            }
            return outcome.parts[0].connectivity + 1;
    }
    throw ValidationError("unknown outcome kind");
}

}  // namespace cactoidlab

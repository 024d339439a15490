#pragma once

#include "cactoidlab/surface.hpp"

namespace cactoidlab {

struct GluingStep {
    enum class Kind { wedge, two_point, arc_glue };
    Kind kind;
    std::string arguments;
    bool boundary_flag = false;  // two_point only: both points on the tracked boundary
};

struct GluingHistory {
    std::vector<GluingStep> steps;

    int k() const;   // number of two_point steps
    int k0() const;  // boundary-flagged two_point steps
};

// Metric quotient by identifying points a and b. The quotient distance has
// the closed form min(d(i,j), d(i,a)+d(b,j), d(i,b)+d(a,j)); for a metric
// input only a and b can collapse, but pseudometric inputs may merge more
// points, reported in zero_classes instead of being silently dropped.
struct QuotientResult {
    FiniteMetricSpace space;
    PointMap projection;
    std::vector<std::vector<std::string>> zero_classes;
    bool extra_collapse = false;  // a class beyond {a,b} merged
};

QuotientResult two_point_identification(const FiniteMetricSpace& x, int a, int b);

struct WedgeResult {
    FiniteMetricSpace space;
    PointMap include_x;
    PointMap include_y;
};

// One-point gluing: cross distances d(x,y) = d(x,p) + d(q,y).
WedgeResult wedge_sum(const FiniteMetricSpace& x, int p, const FiniteMetricSpace& y, int q);

// Identifies two boundary arcs, given as vertex label paths along boundary
// loops, by an arclength-preserving matching. Edges are split as needed so
// the cumulative length profiles agree; the arcs must have equal total
// length and may share at most their endpoints.
TriSurface glue_boundary_arcs(const TriSurface& s, const std::vector<std::string>& arc1,
                              const std::vector<std::string>& arc2);

// Splits boundary edges so that an arc of total length len with midpoint v
// exists along v's boundary loop; returns the new surface and the arc path.
std::pair<TriSurface, std::vector<std::string>> boundary_arc_centered(
    const TriSurface& s, const std::string& v, const Rational& len);

enum class HandleMode { interior, boundary };

struct HandleOptions {
    HandleMode mode = HandleMode::interior;
    // reverses one ring (interior) or the rail pairing (boundary); the two
    // choices realize the orientable and non-orientable variants
    bool flip = false;
    int n = 2;  // scale index: neighbourhood radii and girth shrink like 1/n
};

// Interior mode: removes small disc neighbourhoods around a and b and glues
// a thin tube (connectivity +2). Boundary mode: glues a thin strip between
// boundary sub-arcs at a and b (connectivity +1).
TriSurface identification_to_handle(const TriSurface& s, const std::string& a,
                                    const std::string& b, const HandleOptions& opt);

// Removes interior vertex v by corner truncation and leaves a hole whose
// boundary is the returned ring (cyclic vertex labels). Exposed for tube
// constructions between separate pieces.
std::pair<TriSurface, std::vector<std::string>> truncate_vertex(const TriSurface& s,
                                                                const std::string& v,
                                                                int n);

// Triangle strip joining two hole rings (each edge of a ring must lie in
// exactly one face). flip reverses the second ring traversal.
TriSurface bridge_rings(const TriSurface& s, const std::vector<std::string>& ring_a,
                        const std::vector<std::string>& ring_b, bool flip);

}  // namespace cactoidlab

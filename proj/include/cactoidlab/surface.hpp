#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactoidlab/metric_space.hpp"

namespace cactoidlab {

struct SurfaceInvariants {
    bool orientable = true;
    int euler_char = 0;
    int boundary_count = 0;
    int connectivity = 0;          // 2 - euler_char
    int reduced_connectivity = 0;  // connectivity - boundary_count
};

// A triangulated length surface: positive edge lengths, every edge in one
// or two faces, boundary edges forming disjoint cycles. Wedge complexes
// (two triangulated pieces sharing a single vertex) are representable;
// boundary cycles are traced through face fans so they stay disjoint at
// such vertices.
struct TriSurface {
    struct Edge {
        int u, v;  // u < v
        Rational length;
    };
    struct Face {
        int a, b, c;  // oriented
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    int vertex_index(const std::string& label) const;  // throws if absent
    std::optional<int> find_vertex(const std::string& label) const;
    int edge_index(int u, int v) const;  // -1 if absent
};

// Validates all TriSurface invariants; throws ValidationError with the
// first violation.
TriSurface make_surface(std::vector<std::string> vertices,
                        std::vector<TriSurface::Edge> edges,
                        std::vector<TriSurface::Face> faces);

// Combinatorial structure derived from a validated surface.
struct SurfaceTopology {
    std::vector<std::vector<int>> edge_faces;     // per edge, incident faces
    std::vector<std::vector<int>> boundary_loops; // per loop, vertex cycle
    std::vector<std::vector<int>> boundary_loop_edges;
    std::vector<char> edge_on_boundary;
};

SurfaceTopology surface_topology(const TriSurface& s);

SurfaceInvariants invariants(const TriSurface& s);

// One round of midpoint subdivision: each edge halves, each face becomes
// four, medial edges get the flat-triangle half lengths.
TriSurface subdivide(const TriSurface& s);

// Splits one edge at fraction t (0 < t < 1) of its length from the u end,
// subdividing each incident face by a cevian with an admissible rational
// length. The new vertex gets `label` (must be fresh; empty picks one).
TriSurface split_edge(const TriSurface& s, int edge, const Rational& t,
                      std::string label = "");

struct GeodesicMetric {
    FiniteMetricSpace space;
    Rational resolution;  // max refined edge length
    TriSurface refined;
};

// Graph geodesic metric of the surface refined 2^refine-fold.
GeodesicMetric geodesic_metric(const TriSurface& s, int refine);

// Single-source graph distances on the mesh edge graph.
std::vector<Rational> mesh_distances(const TriSurface& s, int source);

struct DoubledSurface {
    TriSurface surface;
    // Vertex label maps of the two copy projections: tau_plus sends every
    // doubled vertex to its representative in the plus copy, tau_minus to
    // the minus copy. Boundary vertices are their own image in both.
    std::map<std::string, std::string> tau_plus;
    std::map<std::string, std::string> tau_minus;
};

DoubledSurface double_surface(const TriSurface& s);

// Length of the shortest edge cycle in the double (the surface itself when
// closed) that is non-trivial in Z/2 homology; nullopt when none exists.
// An upper bound on the edge-graph systole. Diagnostic only: a finite
// computation cannot certify regularity of a sequence, this flags thin
// necks. Null-homologous non-contractible cycles are not detected.
std::optional<Rational> essential_cycle_diagnostic(const TriSurface& s);

}  // namespace cactoidlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactoidlab/gluing.hpp"
#include "cactoidlab/graphs.hpp"
#include "cactoidlab/surface.hpp"

namespace cactoidlab {

// One maximal cyclic piece, described by its class invariants. A piece
// flagged shrinking_family stands for countably many copies with
// diameters tending to zero; such pieces must be sphere or disc class.
struct CactoidPiece {
    std::string name;
    SurfaceInvariants cls;
    Rational diameter = 1;
    std::optional<TriSurface> realization;
    bool shrinking_family = false;
};

struct MetricTree {
    struct Edge {
        int u, v;
        Rational length;
    };

    std::string name;
    std::vector<std::string> nodes;
    std::vector<Edge> edges;

    int node_index(const std::string& label) const;  // throws if absent
};

// One end of a wedge attachment: a named point on a piece (optionally on
// one of its boundary circles) or a leaf node of a tree.
struct AttachmentEnd {
    bool is_tree = false;
    int owner = -1;
    std::string point;
    int circle = -1;  // boundary circle index carrying a piece point, -1 interior
};

struct Attachment {
    std::string name;
    AttachmentEnd a, b;
};

// A named admissible continuum: a set of boundary-circle, wedge-point and
// tree tokens whose point sets chain together into one connected set.
struct Continuum {
    std::string name;
    std::vector<std::pair<int, int>> circles;  // (piece index, circle index)
    std::vector<std::string> wedges;           // attachment names
    std::vector<std::string> trees;            // tree names
};

struct CactoidGraph {
    std::vector<CactoidPiece> pieces;
    std::vector<MetricTree> trees;
    std::vector<Attachment> attachments;
    std::vector<Continuum> grouping;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Checks every structural invariant: piece class arithmetic, tree shape,
// wedge-tree incidence (the whole space is a successive wedge sum),
// shrinking-family attachment rules, and the grouping being a disjoint
// admissible cover of all boundary circles.
ValidationReport validate(const CactoidGraph& g);

// Sum of reduced connectivity numbers plus the continuum count. Throws on
// invalid input.
int connectivity_number(const CactoidGraph& g);

struct NoPreBoundary : ValidationError {
    using ValidationError::ValidationError;
};

// Recomputes the grouping: minimal continuum count, then the maximal
// union, found by closing any minimal grouping under connectors that meet
// it exactly once. Throws NoPreBoundary when no admissible cover exists.
std::vector<Continuum> minimal_preboundary(const CactoidGraph& g);

// Graph rendering of one continuum: circles become cycles through their
// attachment points, trees contribute their edges, wedge points merge
// vertices. Every admissible continuum must pass is_one_cactoid on it.
SimpleGraph continuum_realization(const CactoidGraph& g, const Continuum& c);

struct Pi1Signature {
    std::vector<SurfaceInvariants> surface_factors;  // pieces with nontrivial pi1
    int free_rank = 0;  // one Z factor per 2-point identification
};

Pi1Signature pi1_signature(const CactoidGraph& g, const GluingHistory& h);

struct MainTheoremCertificate {
    int c_target = 0;
    int c0 = 0;
    int k = 0;
    int k0 = 0;
    bool verdict = false;  // c0 <= c_target + k0 - 2k
};

MainTheoremCertificate certify(int c_target, const CactoidGraph& g,
                               const GluingHistory& h);

}  // namespace cactoidlab
